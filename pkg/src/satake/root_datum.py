"""Root data, Weyl group actions, dominance order and Langlands duality.

Lattice vectors are plain tuples of Python ints.  Whether a tuple lives in
the character lattice X* or the cocharacter lattice X_* is fixed by context;
the pairing between the two is the coordinate dot product.

Named types use Bourbaki numbering of the simple roots.  A simply connected
datum stores X* in the basis of fundamental weights (so X_* has the simple
coroots as basis); an adjoint datum stores X* in the basis of simple roots (so
X_* has the fundamental coweights as basis).  GL_n uses the standard
coordinates of Z^n on both sides.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import _linalg as la
from ._cache import BoundedCache

Vector = Tuple[int, ...]

ORBIT_LIMIT = 10**6

_orbit_cache = BoundedCache(20_000)


class DatumError(ValueError):
    """Raised for root data or inputs that violate a structural invariant."""


def pairing(x: Sequence, y: Sequence) -> int:
    return sum(a * b for a, b in zip(x, y))


def _add(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def _sub(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def _scale(k: int, x: Sequence[int]) -> Vector:
    return tuple(k * a for a in x)


# ---------------------------------------------------------------------------
# Finite abelian groups


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A finitely generated abelian group Z/d1 + ... + Z/dk + Z^free_rank.

    ``invariant_factors`` satisfy d1 | d2 | ... with every di >= 2, which
    makes the presentation canonical.
    """

    invariant_factors: Tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        fs = tuple(int(x) for x in self.invariant_factors)
        if any(x < 2 for x in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {fs}")
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "invariant_factors", fs)

    @classmethod
    def from_diagonal(cls, diagonal: Sequence[int], free_rank: int = 0) -> "FiniteAbelianGroup":
        """Canonical form of Z/a1 + Z/a2 + ... for arbitrary positive ai."""
        mat = [[int(a) if i == j else 0 for j in range(len(diagonal))]
               for i, a in enumerate(diagonal)]
        fs = la.invariant_factors(mat) if mat else []
        return cls(tuple(x for x in fs if x > 1), free_rank)

    @property
    def torsion_order(self) -> int:
        n = 1
        for x in self.invariant_factors:
            n *= x
        return n

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors), "free_rank": self.free_rank}

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def cokernel(columns: Sequence[Sequence[int]], ambient_rank: int):
    """Cokernel of the map Z^k -> Z^n whose images of the basis are ``columns``.

    Returns ``(group, U, diagonal)`` where ``U`` is the unimodular row
    transform of the Smith normal form; the coset of ``y`` is read off from
    ``U @ y``.
    """
    if not columns:
        return FiniteAbelianGroup((), ambient_rank), la.identity(ambient_rank), []
    a = la.transpose(columns)
    u, dmat, _ = la.smith_normal_form(a)
    diag = [dmat[i][i] for i in range(min(len(dmat), len(dmat[0])))]
    nonzero = [x for x in diag if x]
    group = FiniteAbelianGroup(tuple(x for x in nonzero if x > 1), ambient_rank - len(nonzero))
    return group, u, diag


# ---------------------------------------------------------------------------
# Cartan matrices


def cartan_matrix(series: str, n: int) -> List[List[int]]:
    """Cartan matrix ``C[i][j] = <alpha_i, coroot_j>`` in Bourbaki numbering."""
    series = series.upper()
    valid = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}
    if series not in valid or n < valid[series]:
        raise DatumError(f"unknown Cartan type {series}{n}")
    if (series == "E" and n > 8) or (series == "F" and n != 4) or (series == "G" and n != 2):
        raise DatumError(f"unknown Cartan type {series}{n}")
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, long_to_short=1):
        # i is the long root when long_to_short > 1
        c[i][j] = -long_to_short
        c[j][i] = -1

    if series in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if series == "B" and n >= 2:
            bond(n - 2, n - 1, 2)
        if series == "C" and n >= 2:
            bond(n - 1, n - 2, 2)
    elif series == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif series == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif series == "F":
        bond(0, 1)
        bond(1, 2, 2)
        bond(2, 3)
    elif series == "G":
        bond(1, 0, 3)
    return c


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> Optional[List[Fraction]]:
    """Root lengths l_j with C[i][j] * l_j symmetric, normalised to 1 on the
    first node of each connected component; None if not symmetrizable."""
    n = len(cartan)
    lengths: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if lengths[start] is not None:
            continue
        lengths[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or cartan[i][j] == 0:
                    continue
                lj = Fraction(cartan[j][i]) * lengths[i] / cartan[i][j]
                if lengths[j] is None:
                    lengths[j] = lj
                    stack.append(j)
                elif lengths[j] != lj:
                    return None
    return lengths  # type: ignore[return-value]


def cartan_components(cartan: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Connected components of the Dynkin diagram, each sorted, ordered by minimum."""
    n = len(cartan)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and (cartan[i][j] or cartan[j][i]):
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def is_finite_type(cartan: Sequence[Sequence[int]]) -> bool:
    n = len(cartan)
    for i in range(n):
        if cartan[i][i] != 2:
            return False
        for j in range(n):
            if i != j and (cartan[i][j] > 0 or (cartan[i][j] == 0) != (cartan[j][i] == 0)):
                return False
    lengths = _symmetrizer(cartan)
    if lengths is None or any(x <= 0 for x in lengths):
        return False
    sym = [[Fraction(cartan[i][j]) * lengths[j] for j in range(n)] for i in range(n)]
    # Sylvester's criterion on the symmetrized matrix
    for k in range(1, n + 1):
        if _det([row[:k] for row in sym[:k]]) <= 0:
            return False
    return True


def _det(m: List[List[Fraction]]) -> Fraction:
    m = [list(r) for r in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


# ---------------------------------------------------------------------------
# Root datum


@dataclass(frozen=True)
class RootDatum:
    """A root datum (X*, X_*, roots, coroots) with a choice of simple roots.

    ``roots[k]`` and ``coroots[k]`` are an aligned root/coroot pair.
    ``simple_indices`` picks the simple roots (in order) out of ``roots``.
    All invariants are re-checked on construction.
    """

    rank: int
    roots: Tuple[Vector, ...]
    coroots: Tuple[Vector, ...]
    simple_indices: Tuple[int, ...]
    name: str = field(default="custom", compare=False)
    two_rho: Vector = field(init=False, compare=False, repr=False)
    two_rho_check: Vector = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        roots = tuple(tuple(int(x) for x in r) for r in self.roots)
        coroots = tuple(tuple(int(x) for x in r) for r in self.coroots)
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "coroots", coroots)
        object.__setattr__(self, "simple_indices", tuple(int(i) for i in self.simple_indices))
        self._validate()
        pos = [k for k in range(len(roots)) if self.positive[k]]
        zero = (0,) * self.rank
        object.__setattr__(self, "two_rho", _sum_vectors([roots[k] for k in pos], zero))
        object.__setattr__(self, "two_rho_check", _sum_vectors([coroots[k] for k in pos], zero))

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.rank, self.roots, self.coroots, self.simple_indices))

    # -- validation -------------------------------------------------------

    def _validate(self) -> None:
        n = self.rank
        if n < 1:
            raise DatumError("rank must be positive")
        if len(self.roots) != len(self.coroots):
            raise DatumError("roots and coroots must be in bijection")
        for r, c in zip(self.roots, self.coroots):
            if len(r) != n or len(c) != n:
                raise DatumError(f"vector length differs from rank {n}")
            if pairing(r, c) != 2:
                raise DatumError(f"<root, coroot> = {pairing(r, c)} != 2 for root {list(r)}")
        if len(set(self.roots)) != len(self.roots) or len(set(self.coroots)) != len(self.coroots):
            raise DatumError("duplicate roots or coroots")
        simple = self.simple_indices
        if len(set(simple)) != len(simple) or any(not 0 <= i < len(self.roots) for i in simple):
            raise DatumError("simple indices must be distinct valid root indices")
        if self.roots and not simple:
            raise DatumError("a nonempty root system needs simple roots")
        sroots = [self.roots[i] for i in simple]
        if simple and la.rank(sroots) != len(simple):
            raise DatumError("simple roots are linearly dependent")
        if simple and la.rank([self.coroots[i] for i in simple]) != len(simple):
            raise DatumError("simple coroots are linearly dependent")
        if not is_finite_type(self.cartan):
            raise DatumError(f"Cartan matrix {self.cartan} is not of finite type")
        # the root set must be exactly the Weyl orbit of the simple roots,
        # with coroots carried along compatibly
        index = {r: k for k, r in enumerate(self.roots)}
        seen = set(simple)
        queue = list(simple)
        while queue:
            k = queue.pop()
            for i in simple:
                a, ac = self.roots[i], self.coroots[i]
                r, c = self.roots[k], self.coroots[k]
                r2 = _sub(r, _scale(pairing(r, ac), a))
                c2 = _sub(c, _scale(pairing(a, c), ac))
                m = index.get(r2)
                if m is None:
                    raise DatumError(f"root set not closed under s_{i}: {list(r2)} missing")
                if self.coroots[m] != c2:
                    raise DatumError(f"coroot of {list(r2)} incompatible with simple reflection")
                if m not in seen:
                    seen.add(m)
                    queue.append(m)
        if len(seen) != len(self.roots):
            raise DatumError("roots outside the Weyl orbit of the simple roots")
        for k in range(len(self.roots)):
            cs = self.root_coefficients_of_index(k)
            if not (all(x >= 0 for x in cs) or all(x <= 0 for x in cs)):
                raise DatumError(f"root {list(self.roots[k])} is neither positive nor negative")

    # -- derived data -------------------------------------------------------

    @property
    def num_simple(self) -> int:
        return len(self.simple_indices)

    @property
    def is_semisimple(self) -> bool:
        return self.num_simple == self.rank

    @cached_property
    def simple_roots(self) -> Tuple[Vector, ...]:
        return tuple(self.roots[i] for i in self.simple_indices)

    @cached_property
    def simple_coroots(self) -> Tuple[Vector, ...]:
        return tuple(self.coroots[i] for i in self.simple_indices)

    @cached_property
    def cartan(self) -> Tuple[Tuple[int, ...], ...]:
        """``cartan[i][j] = <alpha_i, coroot_j>`` over simple indices."""
        return tuple(tuple(pairing(a, c) for c in self.simple_coroots) for a in self.simple_roots)

    @cached_property
    def _root_solver(self):
        return _Solver(self.simple_roots, self.rank)

    @cached_property
    def _coroot_solver(self):
        return _Solver(self.simple_coroots, self.rank)

    def root_coefficients_of_index(self, k: int) -> Vector:
        c = self._root_solver.solve(self.roots[k])
        if c is None:
            raise DatumError(f"root {list(self.roots[k])} is not an integral combination of simple roots")
        return c

    @cached_property
    def positive(self) -> Tuple[bool, ...]:
        return tuple(sum(self.root_coefficients_of_index(k)) > 0 for k in range(len(self.roots)))

    @cached_property
    def positive_roots(self) -> Tuple[Vector, ...]:
        return tuple(r for r, p in zip(self.roots, self.positive) if p)

    @cached_property
    def positive_coroots(self) -> Tuple[Vector, ...]:
        return tuple(c for c, p in zip(self.coroots, self.positive) if p)

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    def coroot_coefficients(self, y: Sequence[int]) -> Optional[Vector]:
        """Coefficients of ``y`` in the simple coroots, or None if ``y`` is
        not in the coroot lattice."""
        return self._coroot_solver.solve(y)

    def root_coefficients(self, x: Sequence) -> Optional[Vector]:
        return self._root_solver.solve(x)

    def labels(self, y: Sequence[int]) -> Vector:
        """Pairings ``<alpha_i, y>`` with the simple roots."""
        return tuple(pairing(a, y) for a in self.simple_roots)

    def check_coweight(self, y: Sequence) -> Vector:
        t = tuple(y)
        if len(t) != self.rank or any(not isinstance(x, int) for x in t):
            raise DatumError(f"expected an integer vector of length {self.rank}, got {list(t)}")
        return t

    def __repr__(self) -> str:
        return f"RootDatum({self.name!r}, rank={self.rank}, roots={len(self.roots)})"


def _sum_vectors(vs, zero):
    out = list(zero)
    for v in vs:
        for i, x in enumerate(v):
            out[i] += x
    return tuple(out)


class _Solver:
    """Integral coordinates with respect to a linearly independent family."""

    def __init__(self, basis: Sequence[Vector], ambient: int):
        self.basis = [list(b) for b in basis]
        if not basis:
            self.p_int, self.den = [], 1
            return
        p = la.left_inverse(self.basis)
        self.den = la.common_denominator(p)
        self.p_int = [[int(x * self.den) for x in row] for row in p]

    def solve_rational(self, y: Sequence) -> Optional[Tuple[Fraction, ...]]:
        if not self.basis:
            return () if not any(y) else None
        c = [Fraction(x, self.den) for x in la.vecmat(y, self.p_int)]
        if list(la.vecmat(c, self.basis)) != list(y):
            return None
        return tuple(c)

    def solve(self, y: Sequence) -> Optional[Vector]:
        if not self.basis:
            return () if not any(y) else None
        num = la.vecmat(y, self.p_int)
        if any(x % self.den for x in num):
            return None
        c = tuple(int(x // self.den) for x in num)
        if list(la.vecmat(c, self.basis)) != list(y):
            return None
        return c


# ---------------------------------------------------------------------------
# Construction


_ISOGENY_ALIASES = {
    "sc": "sc", "simply_connected": "sc", "simply-connected": "sc",
    "ad": "ad", "adjoint": "ad",
}


def _generate_roots(simple_roots, simple_coroots):
    """Weyl-orbit closure of the simple (root, coroot) pairs."""
    pairs = {tuple(a): tuple(c) for a, c in zip(simple_roots, simple_coroots)}
    queue = list(pairs)
    while queue:
        r = queue.pop()
        c = pairs[r]
        for a, ac in zip(simple_roots, simple_coroots):
            r2 = _sub(r, _scale(pairing(r, ac), a))
            if r2 not in pairs:
                pairs[r2] = _sub(c, _scale(pairing(a, c), ac))
                queue.append(r2)
    return pairs


def canonical_order(d: RootDatum, name: Optional[str] = None) -> RootDatum:
    """Reorder roots: positives by (height, coefficients), then negatives in
    the same order; simple roots keep their numbering."""
    coeffs = [d.root_coefficients_of_index(k) for k in range(len(d.roots))]
    pos = [k for k in range(len(d.roots)) if d.positive[k]]
    pos.sort(key=lambda k: (sum(coeffs[k]), tuple(-x for x in coeffs[k])))
    neg_of = {d.roots[k]: k for k in range(len(d.roots))}
    order = pos + [neg_of[_scale(-1, d.roots[k])] for k in pos]
    where = {k: i for i, k in enumerate(order)}
    return RootDatum(
        d.rank,
        tuple(d.roots[k] for k in order),
        tuple(d.coroots[k] for k in order),
        tuple(where[i] for i in d.simple_indices),
        name=name or d.name,
    )


def from_cartan(cartan: Sequence[Sequence[int]], isogeny: str = "sc", name: str = "custom") -> RootDatum:
    """Semisimple root datum with the given Cartan matrix.

    ``sc`` realises X* as the weight lattice (simple roots are the rows of
    the Cartan matrix); ``ad`` realises X* as the root lattice (simple
    coroots are the columns).
    """
    iso = _ISOGENY_ALIASES.get(isogeny)
    if iso is None:
        raise DatumError(f"unknown isogeny {isogeny!r}; expected sc or ad")
    if not is_finite_type(cartan):
        raise DatumError("Cartan matrix is not of finite type")
    n = len(cartan)
    eye = la.identity(n)
    if iso == "sc":
        sroots = [tuple(row) for row in cartan]
        scoroots = [tuple(row) for row in eye]
    else:
        sroots = [tuple(row) for row in eye]
        scoroots = [tuple(cartan[i][j] for i in range(n)) for j in range(n)]
    pairs = _generate_roots(sroots, scoroots)
    roots = list(pairs)
    raw = RootDatum(n, tuple(roots), tuple(pairs[r] for r in roots),
                    tuple(roots.index(s) for s in sroots), name=name)
    return canonical_order(raw, name)


def general_linear(n: int) -> RootDatum:
    """Root datum of GL_n on Z^n: roots and coroots e_i - e_j."""
    if n < 1:
        raise DatumError("GL_n needs n >= 1")
    if n == 1:
        raise DatumError("GL_1 is a torus; rank >= 2 is required for a root datum here")
    e = la.identity(n)
    sroots = [tuple(a - b for a, b in zip(e[i], e[i + 1])) for i in range(n - 1)]
    pairs = _generate_roots(sroots, sroots)
    roots = list(pairs)
    raw = RootDatum(n, tuple(roots), tuple(pairs[r] for r in roots),
                    tuple(roots.index(s) for s in sroots), name=f"GL{n}")
    return canonical_order(raw)


_TYPE_RE = re.compile(r"^([A-Ga-g])(\d+)(?:[-_](sc|ad|simply_connected|adjoint))?$")
_GL_RE = re.compile(r"^GL_?(\d+)$", re.IGNORECASE)


def build_root_datum(spec, isogeny: Optional[str] = None) -> RootDatum:
    """Build a root datum from a specification.

    Accepted forms: ``"A2-sc"``, ``("A2", "adjoint")`` via the ``isogeny``
    argument, ``"GL3"``, or a JSON-style dict ``{"cartan_type": "A2",
    "isogeny": "sc"}`` / ``{"cartan_type": "GL3"}`` / ``{"custom": {"roots":
    [...], "coroots": [...], "simple": [...]}}``.
    """
    if isinstance(spec, dict):
        if "custom" in spec:
            c = spec["custom"]
            try:
                roots = [tuple(_as_int(x) for x in r) for r in c["roots"]]
                coroots = [tuple(_as_int(x) for x in r) for r in c["coroots"]]
                simple = [_as_int(i) for i in c["simple"]]
            except (KeyError, TypeError) as exc:
                raise DatumError(f"malformed custom spec: {exc}") from None
            if not roots:
                raise DatumError("custom spec needs at least one root")
            rank = len(roots[0])
            return RootDatum(rank, tuple(roots), tuple(coroots), tuple(simple),
                             name=str(spec.get("name", "custom")))
        if "cartan_type" not in spec:
            raise DatumError("spec must contain 'cartan_type' or 'custom'")
        return build_root_datum(str(spec["cartan_type"]), spec.get("isogeny", isogeny))
    if not isinstance(spec, str):
        raise DatumError(f"unsupported spec {spec!r}")
    m = _GL_RE.match(spec)
    if m:
        return general_linear(int(m.group(1)))
    m = _TYPE_RE.match(spec)
    if not m:
        raise DatumError(f"cannot parse datum type {spec!r}")
    series, n, iso = m.group(1).upper(), int(m.group(2)), m.group(3) or isogeny
    if iso is None:
        raise DatumError(f"{spec}: isogeny (sc or ad) is required")
    iso_key = _ISOGENY_ALIASES.get(iso)
    if iso_key is None:
        raise DatumError(f"unknown isogeny {iso!r}; expected sc or ad")
    return from_cartan(cartan_matrix(series, n), iso_key, name=f"{series}{n}-{iso_key}")


def _as_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DatumError(f"coordinate {x!r} is not an integer (outside the lattice)")
    return x


def datum_to_spec(d: RootDatum) -> dict:
    return {"custom": {"roots": [list(r) for r in d.roots],
                       "coroots": [list(c) for c in d.coroots],
                       "simple": list(d.simple_indices)}}


BUILTIN_TYPES = (
    ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"]
)


def builtin_data(max_rank: int = 4) -> Iterator[RootDatum]:
    """Every named type of rank <= max_rank in both isogenies, then GL_n."""
    for t in BUILTIN_TYPES:
        if int(t[1:]) <= max_rank:
            for iso in ("sc", "ad"):
                yield build_root_datum(t, iso)
    for n in range(2, max_rank + 1):
        yield general_linear(n)


# ---------------------------------------------------------------------------
# Duality and comparison


def dual(d: RootDatum) -> RootDatum:
    """Langlands dual datum: X* and X_*, roots and coroots trade places."""
    name = d.name[:-5] if d.name.endswith("-dual") else d.name + "-dual"
    return RootDatum(d.rank, d.coroots, d.roots, d.simple_indices, name=name)


def same_datum(a: RootDatum, b: RootDatum) -> bool:
    """Equality up to reordering of the root list."""
    return (
        a.rank == b.rank
        and set(zip(a.roots, a.coroots)) == set(zip(b.roots, b.coroots))
        and [(a.roots[i], a.coroots[i]) for i in a.simple_indices]
        == [(b.roots[i], b.coroots[i]) for i in b.simple_indices]
    )


def isomorphic(a: RootDatum, b: RootDatum) -> bool:
    """Isomorphism test for semisimple data (any datum equal up to root order
    is accepted as well).

    A semisimple datum is determined by its Cartan matrix together with X_*
    written in the fundamental-coweight coordinates; two data are isomorphic
    when some relabelling of the Dynkin diagram matches both.
    """
    if same_datum(a, b):
        return True
    if a.rank != b.rank or a.cartan and sorted(map(sorted, a.cartan)) != sorted(map(sorted, b.cartan)):
        return False
    if not (a.is_semisimple and b.is_semisimple):
        raise NotImplementedError("isomorphism test is only implemented for semisimple data")
    n = a.num_simple
    ca, cb = a.cartan, b.cartan
    la_a = la.transpose([list(r) for r in a.simple_roots])  # rows = labels of basis vectors
    la_b = la.transpose([list(r) for r in b.simple_roots])
    hnf_b = la.hermite_normal_form(la_b)
    for perm in itertools.permutations(range(n)):
        if all(ca[i][j] == cb[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            moved = []
            for row in la_a:
                out = [0] * n
                for i in range(n):
                    out[perm[i]] = row[i]
                moved.append(out)
            if la.hermite_normal_form(moved) == hnf_b:
                return True
    return False


# ---------------------------------------------------------------------------
# Weyl group


def reflect_coweight(d: RootDatum, i: int, y: Sequence[int]) -> Vector:
    """Simple reflection s_i on X_*: y - <alpha_i, y> coroot_i."""
    a, ac = d.simple_roots[i], d.simple_coroots[i]
    k = pairing(a, y)
    return tuple(x - k * c for x, c in zip(y, ac))


def reflect_weight(d: RootDatum, i: int, x: Sequence) -> tuple:
    """Simple reflection s_i on X*: x - <x, coroot_i> alpha_i."""
    a, ac = d.simple_roots[i], d.simple_coroots[i]
    k = pairing(x, ac)
    return tuple(v - k * c for v, c in zip(x, a))


def simple_reflection_matrix(d: RootDatum, i: int) -> List[List[int]]:
    """Matrix of s_i acting on row vectors of X*."""
    a, ac = d.simple_roots[i], d.simple_coroots[i]
    return [[int(r == c) - ac[r] * a[c] for c in range(d.rank)] for r in range(d.rank)]


def is_dominant(d: RootDatum, y: Sequence[int]) -> bool:
    return all(pairing(a, y) >= 0 for a in d.simple_roots)


def dominant_representative(d: RootDatum, nu: Sequence[int]) -> Tuple[Vector, Tuple[int, ...]]:
    """Dominant element of the Weyl orbit of ``nu`` and a reduced word.

    The word lists simple-reflection positions in the order applied, so the
    result is ``s_{w[-1]} ... s_{w[0]} nu``.
    """
    y = tuple(nu)
    word = []
    while True:
        i = next((i for i, a in enumerate(d.simple_roots) if pairing(a, y) < 0), None)
        if i is None:
            return y, tuple(word)
        y = reflect_coweight(d, i, y)
        word.append(i)


def antidominant_representative(d: RootDatum, nu: Sequence[int]) -> Vector:
    y = tuple(nu)
    while True:
        i = next((i for i, a in enumerate(d.simple_roots) if pairing(a, y) > 0), None)
        if i is None:
            return y
        y = reflect_coweight(d, i, y)


def w0_action(d: RootDatum, lam: Sequence[int]) -> Vector:
    """w0 applied to a dominant coweight (the antidominant conjugate)."""
    return antidominant_representative(d, lam)


def weyl_orbit(d: RootDatum, nu: Sequence[int]) -> Tuple[Vector, ...]:
    """The Weyl orbit of ``nu`` in X_*, sorted; memoized per datum."""
    key = (d, tuple(nu))

    def compute():
        start = dominant_representative(d, nu)[0]
        seen = {start}
        queue = [start]
        while queue:
            y = queue.pop()
            for i in range(d.num_simple):
                z = reflect_coweight(d, i, y)
                if z not in seen:
                    seen.add(z)
                    if len(seen) > ORBIT_LIMIT:
                        raise DatumError(f"Weyl orbit exceeds {ORBIT_LIMIT} elements")
                    queue.append(z)
        return tuple(sorted(seen))

    return _orbit_cache.get_or_compute(key, compute)


def weyl_group_order(d: RootDatum) -> int:
    # 2 rho-check is regular, so its orbit is in bijection with W
    return len(weyl_orbit(d, d.two_rho_check))


def length_of_regular(d: RootDatum, y: Sequence[int]) -> int:
    """Length of the w with y = w(y_dom) for regular y: the number of
    positive roots pairing negatively with y."""
    return sum(1 for a in d.positive_roots if pairing(a, y) < 0)


def weyl_group_matrices(d: RootDatum) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Enumerate W as integer matrices on X* (breadth first from the identity)."""
    n = d.rank
    gens = [tuple(map(tuple, simple_reflection_matrix(d, i))) for i in range(d.num_simple)]
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {ident}
    frontier = [ident]
    yield ident
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = tuple(map(tuple, la.matmul(m, g)))
                if p not in seen:
                    seen.add(p)
                    if len(seen) > ORBIT_LIMIT:
                        raise DatumError(f"Weyl group exceeds {ORBIT_LIMIT} elements")
                    nxt.append(p)
                    yield p
        frontier = nxt


# ---------------------------------------------------------------------------
# Order, height, fundamental group


def dominance_leq(d: RootDatum, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff lam - mu is a nonnegative integral combination of positive coroots.

    Returns False when lam - mu is not in the coroot lattice.
    """
    c = d.coroot_coefficients(_sub(lam, mu))
    return c is not None and all(x >= 0 for x in c)


def height2(d: RootDatum, lam: Sequence[int]) -> int:
    """<2 rho, lam>, i.e. twice the height of lam."""
    return pairing(d.two_rho, lam)


def pi1(d: RootDatum) -> FiniteAbelianGroup:
    """X_* modulo the coroot lattice."""
    return cokernel(d.simple_coroots, d.rank)[0]


def dominant_coweights(d: RootDatum, max_height2: int) -> List[Vector]:
    """All dominant coweights with <2 rho, lam> <= max_height2 (semisimple data).

    Sorted by (height2, coordinates).
    """
    if not d.is_semisimple:
        raise DatumError("dominant coweights of bounded height form a finite set only for semisimple data")
    n = d.num_simple
    inv = la.inverse(d.simple_roots)  # columns of S^{-1} solve <alpha_i, y> = a_i
    weights = d.root_coefficients(d.two_rho)  # <2 rho, fundamental coweight_i>
    out = []

    def rec(i, budget, labels):
        if i == n:
            y = la.matmul(inv, [[a] for a in labels])
            if all(v[0].denominator == 1 for v in y):
                out.append(tuple(int(v[0]) for v in y))
            return
        for a in range(budget // weights[i] + 1):
            rec(i + 1, budget - a * weights[i], labels + [a])

    if max_height2 >= 0:
        rec(0, max_height2, [])
    out.sort(key=lambda y: (height2(d, y), y))
    return out


def coweight_from_labels(d: RootDatum, labels: Sequence[int]) -> Vector:
    """The coweight with the given pairings against the simple roots."""
    if not d.is_semisimple:
        raise DatumError("fundamental-coweight coordinates need a semisimple datum")
    if len(labels) != d.num_simple:
        raise DatumError(f"expected {d.num_simple} coordinates, got {len(labels)}")
    y = la.matmul(la.inverse(d.simple_roots), [[a] for a in labels])
    if any(v[0].denominator != 1 for v in y):
        raise DatumError(f"labels {list(labels)} do not define a cocharacter of {d.name}")
    return tuple(int(v[0]) for v in y)


# ---------------------------------------------------------------------------
# Invariant form and iota


@dataclass(frozen=True)
class InvariantForm:
    """W-invariant symmetric form on X* (x) Q.

    ``gram`` is in the coordinates of X*; it vanishes on the W-fixed
    complement of the root span.  ``components`` lists the simple indices of
    each simple factor.
    """

    gram: Tuple[Tuple[Fraction, ...], ...]
    components: Tuple[Tuple[int, ...], ...]

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        return sum((Fraction(a) * g * b for a, row in zip(x, self.gram) for g, b in zip(row, y)),
                   Fraction(0))

    def scaled(self, factor) -> "InvariantForm":
        f = Fraction(factor)
        return InvariantForm(tuple(tuple(f * g for g in row) for row in self.gram), self.components)


def _component_of_root(d: RootDatum, coeffs: Sequence[int], comps) -> int:
    for ci, comp in enumerate(comps):
        if any(coeffs[i] for i in comp):
            return ci
    raise AssertionError("zero root")


def highest_roots(d: RootDatum) -> List[Vector]:
    """Highest root of each simple component (in component order)."""
    comps = cartan_components(d.cartan)
    best: Dict[int, Tuple[int, Vector]] = {}
    for k, r in enumerate(d.roots):
        if not d.positive[k]:
            continue
        cs = d.root_coefficients_of_index(k)
        ci = _component_of_root(d, cs, comps)
        if ci not in best or sum(cs) > best[ci][0]:
            best[ci] = (sum(cs), r)
    return [best[ci][1] for ci in range(len(comps))]


def _invariant_form_uncached(d: RootDatum, theta_lengths=None) -> InvariantForm:
    n, r = d.rank, d.num_simple
    comps = cartan_components(d.cartan)
    lengths = _symmetrizer(d.cartan)
    # Gram matrix on simple roots: (alpha_i, alpha_j) = C_ij |alpha_j|^2 / 2
    b = [[Fraction(d.cartan[i][j]) * lengths[j] / 2 for j in range(r)] for i in range(r)]
    thetas = highest_roots(d)
    scale = [Fraction(1)] * r
    if theta_lengths is None:
        theta_lengths = [2] * len(comps)
    if len(theta_lengths) != len(comps):
        raise DatumError(f"expected {len(comps)} normalisations, one per simple component")
    for comp, theta, target in zip(comps, thetas, theta_lengths):
        c = d.root_coefficients(theta)
        tt = sum(c[i] * b[i][j] * c[j] for i in comp for j in comp)
        for i in comp:
            scale[i] = Fraction(target) / tt
    # entries across components are zero, so a row scaling keeps b symmetric
    b = [[scale[i] * b[i][j] for j in range(r)] for i in range(r)]
    fixed = la.nullspace([list(c) for c in d.simple_coroots], n) if r else la.to_fraction_matrix(la.identity(n))
    m = la.to_fraction_matrix(list(d.simple_roots)) + fixed
    block = [[b[i][j] if i < r and j < r else Fraction(0) for j in range(n)] for i in range(n)]
    minv = la.inverse(m)
    gram = la.matmul(la.matmul(minv, block), la.transpose(minv))
    return InvariantForm(tuple(tuple(row) for row in gram), tuple(comps))


_form_cache = BoundedCache(1_000)


def invariant_form(d: RootDatum, theta_lengths: Optional[Sequence] = None) -> InvariantForm:
    """The W-invariant form with (theta, theta) = 2 for the highest root of
    every simple component, extended by zero on the W-fixed directions.

    ``theta_lengths`` overrides the normalisation per component (in the order
    of ``cartan_components``).
    """
    if theta_lengths is not None:
        return _invariant_form_uncached(d, list(theta_lengths))
    return _form_cache.get_or_compute(d, lambda: _invariant_form_uncached(d))


def _iota_matrix_uncached(d: RootDatum):
    n, r = d.rank, d.num_simple
    form = invariant_form(d)
    images = []
    for a in d.simple_roots:
        aa = form(a, a)
        images.append([Fraction(2) * x / aa for x in a])
    fixed = la.nullspace([list(a) for a in d.simple_roots], n) if r else la.to_fraction_matrix(la.identity(n))
    m = la.to_fraction_matrix(list(d.simple_coroots)) + fixed
    target = images + [[Fraction(0)] * n for _ in range(n - r)]
    return la.matmul(la.inverse(m), target)


_iota_cache = BoundedCache(1_000)


def iota(d: RootDatum, nu: Sequence[int]) -> Tuple[Fraction, ...]:
    """The map X_* -> X* (x) Q induced by the invariant form.

    On coroots it sends coroot(alpha) to 2 alpha / (alpha, alpha); on the
    central directions it is zero.
    """
    mat = _iota_cache.get_or_compute(d, lambda: _iota_matrix_uncached(d))
    return tuple(la.vecmat(list(nu), mat)) if mat else ()


def root_cone_leq(d: RootDatum, x: Sequence, y: Sequence) -> bool:
    """x <= y in X* (x) Q: y - x is a nonnegative integral sum of simple roots."""
    c = d._root_solver.solve_rational([Fraction(b) - Fraction(a) for a, b in zip(x, y)])
    return c is not None and all(v.denominator == 1 and v >= 0 for v in c)


def iota_order_check(d: RootDatum, nu: Sequence[int], eta: Sequence[int]) -> bool:
    """Whether (nu < eta) agrees with (iota nu < iota eta)."""
    nu, eta = tuple(nu), tuple(eta)
    lhs = nu != eta and dominance_leq(d, nu, eta)
    inu, ieta = iota(d, nu), iota(d, eta)
    rhs = inu != ieta and root_cone_leq(d, inu, ieta)
    return lhs == rhs
