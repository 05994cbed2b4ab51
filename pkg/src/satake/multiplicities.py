"""Weight multiplicities of irreducible representations of the dual group.

A dominant coweight lam of G is a highest weight for the dual group, whose
roots are the coroots of G.  Two independent algorithms compute the weight
multiplicities of L(lam):

* ``kostant_multiplicity``: alternating sum over W of the partition function
  of positive coroots;
* ``freudenthal_table``: Freudenthal's recursion with the invariant form of
  the dual datum.

The multiplicity at nu is also the number of irreducible components of the
intersection of the closure of Gr^lam with S_nu (``mv_cycle_count``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import root_datum as rd
from ._cache import DEFAULT_LIMIT, BoundedCache
from .root_datum import DatumError, InvariantForm, RootDatum, Vector, height2

_partition_cache = BoundedCache(DEFAULT_LIMIT)
_table_cache = BoundedCache(2_000)
_orbit_sign_cache = BoundedCache(2_000)


def set_cache_limit(limit: int) -> None:
    """Bound the number of memoized partition-function entries."""
    _partition_cache.set_limit(limit)


def clear_caches() -> None:
    for c in (_partition_cache, _table_cache, _orbit_sign_cache):
        c.clear()


# ---------------------------------------------------------------------------
# Tables


def weight_key(v: Sequence[int]) -> Tuple[int, ...]:
    """Fixed total order used to canonicalise tables."""
    return tuple(v)


@dataclass(frozen=True)
class MultiplicityTable:
    """Weight multiplicities of L(highest_weight); absent weights have 0."""

    highest_weight: Vector
    entries: Mapping[Vector, int]

    def __post_init__(self):
        items = sorted(((tuple(k), int(v)) for k, v in self.entries.items() if v), key=lambda kv: weight_key(kv[0]))
        if any(v < 0 for _, v in items):
            raise ArithmeticError("negative multiplicity in table")
        object.__setattr__(self, "entries", MappingProxyType(dict(items)))

    def __getitem__(self, nu: Sequence[int]) -> int:
        return self.entries.get(tuple(nu), 0)

    @property
    def support(self) -> frozenset:
        return frozenset(self.entries)

    @property
    def dimension(self) -> int:
        return sum(self.entries.values())

    def __eq__(self, other):
        if not isinstance(other, MultiplicityTable):
            return NotImplemented
        return self.highest_weight == other.highest_weight and dict(self.entries) == dict(other.entries)

    __hash__ = None  # type: ignore[assignment]

    def to_json(self) -> dict:
        return {
            "highest_weight": list(self.highest_weight),
            "entries": [{"weight": list(k), "multiplicity": v} for k, v in self.entries.items()],
        }


@dataclass(frozen=True)
class PoincareVector:
    """Total dimension of L(lam) graded by <2 rho, nu>."""

    dims: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "dims", MappingProxyType(dict(sorted((int(k), int(v)) for k, v in self.dims.items() if v))))

    def __getitem__(self, k: int) -> int:
        return self.dims.get(k, 0)

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def is_palindromic(self) -> bool:
        return all(self[-k] == v for k, v in self.dims.items())

    def parities(self) -> set:
        return {k % 2 for k in self.dims}

    def __eq__(self, other):
        if not isinstance(other, PoincareVector):
            return NotImplemented
        return dict(self.dims) == dict(other.dims)

    __hash__ = None  # type: ignore[assignment]

    def to_json(self) -> dict:
        return {str(k): v for k, v in self.dims.items()}


def _require_dominant(d: RootDatum, lam: Sequence[int]) -> Vector:
    lam = d.check_coweight(lam)
    if not rd.is_dominant(d, lam):
        raise DatumError(f"{list(lam)} is not dominant")
    return lam


# ---------------------------------------------------------------------------
# Weight diagrams


def weight_diagram(d: RootDatum, lam: Sequence[int]) -> frozenset:
    """All weights of L(lam): {nu : dominant representative of nu <= lam}.

    Every weight other than lam is reached from a higher weight by
    subtracting a simple coroot, so a descent from lam finds them all.
    """
    lam = _require_dominant(d, lam)

    def compute():
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for y in frontier:
                for c in d.simple_coroots:
                    z = rd._sub(y, c)
                    if z not in seen and rd.dominance_leq(d, rd.dominant_representative(d, z)[0], lam):
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return frozenset(seen)

    return _table_cache.get_or_compute(("diagram", d, lam), compute)


def dominant_weights(d: RootDatum, lam: Sequence[int]) -> List[Vector]:
    """Dominant weights of L(lam), from the top down."""
    lam = _require_dominant(d, lam)
    ws = [w for w in weight_diagram(d, lam) if rd.is_dominant(d, w)]
    ws.sort(key=lambda w: (sum(d.coroot_coefficients(rd._sub(lam, w))), weight_key(w)))
    return ws


# ---------------------------------------------------------------------------
# Kostant


def _ordered_positive_coroot_coeffs(d: RootDatum) -> Tuple[Tuple[int, ...], ...]:
    """Positive coroots in simple-coroot coordinates; simple ones last."""
    coeffs = [d.coroot_coefficients(c) for c in d.positive_coroots]
    nonsimple = sorted((c for c in coeffs if sum(c) > 1), key=lambda c: (-sum(c), c))
    simple = [c for c in coeffs if sum(c) == 1]
    return tuple(nonsimple + simple)


def _partition_count(d: RootDatum, gens, k: int, beta: Tuple[int, ...]) -> int:
    if any(x < 0 for x in beta):
        return 0
    if k == len(gens) or sum(gens[k]) == 1:
        # only simple coroots remain: the expansion is unique
        return 1

    def compute():
        total = 0
        g = gens[k]
        b = beta
        while all(x >= 0 for x in b):
            total += _partition_count(d, gens, k + 1, b)
            b = tuple(x - y for x, y in zip(b, g))
        return total

    return _partition_cache.get_or_compute((d, k, beta), compute)


def kostant_partition(d: RootDatum, beta: Sequence[int]) -> int:
    """Number of ways to write beta (in X_*) as a sum of positive coroots."""
    coeffs = d.coroot_coefficients(tuple(beta))
    if coeffs is None or any(x < 0 for x in coeffs):
        return 0
    gens = _table_cache.get_or_compute(("gens", d), lambda: _ordered_positive_coroot_coeffs(d))
    return _partition_count(d, gens, 0, coeffs)


def _signed_orbit(d: RootDatum, regular: Vector) -> Tuple[Tuple[Vector, int], ...]:
    def compute():
        return tuple((y, -1 if rd.length_of_regular(d, y) % 2 else 1) for y in rd.weyl_orbit(d, regular))

    return _orbit_sign_cache.get_or_compute((d, regular), compute)


def kostant_multiplicity(d: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of the weight nu in L(lam) by Kostant's formula.

    sum over w of sign(w) P(w(lam + rho) - (nu + rho)), evaluated on doubled
    vectors so that rho = (sum of positive coroots) / 2 never appears.
    """
    lam = _require_dominant(d, lam)
    nu = d.check_coweight(nu)
    shifted = tuple(2 * a + b for a, b in zip(lam, d.two_rho_check))
    target = tuple(2 * a + b for a, b in zip(nu, d.two_rho_check))
    total = 0
    for y, sign in _signed_orbit(d, shifted):
        diff2 = rd._sub(y, target)
        if any(x % 2 for x in diff2):
            continue
        p = kostant_partition(d, tuple(x // 2 for x in diff2))
        total += sign * p
    if total < 0:
        raise ArithmeticError(f"negative Kostant multiplicity {total} at {list(nu)}")
    return total


def kostant_table(d: RootDatum, lam: Sequence[int]) -> MultiplicityTable:
    """Multiplicity table computed weight by weight from Kostant's formula."""
    lam = _require_dominant(d, lam)

    def compute():
        return MultiplicityTable(lam, {nu: kostant_multiplicity(d, lam, nu) for nu in weight_diagram(d, lam)})

    return _table_cache.get_or_compute(("kostant", d, lam), compute)


def mv_cycle_count(d: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> int:
    """Number of irreducible components of (closure of Gr^lam) meet S_nu.

    These components index a basis of the nu-weight space of L(lam), so the
    count is the weight multiplicity (via Kostant's formula; the Freudenthal
    table is the independent cross-check).
    """
    return kostant_multiplicity(d, lam, nu)


def mv_cycle_table(d: RootDatum, lam: Sequence[int]) -> MultiplicityTable:
    return kostant_table(d, lam)


# ---------------------------------------------------------------------------
# Freudenthal


def coweight_form(d: RootDatum) -> InvariantForm:
    """Invariant form on X_* (x) Q: the invariant form of the dual datum."""
    return rd.invariant_form(rd.dual(d))


def freudenthal_table(d: RootDatum, lam: Sequence[int], form: Optional[InvariantForm] = None) -> MultiplicityTable:
    """Multiplicity table of L(lam) by Freudenthal's recursion.

    Runs over dominant weights from the top down and spreads the result over
    Weyl orbits.  ``form`` defaults to ``coweight_form(d)``; any W-invariant
    form that is positive on each simple factor gives the same table.
    """
    lam = _require_dominant(d, lam)
    if form is None:
        return _table_cache.get_or_compute(
            ("freudenthal", d, lam), lambda: _freudenthal(d, lam, coweight_form(d)))
    return _freudenthal(d, lam, form)


def _freudenthal(d: RootDatum, lam: Vector, form: InvariantForm) -> MultiplicityTable:
    rho = tuple(Fraction(x, 2) for x in d.two_rho_check)

    def norm(v):
        return form(v, v)

    top = norm(tuple(a + r for a, r in zip(lam, rho)))
    dominant = dominant_weights(d, lam)
    support = set(weight_diagram(d, lam))
    mult: Dict[Vector, int] = {lam: 1}
    pos = d.positive_coroots
    for mu in dominant:
        if mu == lam:
            continue
        num = Fraction(0)
        for beta in pos:
            k = 1
            while True:
                v = tuple(a + k * b for a, b in zip(mu, beta))
                if v not in support:
                    break
                m = mult[rd.dominant_representative(d, v)[0]]
                num += 2 * m * form(v, beta)
                k += 1
        den = top - norm(tuple(a + r for a, r in zip(mu, rho)))
        if den <= 0:
            raise ArithmeticError(f"degenerate Freudenthal denominator at {list(mu)}")
        value = num / den
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"Freudenthal multiplicity {value} at {list(mu)} is not a nonnegative integer")
        mult[mu] = int(value)
    entries = {}
    for mu, m in mult.items():
        for nu in rd.weyl_orbit(d, mu):
            entries[nu] = m
    return MultiplicityTable(lam, entries)


# ---------------------------------------------------------------------------
# Dimensions and grading


def weyl_dimension(d: RootDatum, lam: Sequence[int]) -> int:
    """dim L(lam) = prod over positive roots a of <a, lam + rho> / <a, rho>."""
    lam = _require_dominant(d, lam)
    value = Fraction(1)
    shifted = tuple(2 * a + b for a, b in zip(lam, d.two_rho_check))
    for a in d.positive_roots:
        value *= Fraction(rd.pairing(a, shifted), rd.pairing(a, d.two_rho_check))
    if value.denominator != 1:
        raise ArithmeticError(f"Weyl dimension {value} is not an integer")
    return int(value)


def ic_poincare(d: RootDatum, lam: Sequence[int]) -> PoincareVector:
    """Dimensions of the weight functors of L(lam) regraded by <2 rho, nu>.

    Degree k collects the multiplicities of all weights nu with
    <2 rho, nu> = k; the grading is centred, so it is symmetric about 0.
    """
    table = freudenthal_table(d, lam)
    dims: Dict[int, int] = {}
    for nu, m in table.entries.items():
        k = height2(d, nu)
        dims[k] = dims.get(k, 0) + m
    return PoincareVector(dims)
