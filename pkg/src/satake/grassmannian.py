"""Orbit combinatorics of the affine Grassmannian.

Nothing geometric is materialised: G(O)-orbits are labelled by dominant
coweights, semi-infinite orbits by arbitrary coweights, connected components
by classes in X_* modulo the coroot lattice.  Dimensions are computed as
``<2 rho, .>`` and halved only where an integral dimension is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from . import root_datum as rd
from ._cache import BoundedCache
from .root_datum import DatumError, RootDatum, Vector, dominance_leq, height2


def _require_dominant(d: RootDatum, lam: Sequence[int]) -> Vector:
    lam = d.check_coweight(lam)
    if not rd.is_dominant(d, lam):
        raise DatumError(f"{list(lam)} is not dominant")
    return lam


def orbit_dim(d: RootDatum, lam: Sequence[int]) -> int:
    """Dimension of the orbit Gr^lam, which is <2 rho, lam>."""
    return height2(d, _require_dominant(d, lam))


def closure_contains(d: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Whether Gr^mu lies in the closure of Gr^lam."""
    _require_dominant(d, lam)
    _require_dominant(d, mu)
    return dominance_leq(d, mu, lam)


# ---------------------------------------------------------------------------
# Components


@dataclass(frozen=True)
class ComponentLabel:
    """Class of a coweight in pi_1 = X_* / (coroot lattice).

    ``torsion`` holds residues modulo the invariant factors, ``free`` the
    coordinates along the free part, both read off the Smith normal basis.
    """

    torsion: Tuple[int, ...]
    free: Tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return not any(self.torsion) and not any(self.free)

    def to_json(self) -> dict:
        return {"torsion": list(self.torsion), "free": list(self.free)}


class _ComponentMap:
    def __init__(self, d: RootDatum):
        group, u, diag = rd.cokernel(d.simple_coroots, d.rank)
        self.group = group
        self.torsion_rows = [(u[i], diag[i]) for i in range(len(diag)) if diag[i] > 1]
        free_rows = [list(u[i]) for i in range(len(diag), d.rank)] if diag else [list(r) for r in u]
        # fix the sign of each free coordinate so the first nonzero entry is positive
        for row in free_rows:
            lead = next((x for x in row if x), 1)
            if lead < 0:
                row[:] = [-x for x in row]
        self.free_rows = free_rows

    def __call__(self, y: Sequence[int]) -> ComponentLabel:
        return ComponentLabel(
            tuple(rd.pairing(row, y) % m for row, m in self.torsion_rows),
            tuple(rd.pairing(row, y) for row in self.free_rows),
        )


_component_maps = BoundedCache(1_000)


def component_of(d: RootDatum, nu: Sequence[int]) -> ComponentLabel:
    """Connected component of Gr containing L_nu."""
    cmap = _component_maps.get_or_compute(d, lambda: _ComponentMap(d))
    return cmap(d.check_coweight(nu))


def component_group(d: RootDatum) -> rd.FiniteAbelianGroup:
    return rd.pi1(d)


def component_parity(d: RootDatum, c: ComponentLabel, representative: Optional[Sequence[int]] = None) -> int:
    """Parity (0 even, 1 odd) of orbit dimensions in the component ``c``.

    ``<2 rho, coroot>`` is even, so the parity of <2 rho, nu> depends only on
    the class of nu.  Without an explicit representative one is found by
    searching the Smith basis.
    """
    if representative is None:
        representative = component_representative(d, c)
    elif component_of(d, representative) != c:
        raise DatumError("representative does not lie in the given component")
    return height2(d, representative) % 2


def component_representative(d: RootDatum, c: ComponentLabel) -> Vector:
    """Some coweight in the class ``c``."""
    cmap = _component_maps.get_or_compute(d, lambda: _ComponentMap(d))
    # U is unimodular: the columns of U^{-1} realise the Smith coordinates
    from . import _linalg as la

    group, u, diag = rd.cokernel(d.simple_coroots, d.rank)
    uinv = la.inverse(u)
    target = [0] * d.rank
    t = iter(c.torsion)
    for i, m in enumerate(diag):
        if m > 1:
            target[i] = next(t)
    if len(c.free) != len(cmap.free_rows):
        raise DatumError("component label does not match the datum")
    # free coordinates: solve using the (sign-normalised) rows
    free_start = len(diag) if diag else 0
    for k, i in enumerate(range(free_start, d.rank)):
        sign = 1 if list(u[i]) == cmap.free_rows[k] else -1
        target[i] = sign * c.free[k]
    y = [sum(uinv[r][s] * target[s] for s in range(d.rank)) for r in range(d.rank)]
    rep = tuple(int(v) for v in y)
    if cmap(rep) != c:
        raise AssertionError("failed to realise component label")
    return rep


def add_components(d: RootDatum, a: ComponentLabel, b: ComponentLabel) -> ComponentLabel:
    cmap = _component_maps.get_or_compute(d, lambda: _ComponentMap(d))
    return ComponentLabel(
        tuple((x + y) % m for x, y, (_, m) in zip(a.torsion, b.torsion, cmap.torsion_rows)),
        tuple(x + y for x, y in zip(a.free, b.free)),
    )


# ---------------------------------------------------------------------------
# Semi-infinite orbits


def s_closure_set(d: RootDatum, nu: Sequence[int], height_bound: int) -> Set[Vector]:
    """Labels eta of the S_eta in the closure of S_nu (eta <= nu), truncated
    to height2(nu) - height2(eta) <= height_bound."""
    nu = d.check_coweight(nu)
    out = {nu}
    frontier = [nu]
    h0 = height2(d, nu)
    while frontier:
        nxt = []
        for y in frontier:
            for c in d.simple_coroots:
                z = rd._sub(y, c)
                if z not in out and h0 - height2(d, z) <= height_bound:
                    out.add(z)
                    nxt.append(z)
        frontier = nxt
    return out


def is_weight(d: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> bool:
    """Whether nu is a weight of the irreducible representation L(lam) of the
    dual group, i.e. whether L_nu lies in the closure of Gr^lam."""
    return dominance_leq(d, rd.dominant_representative(d, nu)[0], lam)


def _halve(value: int, what: str) -> int:
    if value % 2:
        raise ArithmeticError(f"{what}: {value} is odd, the halved dimension is not an integer")
    if value < 0:
        raise ArithmeticError(f"{what}: negative dimension {value // 2}")
    return value // 2


def sv_intersection_dim(d: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> Optional[int]:
    """Dimension of S_nu meet Gr^lam, or None when the intersection is empty.

    Computed from the doubled value <2 rho, nu + lam>, which must be even.
    """
    lam = _require_dominant(d, lam)
    nu = d.check_coweight(nu)
    if not is_weight(d, lam, nu):
        return None
    return _halve(height2(d, rd._add(nu, lam)), "S-intersection")


def tv_intersection_dim(d: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> Optional[int]:
    """Dimension of T_nu meet Gr^lam, or None when empty; ``lam`` is given
    dominant and replaced by its antidominant conjugate internally."""
    lam = _require_dominant(d, lam)
    nu = d.check_coweight(nu)
    if not is_weight(d, lam, nu):
        return None
    anti = rd.w0_action(d, lam)
    return _halve(-height2(d, rd._add(nu, anti)), "T-intersection")


def fixed_point_dim_bound(d: RootDatum, lam: Sequence[int], fixed_points: Iterable[Sequence[int]]) -> int:
    """Upper bound max ht(lam + nu) over the T-fixed points L_nu of a closed
    T-invariant subset of the closure of Gr^lam."""
    lam = _require_dominant(d, lam)
    best = None
    for nu in fixed_points:
        nu = d.check_coweight(nu)
        if not is_weight(d, lam, nu):
            raise DatumError(f"fixed point {list(nu)} is not in the closure of Gr^{list(lam)}")
        h = _halve(height2(d, rd._add(lam, nu)), "fixed-point bound")
        best = h if best is None else max(best, h)
    if best is None:
        raise DatumError("no fixed points given")
    return best


def closure_poset(d: RootDatum, max_height2: int) -> Tuple[List[Vector], List[Tuple[Vector, Vector]]]:
    """Dominant coweights of bounded height with the covering relations of
    the closure order, as (nodes, [(lower, upper), ...])."""
    nodes = rd.dominant_coweights(d, max_height2)
    below = {
        lam: [mu for mu in nodes if mu != lam and dominance_leq(d, mu, lam)] for lam in nodes
    }
    edges = []
    for lam in nodes:
        for mu in below[lam]:
            if not any(dominance_leq(d, mu, nu) for nu in below[lam] if nu != mu):
                edges.append((mu, lam))
    return nodes, edges
