"""Isogenies at the level of root data, and Weyl/Schur module characters.

Lattice quotients and saturations go through the Smith and Hermite normal
forms in ``_linalg``, whose pivoting is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from . import _linalg as la
from . import multiplicities as mult
from . import root_datum as rd
from .root_datum import DatumError, FiniteAbelianGroup, RootDatum, Vector
from .tensor import Report

WEYL = "weyl"
SCHUR = "schur"


def _suffix(name: str, tag: str) -> str:
    return f"{name}/{tag}"


def adjoint_datum(d: RootDatum) -> RootDatum:
    """Datum of the adjoint quotient: X* becomes the root lattice.

    Roots are rewritten in the basis of simple roots and coroots by their
    pairings with the simple roots; the rank drops to the semisimple rank.
    """
    r = d.num_simple
    roots = tuple(d.root_coefficients_of_index(k) for k in range(len(d.roots)))
    coroots = tuple(d.labels(c) for c in d.coroots)
    name = d.name if d.name.endswith("-ad") else _suffix(d.name, "ad")
    raw = RootDatum(r, roots, coroots, d.simple_indices, name=name)
    return rd.canonical_order(raw)


def saturated_coroot_lattice(d: RootDatum):
    """Hermite basis of (Q . coroots) meet X_*."""
    _, u, diag = rd.cokernel(d.simple_coroots, d.rank)
    uinv = la.inverse(u)
    basis = [[int(uinv[k][i]) for k in range(d.rank)] for i in range(d.num_simple)]
    return la.hermite_normal_form(basis)


def derived_datum(d: RootDatum) -> RootDatum:
    """Datum of the derived group: X_* cut down to the saturation of the
    coroot span; X* becomes its dual lattice."""
    basis = saturated_coroot_lattice(d)
    solver = rd._Solver([tuple(b) for b in basis], d.rank)
    coroots = []
    for c in d.coroots:
        coeffs = solver.solve(c)
        if coeffs is None:
            raise AssertionError("coroot outside its own saturation")
        coroots.append(coeffs)
    roots = tuple(tuple(rd.pairing(a, b) for b in basis) for a in d.roots)
    if d.is_semisimple and basis == la.identity(d.rank):
        name = d.name
    else:
        name = _suffix(d.name, "der")
    return RootDatum(len(basis), roots, tuple(coroots), d.simple_indices, name=name)


def central_torus_rank(d: RootDatum) -> int:
    """Dimension of the connected center Z(G)^0: rank minus semisimple rank."""
    return d.rank - la.rank(list(d.roots)) if d.roots else d.rank


@dataclass(frozen=True)
class IsogenyReport:
    """An isogeny between root data with the character group of its kernel."""

    source: RootDatum
    target: RootDatum
    kernel: FiniteAbelianGroup
    direction: str

    def to_json(self) -> dict:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "kernel": self.kernel.to_json(),
            "direction": self.direction,
        }


def fundamental_group_quotient(d: RootDatum) -> FiniteAbelianGroup:
    """pi_1(G_ad) / pi_1(G), computed as (coweight lattice) / X_*."""
    if not d.is_semisimple:
        raise DatumError(f"{d.name} is not semisimple; apply derived_datum first")
    columns = [tuple(a[k] for a in d.simple_roots) for k in range(d.rank)]
    return rd.cokernel(columns, d.num_simple)[0]


def dual_isogeny_kernel(d: RootDatum) -> IsogenyReport:
    """The quotient map dual(G_ad) -> dual(G).

    Its kernel is central and finite; the reported group is its character
    group pi_1(G_ad) / pi_1(G).
    """
    kernel = fundamental_group_quotient(d)
    return IsogenyReport(rd.dual(adjoint_datum(d)), rd.dual(d), kernel, "quotient")


def center_of_dual(d: RootDatum) -> FiniteAbelianGroup:
    """X_* / (coroot lattice), read as the character group of a central
    subgroup scheme of the dual group (all of the center when G is adjoint)."""
    return rd.pi1(d)


# ---------------------------------------------------------------------------
# Weyl and Schur modules


@dataclass(frozen=True)
class ModuleCharacter:
    """Ranks of the weight spaces of W(lam) or S(lam) over any ring."""

    label: Vector
    kind: str
    table: mult.MultiplicityTable

    def to_json(self) -> dict:
        return {"label": list(self.label), "kind": self.kind, "table": self.table.to_json()}


def weyl_schur_character(d: RootDatum, lam: Sequence[int], kind: str = WEYL) -> ModuleCharacter:
    """Weight-space ranks of the Weyl or Schur module of highest weight lam.

    Both are free over the base ring with rank at nu equal to the number of
    MV cycles in (closure of Gr^lam) meet S_nu, so the two kinds agree.
    """
    kind = kind.lower()
    if kind not in (WEYL, SCHUR):
        raise DatumError(f"unknown module kind {kind!r}")
    table = mult.mv_cycle_table(d, lam)
    return ModuleCharacter(tuple(lam), kind, table)


def duality_mismatches(d: RootDatum, lam: Sequence[int]) -> list:
    """Weights where rank W(lam)_nu differs from rank S(-w0 lam)_{-nu}."""
    lam = tuple(lam)
    star = tuple(-x for x in rd.w0_action(d, lam))
    w = weyl_schur_character(d, lam, WEYL).table
    s = weyl_schur_character(d, star, SCHUR).table
    weights = set(w.support) | {tuple(-x for x in nu) for nu in s.support}
    return sorted(nu for nu in weights if w[nu] != s[tuple(-x for x in nu)])


class ConeViolation(DatumError):
    """A table has weights outside the cone below the probe label."""

    def __init__(self, label, offending):
        self.label = tuple(label)
        self.offending = sorted(tuple(w) for w in offending)
        super().__init__(f"weights {[list(w) for w in self.offending]} are not <= {list(self.label)}")


def universal_property_probe(
    d: RootDatum, lam: Sequence[int], test_table: Union[mult.MultiplicityTable, Mapping[Vector, int]]
) -> Report:
    """Check that a character lives in the subcategory of weights <= lam and
    report its lam-weight rank, the common rank of Hom(W(lam), V) and
    Hom(V, S(lam)) there."""
    lam = d.check_coweight(lam)
    if not rd.is_dominant(d, lam):
        raise DatumError(f"{list(lam)} is not dominant")
    entries = test_table.entries if isinstance(test_table, mult.MultiplicityTable) else test_table
    support = [tuple(k) for k, v in entries.items() if v]
    offending = [nu for nu in support if not rd.dominance_leq(d, nu, lam)]
    if offending:
        raise ConeViolation(lam, offending)
    report = Report("universal_property")
    report.details = {"label": list(lam), "rank": int(entries.get(lam, 0))}
    return report
