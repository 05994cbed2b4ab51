"""Decomposition of convolution products, i.e. tensor products of
irreducible representations of the dual group.

``tensor_decompose`` uses the Brauer-Klimyk rule on top of Kostant
multiplicity tables.  ``decompose_character`` is an independent route
(character convolution followed by peeling off Freudenthal characters) used
to verify it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, List, Mapping, Sequence, Tuple

from . import grassmannian as gr
from . import multiplicities as mu_
from . import root_datum as rd
from ._cache import BoundedCache
from .root_datum import DatumError, RootDatum, Vector, dominance_leq, height2

_tensor_cache = BoundedCache(20_000)


@dataclass(frozen=True)
class TensorTable:
    """Multiplicities N^eta of L(eta) in L(lam) (x) L(mu)."""

    factors: Tuple[Vector, Vector]
    entries: Mapping[Vector, int]

    def __post_init__(self):
        items = sorted((tuple(k), int(v)) for k, v in self.entries.items() if v)
        object.__setattr__(self, "factors", (tuple(self.factors[0]), tuple(self.factors[1])))
        object.__setattr__(self, "entries", MappingProxyType(dict(items)))

    def __getitem__(self, eta: Sequence[int]) -> int:
        return self.entries.get(tuple(eta), 0)

    def __eq__(self, other):
        if not isinstance(other, TensorTable):
            return NotImplemented
        return dict(self.entries) == dict(other.entries)

    __hash__ = None  # type: ignore[assignment]

    def to_json(self) -> dict:
        return {
            "factors": [list(f) for f in self.factors],
            "entries": [{"highest_weight": list(k), "multiplicity": v} for k, v in self.entries.items()],
        }


def _require_dominant(d: RootDatum, lam) -> Vector:
    lam = d.check_coweight(lam)
    if not rd.is_dominant(d, lam):
        raise DatumError(f"{list(lam)} is not dominant")
    return lam


def tensor_decompose(d: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> TensorTable:
    """N^eta for L(lam) (x) L(mu) by the Brauer-Klimyk rule.

    Each weight nu of L(lam) contributes m_lam(nu) * sign(w) to
    eta = w(nu + mu + rho) - rho, where w makes nu + mu + rho dominant;
    a shifted weight on a wall contributes nothing.
    """
    lam = _require_dominant(d, lam)
    mu = _require_dominant(d, mu)
    return _tensor_cache.get_or_compute((d, lam, mu), lambda: _klimyk(d, lam, mu))


def _klimyk(d: RootDatum, lam: Vector, mu: Vector) -> TensorTable:
    table = mu_.kostant_table(d, lam)
    two_rho = d.two_rho_check
    acc: Counter = Counter()
    for nu, m in table.entries.items():
        x = tuple(2 * (a + b) + r for a, b, r in zip(nu, mu, two_rho))
        dom, _ = rd.dominant_representative(d, x)
        if any(rd.pairing(a, dom) == 0 for a in d.simple_roots):
            continue
        eta2 = rd._sub(dom, two_rho)
        if any(v % 2 for v in eta2):
            raise ArithmeticError("shifted weight left the lattice")
        sign = -1 if rd.length_of_regular(d, x) % 2 else 1
        acc[tuple(v // 2 for v in eta2)] += sign * m
    negative = {k: v for k, v in acc.items() if v < 0}
    if negative:
        raise ArithmeticError(f"negative tensor multiplicities after cancellation: {negative}")
    return TensorTable((lam, mu), {k: v for k, v in acc.items() if v})


# ---------------------------------------------------------------------------
# Independent verification path


def character_product(d: RootDatum, a: mu_.MultiplicityTable, b: mu_.MultiplicityTable) -> Dict[Vector, int]:
    """Character of the tensor product: the convolution of two weight tables."""
    out: Counter = Counter()
    for x, m in a.entries.items():
        for y, n in b.entries.items():
            out[rd._add(x, y)] += m * n
    return dict(out)


def decompose_character(d: RootDatum, character: Mapping[Vector, int]) -> Dict[Vector, int]:
    """Write a W-invariant character as a sum of irreducible characters by
    repeatedly removing the character of a maximal dominant weight."""
    rest = Counter({k: v for k, v in character.items() if v})
    out: Dict[Vector, int] = {}
    while rest:
        dominant = [k for k in rest if rd.is_dominant(d, k)]
        if not dominant:
            raise ArithmeticError("character is not W-invariant")
        top = max(dominant, key=lambda k: (height2(d, k), k))
        if any(k != top and dominance_leq(d, top, k) for k in dominant):
            raise AssertionError("maximal weight selection failed")
        c = rest[top]
        if c < 0:
            raise ArithmeticError(f"negative coefficient {c} at {list(top)}")
        out[top] = c
        for k, m in mu_.freudenthal_table(d, top).entries.items():
            rest[k] -= c * m
            if rest[k] == 0:
                del rest[k]
    return out


def tensor_by_characters(d: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> TensorTable:
    lam = _require_dominant(d, lam)
    mu = _require_dominant(d, mu)
    ch = character_product(d, mu_.freudenthal_table(d, lam), mu_.freudenthal_table(d, mu))
    return TensorTable((lam, mu), decompose_character(d, ch))


# ---------------------------------------------------------------------------
# Contracts


@dataclass
class Report:
    """Outcome of a combinatorial check; ``violations`` name what failed."""

    name: str
    passed: bool = True
    violations: List[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def fail(self, message: str) -> None:
        self.passed = False
        self.violations.append(message)

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, "violations": list(self.violations),
                "details": self.details}


def verify_support_and_top(d: RootDatum, t: TensorTable) -> Report:
    """Support inside the closure of Gr^(lam+mu), top piece of multiplicity
    one, and every summand in the component of lam + mu."""
    lam, mu = t.factors
    top = rd._add(lam, mu)
    report = Report("support_and_top", details={"top": list(top)})
    if t[top] != 1:
        report.fail(f"N^{list(top)} = {t[top]}, expected 1")
    target = gr.component_of(d, top)
    for eta, n in t.entries.items():
        if n < 0:
            report.fail(f"negative multiplicity {n} at {list(eta)}")
        if not rd.is_dominant(d, eta):
            report.fail(f"non-dominant summand {list(eta)}")
        if not dominance_leq(d, eta, top):
            report.fail(f"summand {list(eta)} not <= {list(top)}")
        if gr.component_of(d, eta) != target:
            report.fail(f"summand {list(eta)} lies in another component")
    return report


def semismall_estimate_check(d: RootDatum, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> Report:
    """Fixed-point form of the semi-smallness estimate for convolution.

    With nu replaced by its antidominant conjugate, every pair (phi, psi) of
    weights of L(lam), L(mu) with phi + psi = nu must satisfy
    ht(lam + phi) <= ht(lam + mu + nu).
    """
    lam = _require_dominant(d, lam)
    mu = _require_dominant(d, mu)
    nu = rd.antidominant_representative(d, d.check_coweight(nu))
    wl = mu_.weight_diagram(d, lam)
    wm = mu_.weight_diagram(d, mu)
    bound2 = height2(d, rd._add(rd._add(lam, mu), nu))
    report = Report("semismall", details={"nu": list(nu)})
    best2 = None
    pairs = 0
    for phi in sorted(wl):
        psi = rd._sub(nu, phi)
        if psi not in wm:
            continue
        pairs += 1
        h2 = height2(d, rd._add(lam, phi))
        best2 = h2 if best2 is None else max(best2, h2)
        if h2 > bound2:
            report.fail(f"ht(lam+phi) = {h2 / 2} > {bound2 / 2} for phi={list(phi)}, psi={list(psi)}")
    report.details.update({
        "pairs": pairs,
        "max_height": None if best2 is None else best2 // 2,
        "bound": bound2 // 2 if bound2 % 2 == 0 else bound2 / 2,
    })
    return report


def compose(d: RootDatum, first: Mapping[Vector, int], eta: Sequence[int], left: bool = True) -> Dict[Vector, int]:
    """Tensor a formal sum of irreducibles with L(eta) (on the right, or on
    the left when ``left`` is False)."""
    out: Counter = Counter()
    for sigma, n in first.items():
        t = tensor_decompose(d, sigma, eta) if left else tensor_decompose(d, eta, sigma)
        for tau, m in t.entries.items():
            out[tau] += n * m
    return {k: v for k, v in out.items() if v}


def associativity_check(d: RootDatum, lam: Sequence[int], mu: Sequence[int], eta: Sequence[int]) -> Report:
    """(L(lam) (x) L(mu)) (x) L(eta) and L(lam) (x) (L(mu) (x) L(eta)) have
    the same decomposition."""
    lam, mu, eta = (_require_dominant(d, x) for x in (lam, mu, eta))
    lhs = compose(d, tensor_decompose(d, lam, mu).entries, eta)
    rhs = compose(d, tensor_decompose(d, mu, eta).entries, lam, left=False)
    report = Report("associativity", details={"terms": len(lhs)})
    for tau in sorted(set(lhs) | set(rhs)):
        if lhs.get(tau, 0) != rhs.get(tau, 0):
            report.fail(f"tau={list(tau)}: {lhs.get(tau, 0)} != {rhs.get(tau, 0)}")
    return report
