"""Batch verification suites.

Each suite runs a family of exact checks over bounded or seeded-random
inputs and returns a single ``Report``.  Work items may be spread over a
thread pool; results are merged in input order, so the report does not
depend on ``jobs``.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from . import grassmannian as gr
from . import isogeny as iso
from . import multiplicities as mult
from . import root_datum as rd
from . import tensor as tn
from .root_datum import RootDatum, Vector
from .tensor import Report

MAX_VIOLATIONS = 20


def _run(name: str, items: Sequence, check: Callable[[object], List[str]], jobs: int = 1) -> Report:
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check, items))
    else:
        results = [check(x) for x in items]
    report = Report(name, details={"cases": len(items)})
    for problems in results:
        for p in problems:
            if len(report.violations) < MAX_VIOLATIONS:
                report.fail(p)
            else:
                report.passed = False
    report.details["failed_cases"] = sum(1 for r in results if r)
    return report


def sample_dominant(d: RootDatum, count: int, max_height2: int, seed: int, arity: int = 2) -> List[Tuple[Vector, ...]]:
    """``count`` seeded random tuples of dominant coweights of bounded height."""
    pool = rd.dominant_coweights(d, max_height2)
    rng = random.Random(seed)
    return [tuple(rng.choice(pool) for _ in range(arity)) for _ in range(count)]


# ---------------------------------------------------------------------------


def duality_suite(data: Iterable[RootDatum], jobs: int = 1) -> Report:
    def check(d):
        return [] if rd.dual(rd.dual(d)) == d else [f"{d.name}: dual(dual(d)) != d"]

    return _run("duality", list(data), check, jobs)


def oracle_suite(d: RootDatum, bound: int, jobs: int = 1) -> Report:
    """Kostant = Freudenthal at every weight, dimension sum, support law."""

    def check(lam):
        out = []
        k = mult.kostant_table(d, lam)
        f = mult.freudenthal_table(d, lam)
        diagram = mult.weight_diagram(d, lam)
        for nu in sorted(set(k.support) | set(f.support) | diagram):
            if k[nu] != f[nu]:
                out.append(f"lam={list(lam)} nu={list(nu)}: kostant {k[nu]} != freudenthal {f[nu]}")
            in_support = rd.dominance_leq(d, rd.dominant_representative(d, nu)[0], lam)
            if (f[nu] > 0) != in_support:
                out.append(f"lam={list(lam)} nu={list(nu)}: support law fails")
        if f.dimension != mult.weyl_dimension(d, lam):
            out.append(f"lam={list(lam)}: sum {f.dimension} != Weyl dimension {mult.weyl_dimension(d, lam)}")
        return out

    return _run("oracle", rd.dominant_coweights(d, bound), check, jobs)


def complementarity_suite(d: RootDatum, bound: int, jobs: int = 1) -> Report:
    def check(lam):
        out = []
        dim = gr.orbit_dim(d, lam)
        for nu in sorted(mult.weight_diagram(d, lam)):
            s = gr.sv_intersection_dim(d, lam, nu)
            t = gr.tv_intersection_dim(d, lam, nu)
            if s is None or t is None or s < 0 or t < 0 or s + t != dim:
                out.append(f"lam={list(lam)} nu={list(nu)}: {s} + {t} != {dim}")
        return out

    return _run("complementarity", rd.dominant_coweights(d, bound), check, jobs)


def bounded_coweights(d: RootDatum, bound: int) -> List[Vector]:
    """Coweights whose dominant conjugate has <2 rho, .> <= bound."""
    out = set()
    for lam in rd.dominant_coweights(d, bound):
        out.update(rd.weyl_orbit(d, lam))
    return sorted(out)


def iota_suite(d: RootDatum, bound: int, jobs: int = 1) -> Report:
    vs = bounded_coweights(d, bound)
    comp = {v: gr.component_of(d, v) for v in vs}

    def check(nu):
        return [f"nu={list(nu)} eta={list(eta)}" for eta in vs
                if comp[eta] == comp[nu] and not rd.iota_order_check(d, nu, eta)]

    report = _run("iota", vs, check, jobs)
    report.details["pairs"] = sum(1 for a in vs for b in vs if comp[a] == comp[b])
    return report


def semismall_suite(d: RootDatum, bound: int, jobs: int = 1) -> Report:
    """Every (lam, mu) with <2 rho, .> <= bound and every G(O)-orbit nu in
    the closure of Gr^(lam+mu)."""
    lams = rd.dominant_coweights(d, bound)
    items = [(a, b) for a in lams for b in lams]

    def check(pair):
        lam, mu = pair
        out = []
        for nu in mult.dominant_weights(d, rd._add(lam, mu)):
            r = tn.semismall_estimate_check(d, lam, mu, nu)
            out.extend(f"lam={list(lam)} mu={list(mu)}: {v}" for v in r.violations)
        return out

    report = _run("semismall", items, check, jobs)
    report.details["triples"] = sum(len(mult.dominant_weights(d, rd._add(a, b))) for a, b in items)
    return report


def tensor_suite(d: RootDatum, count: int = 50, bound: int = 12, seed: int = 0, jobs: int = 1) -> Report:
    """Commutativity, dimension product, top piece, support, components and
    nonnegativity for seeded random pairs; plus agreement with the
    character-product decomposition."""

    def check(pair):
        lam, mu = pair
        out = []
        try:
            t = tn.tensor_decompose(d, lam, mu)
        except ArithmeticError as exc:
            return [f"lam={list(lam)} mu={list(mu)}: {exc}"]
        if t != tn.tensor_decompose(d, mu, lam):
            out.append(f"lam={list(lam)} mu={list(mu)}: not commutative")
        total = sum(n * mult.weyl_dimension(d, eta) for eta, n in t.entries.items())
        if total != mult.weyl_dimension(d, lam) * mult.weyl_dimension(d, mu):
            out.append(f"lam={list(lam)} mu={list(mu)}: dimension {total} != product")
        out.extend(f"lam={list(lam)} mu={list(mu)}: {v}" for v in tn.verify_support_and_top(d, t).violations)
        if t != tn.tensor_by_characters(d, lam, mu):
            out.append(f"lam={list(lam)} mu={list(mu)}: differs from character decomposition")
        return out

    return _run("tensor", sample_dominant(d, count, bound, seed), check, jobs)


def associativity_suite(d: RootDatum, count: int = 25, bound: int = 6, seed: int = 0, jobs: int = 1) -> Report:
    def check(triple):
        return [f"{[list(x) for x in triple]}: {v}" for v in tn.associativity_check(d, *triple).violations]

    return _run("associativity", sample_dominant(d, count, bound, seed, arity=3), check, jobs)


def poincare_suite(d: RootDatum, bound: int, jobs: int = 1) -> Report:
    def check(lam):
        p = mult.ic_poincare(d, lam)
        out = []
        if not p.is_palindromic():
            out.append(f"lam={list(lam)}: not palindromic")
        parity = gr.component_parity(d, gr.component_of(d, lam), lam)
        if p.parities() != {parity}:
            out.append(f"lam={list(lam)}: parities {sorted(p.parities())} != {{{parity}}}")
        if p.total != mult.weyl_dimension(d, lam):
            out.append(f"lam={list(lam)}: total {p.total} != Weyl dimension")
        return out

    return _run("poincare", rd.dominant_coweights(d, bound), check, jobs)


def weylmod_suite(d: RootDatum, bound: int, jobs: int = 1) -> Report:
    def check(lam):
        out = []
        w = iso.weyl_schur_character(d, lam, iso.WEYL)
        s = iso.weyl_schur_character(d, lam, iso.SCHUR)
        if w.table != s.table:
            out.append(f"lam={list(lam)}: Weyl and Schur ranks differ")
        bad = iso.duality_mismatches(d, lam)
        if bad:
            out.append(f"lam={list(lam)}: duality fails at {[list(b) for b in bad[:5]]}")
        return out

    return _run("weylmod", rd.dominant_coweights(d, bound), check, jobs)


SUITES = {
    "oracle": oracle_suite,
    "complementarity": complementarity_suite,
    "iota": iota_suite,
    "semismall": semismall_suite,
    "poincare": poincare_suite,
    "weylmod": weylmod_suite,
    "tensor": tensor_suite,
    "associativity": associativity_suite,
}


def run_suite(name: str, d: RootDatum, bound: Optional[int] = None, seed: int = 0,
              count: Optional[int] = None, jobs: int = 1) -> Report:
    if name == "duality":
        return duality_suite([d], jobs)
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    if name in ("tensor", "associativity"):
        kwargs = {"seed": seed, "jobs": jobs}
        if bound is not None:
            kwargs["bound"] = bound
        if count is not None:
            kwargs["count"] = count
        return fn(d, **kwargs)
    return fn(d, 8 if bound is None else bound, jobs=jobs)
