"""Command-line front end.

Every command prints canonical JSON (sorted keys, fixed coordinate order) or
a CSV/text projection of it.  Exit status: 0 on success, 1 on a domain or
usage error (a JSON error object is printed), 2 when a verification suite
finds a violation.

Coweights are given as comma-separated integers.  For named semisimple
types (``A2-sc``, ``B2-ad``, ...) they are coordinates in the basis of
fundamental coweights, i.e. the pairings with the simple roots; for GL_n and
custom data they are coordinates in the stored basis.  The basis used is
echoed in the output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from . import grassmannian as gr
from . import isogeny as iso
from . import multiplicities as mult
from . import root_datum as rd
from . import suites
from . import tensor as tn
from .root_datum import DatumError, RootDatum

VERBS = ("dual", "poset", "dims", "mult", "tensor", "isogeny", "weylmod", "pi1", "check")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


class Coordinates:
    """Conversion between command-line coordinates and stored coweights."""

    def __init__(self, d: RootDatum, labelled: bool):
        self.d = d
        self.labelled = labelled and d.is_semisimple
        self.basis = "fundamental_coweight" if self.labelled else "stored"

    def parse(self, text: str) -> rd.Vector:
        try:
            coords = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
        except ValueError:
            raise DatumError(f"cannot parse coweight {text!r}") from None
        if self.labelled:
            return rd.coweight_from_labels(self.d, coords)
        return self.d.check_coweight(coords)

    def show(self, y) -> list:
        return list(self.d.labels(y)) if self.labelled else list(y)


def load_datum(args) -> tuple:
    if args.custom_spec:
        try:
            with open(args.custom_spec) as fh:
                spec = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise DatumError(f"cannot read spec file: {exc}") from None
        d = rd.build_root_datum(spec)
        labelled = isinstance(spec, dict) and "cartan_type" in spec
        return d, labelled
    if args.type:
        d = rd.build_root_datum(args.type)
        return d, not d.name.startswith("GL")
    raise UsageError("one of --type or --custom-spec is required")


def _require(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required for {args.verb}")


def _csv(header: Sequence[str], rows: List[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, int) for x in v):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, sort_keys=True)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}-\n{_text(x, indent + 1)}" if isinstance(x, dict) else f"{pad}{json.dumps(x)}"
                         for x in obj)
    return f"{pad}{obj}"


def _emit(payload, fmt: str, csv_rows=None) -> str:
    if fmt == "csv":
        if csv_rows is None:
            raise UsageError("csv output is only available for table-valued commands")
        return _csv(*csv_rows)
    if fmt == "text":
        return _text(payload) + "\n"
    return dumps(payload)


# ---------------------------------------------------------------------------
# verbs


def cmd_dual(args, d, coords):
    return rd.datum_to_spec(rd.dual(d)), None


def cmd_pi1(args, d, coords):
    return {"datum": d.name, "pi1": rd.pi1(d).to_json()}, None


def cmd_poset(args, d, coords):
    bound = 8 if args.height_bound is None else args.height_bound
    nodes, edges = gr.closure_poset(d, bound)
    payload = {
        "basis": coords.basis,
        "datum": d.name,
        "height_bound": bound,
        "nodes": [{"coweight": coords.show(n), "orbit_dim": gr.orbit_dim(d, n)} for n in nodes],
        "edges": [[coords.show(a), coords.show(b)] for a, b in edges],
    }
    rows = (["lower", "upper"], [[" ".join(map(str, coords.show(a))), " ".join(map(str, coords.show(b)))]
                                 for a, b in edges])
    return payload, rows


def cmd_dims(args, d, coords):
    _require(args, "lambda_")
    lam = coords.parse(args.lambda_)
    comp = gr.component_of(d, lam)
    weights = [coords.parse(args.nu)] if args.nu else sorted(mult.weight_diagram(d, lam))
    entries = [{"nu": coords.show(nu),
                "s_dim": gr.sv_intersection_dim(d, lam, nu),
                "t_dim": gr.tv_intersection_dim(d, lam, nu)} for nu in weights]
    payload = {
        "basis": coords.basis,
        "datum": d.name,
        "lambda": coords.show(lam),
        "orbit_dim": gr.orbit_dim(d, lam),
        "component": comp.to_json(),
        "parity": gr.component_parity(d, comp, lam),
        "intersections": entries,
    }
    rows = (["nu", "s_dim", "t_dim"], [[" ".join(map(str, e["nu"])), e["s_dim"], e["t_dim"]] for e in entries])
    return payload, rows


def cmd_mult(args, d, coords):
    _require(args, "lambda_")
    lam = coords.parse(args.lambda_)
    if args.nu is not None:
        nu = coords.parse(args.nu)
        m = mult.mv_cycle_count(d, lam, nu)
        payload = {"basis": coords.basis, "datum": d.name, "lambda": coords.show(lam),
                   "nu": coords.show(nu), "multiplicity": m}
        return payload, (["nu", "multiplicity"], [[" ".join(map(str, coords.show(nu))), m]])
    table = mult.freudenthal_table(d, lam)
    items = sorted((coords.show(k), v) for k, v in table.entries.items())
    payload = {
        "basis": coords.basis,
        "datum": d.name,
        "lambda": coords.show(lam),
        "dimension": table.dimension,
        "entries": [{"nu": k, "multiplicity": v} for k, v in items],
    }
    return payload, (["nu", "multiplicity"], [[" ".join(map(str, k)), v] for k, v in items])


def cmd_tensor(args, d, coords):
    _require(args, "lambda_", "mu")
    lam, mu = coords.parse(args.lambda_), coords.parse(args.mu)
    t = tn.tensor_decompose(d, lam, mu)
    items = sorted((coords.show(k), v) for k, v in t.entries.items())
    payload = {
        "basis": coords.basis,
        "datum": d.name,
        "lambda": coords.show(lam),
        "mu": coords.show(mu),
        "entries": [{"eta": k, "multiplicity": v} for k, v in items],
    }
    return payload, (["eta", "multiplicity"], [[" ".join(map(str, k)), v] for k, v in items])


def cmd_isogeny(args, d, coords):
    der = iso.derived_datum(d)
    payload = {
        "datum": d.name,
        "pi1": rd.pi1(d).to_json(),
        "center_of_dual": iso.center_of_dual(d).to_json(),
        "central_torus_rank": iso.central_torus_rank(d),
        "adjoint": rd.datum_to_spec(iso.adjoint_datum(d)),
        "derived": rd.datum_to_spec(der),
        "dual_isogeny_kernel": iso.dual_isogeny_kernel(der).kernel.to_json(),
    }
    return payload, None


def cmd_weylmod(args, d, coords):
    _require(args, "lambda_")
    lam = coords.parse(args.lambda_)
    ch = iso.weyl_schur_character(d, lam, args.kind)
    items = sorted((coords.show(k), v) for k, v in ch.table.entries.items())
    payload = {
        "basis": coords.basis,
        "datum": d.name,
        "kind": ch.kind,
        "label": coords.show(lam),
        "ranks": [{"nu": k, "rank": v} for k, v in items],
    }
    return payload, (["nu", "rank"], [[" ".join(map(str, k)), v] for k, v in items])


def cmd_check(args, d, coords):
    _require(args, "suite")
    try:
        report = suites.run_suite(args.suite, d, bound=args.bound, seed=args.seed,
                                  count=args.count, jobs=args.jobs)
    except KeyError:
        raise UsageError(f"unknown suite {args.suite!r}; choose from "
                         f"{sorted(list(suites.SUITES) + ['duality'])}") from None
    payload = report.to_json()
    payload.update({"datum": d.name, "basis": "stored", "seed": args.seed})
    return payload, None


COMMANDS = {
    "dual": cmd_dual, "pi1": cmd_pi1, "poset": cmd_poset, "dims": cmd_dims, "mult": cmd_mult,
    "tensor": cmd_tensor, "isogeny": cmd_isogeny, "weylmod": cmd_weylmod, "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="satake", description="Combinatorics of the geometric Satake correspondence.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--type", help="named datum, e.g. A2-sc, B2-ad, GL3")
    p.add_argument("--custom-spec", help="JSON file with a datum specification")
    p.add_argument("--lambda", dest="lambda_", help="dominant coweight, comma separated")
    p.add_argument("--mu", help="dominant coweight, comma separated")
    p.add_argument("--nu", help="coweight, comma separated")
    p.add_argument("--height-bound", type=int, help="bound on <2 rho, .> for poset")
    p.add_argument("--bound", type=int, help="bound on <2 rho, .> for check suites")
    p.add_argument("--suite", help="verification suite for check")
    p.add_argument("--seed", type=int, default=0, help="seed for random suites")
    p.add_argument("--count", type=int, help="number of random cases for random suites")
    p.add_argument("--jobs", type=int, default=1, help="worker threads for check suites")
    p.add_argument("--kind", default="weyl", choices=("weyl", "schur"))
    p.add_argument("--basis", default="auto", choices=("auto", "fundamental", "stored"),
                   help="coordinates for coweights; auto uses fundamental coweights for named semisimple types")
    p.add_argument("--format", default="json", choices=("json", "csv", "text"))
    return p


def run(argv: Sequence[str]) -> tuple:
    """Execute one command; returns (exit_status, output_text)."""
    try:
        args = build_parser().parse_args(list(argv))
        d, labelled = load_datum(args)
        if args.basis != "auto":
            labelled = args.basis == "fundamental"
            if labelled and not d.is_semisimple:
                raise UsageError("the fundamental-coweight basis needs a semisimple datum")
        coords = Coordinates(d, labelled)
        payload, rows = COMMANDS[args.verb](args, d, coords)
        text = _emit(payload, args.format, rows)
    except (UsageError, DatumError, ArithmeticError) as exc:
        kind = "usage" if isinstance(exc, UsageError) else type(exc).__name__
        return 1, dumps({"error": {"type": kind, "message": str(exc)}})
    status = 2 if args.verb == "check" and not payload.get("passed", True) else 0
    return status, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
