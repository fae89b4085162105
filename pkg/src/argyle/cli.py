"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 unverified component
under ``--strict``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from fractions import Fraction

from .chains import ChainLabel, DomainError
from .collision import (DEFAULT_BUDGET, FormSpaceSpec, OracleBudgetExceeded, bpf_tuple_class,
                        fq_counts)
from .dimension import higgs_moduli_dimension, moduli_dimension
from .geometry import EmptyStratum, block_decompose, closure_geometry, h0_end, h1_end
from .localization import series_report
from .reference import published_stratum, variety_class, variety_str
from .series import IntPoly, grassmannian_class, multiply
from .sigma import (SingularSigmaSystem, alpha_from_sigma, build_sigma_system, pi_prime_first_degree,
                    pullback_degrees, sigma_determinant_check, solve_sigma)
from .splittings import SplittingType, generic_splitting, stratum_admissible

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_UNVERIFIED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- value encoding --------------------------------------------------------

def poly_json(p: IntPoly) -> list[str]:
    return [str(c) for c in p.coeffs]


def rational_json(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _scalar_text(v) -> str:
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return v["num"] if v["den"] == "1" else f"{v['num']}/{v['den']}"
    if isinstance(v, list):
        return ";".join(_scalar_text(x) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return "" if v is None else str(v)


def flatten(obj, prefix=""):
    """(dotted key, scalar text) pairs; polynomial arrays become ';'-joined coefficients."""
    if isinstance(obj, dict) and set(obj) != {"num", "den"}:
        for k, v in obj.items():
            yield from flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and obj and all(isinstance(x, dict) and set(x) != {"num", "den"} for x in obj):
        for i, v in enumerate(obj):
            yield from flatten(v, f"{prefix}.{i}")
    else:
        yield prefix, _scalar_text(obj)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False) + "\n"
    rows = list(flatten(report["results"]))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerows(rows)
        return buf.getvalue()
    lines = [f"{report['command']}: {report.get('summary', '')}".rstrip()]
    lines += [f"  {k} = {v}" for k, v in rows]
    return "\n".join(lines) + "\n"


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# --- commands --------------------------------------------------------------

def _component_json(c) -> dict:
    return {
        "ranks": [str(r) for r in c.label.ranks],
        "degrees": [str(d) for d in c.label.degrees],
        "beta": str(c.beta),
        "class": poly_json(c.total_class),
        "class_text": str(c.total_class),
        "verified": c.verified,
        "flags": dict(c.flags),
        "strata": [{
            "splittings": [str(s) for s in rec.splittings],
            "closure": " ; ".join(g.describe() for g in rec.geometries) or "pt",
            "class": poly_json(rec.stratum_class),
            "removed_collisions": [loc.describe() for loc in rec.removed],
        } for rec in c.strata],
        **({"candidates": {k: poly_json(v) for k, v in c.candidates.items()}} if c.candidates else {}),
    }


def cmd_betti(args):
    rep = series_report(args.r, args.d, args.t)
    results = {"series": poly_json(rep.series),
               "euler_characteristic": str(rep.series.euler_characteristic()),
               "components": str(len(rep.components)),
               "unverified": str(len(rep.unverified))}
    return results, str(rep.series), bool(rep.unverified)


def cmd_components(args):
    rep = series_report(args.r, args.d, args.t)
    results = {"components": [_component_json(c) for c in rep.components],
               "series": poly_json(rep.series)}
    return results, f"{len(rep.components)} components", bool(rep.unverified)


def _label(args) -> ChainLabel:
    return ChainLabel(_ints(args.ranks), _ints(args.degrees), args.twist, getattr(args, "genus", 0))


def cmd_stratum(args):
    label = _label(args)
    blocks = block_decompose(label)
    if len(args.splitting) != len(blocks):
        raise UsageError(f"{len(blocks)} middle node(s) need {len(blocks)} --splitting value(s)")
    splittings = {b.middle_index: SplittingType.from_degrees(_ints(s)) for b, s in zip(blocks, args.splitting)}
    out_blocks, total_dim = [], 0
    for b in blocks:
        s = splittings[b.middle_index]
        g = closure_geometry(b, s, convention=args.convention)
        total_dim += g.dimension
        entry = {"middle_node": str(b.middle_index + 1), "shape": b.shape, "splitting": str(s),
                 "closure": g.describe(),
                 "proj_dim": None if g.proj_dim is None else str(g.proj_dim),
                 "grassmannians": [f"{a},{n}" for a, n in g.gr_factors],
                 "class": poly_json(g.motivic_class()), "dimension": str(g.dimension)}
        printed = published_stratum(b, s)
        if printed is not None and variety_class(printed) != g.motivic_class():
            logging.getLogger("argyle").warning(
                "published closure %s for splitting %s differs from computed %s",
                variety_str(printed), s, g.describe())
        out_blocks.append(entry)
    h0 = [h0_end(splittings[i]) if i in splittings else 1 for i in range(label.n)]
    h1 = sum(h1_end(splittings[i]) for i in splittings)
    theorem = moduli_dimension(label, h0)
    results = {"blocks": out_blocks, "stratum_dimension": str(total_dim),
               "theorem_dimension": str(theorem), "h1_end_total": str(h1),
               "dimension_check": total_dim == theorem - h1,
               "admissible": stratum_admissible(label, splittings, blocks)}
    return results, " x ".join(e["closure"] for e in out_blocks), False


def cmd_dimension(args):
    label = _label(args)
    if args.h0_end:
        h0 = list(_ints(args.h0_end))
    elif label.genus == 0:
        h0 = [h0_end(generic_splitting(r, d)) for r, d in zip(label.ranks, label.degrees)]
    else:
        raise DomainError("h^0(End U_i) values are required in positive genus (--h0-end)")
    results = {"dimension": str(moduli_dimension(label, h0)), "h0_end": [str(x) for x in h0]}
    if label.twist >= 1:
        results["higgs_dimension"] = str(higgs_moduli_dimension(label.rank, label.twist))
    return results, results["dimension"], False


def cmd_sigma(args):
    label = _label(args)
    system = build_sigma_system(label)
    sigma = solve_sigma(system)
    det, closed = sigma_determinant_check(label.ranks)
    b = pullback_degrees(label)
    results = {"sigma": [rational_json(x) for x in sigma],
               "alpha": [rational_json(x) for x in alpha_from_sigma(label, sigma)],
               "e": str(system.e), "degree_shift": str(system.shift),
               "determinant": rational_json(det), "determinant_closed_form": rational_json(closed),
               "pullback_degrees": [str(x) for x in b],
               "pullback_first_check": b[0] == pi_prime_first_degree(label)}
    return results, "sigma = (" + ", ".join(str(x) for x in sigma) + ")", False


def cmd_oracle(args):
    degrees = _ints(args.degrees)
    dims = _ints(args.dims) if args.dims else (1,) * len(degrees)
    if len(dims) != len(degrees):
        raise UsageError("--dims and --degrees differ in length")
    spec = FormSpaceSpec(tuple(zip(dims, degrees)))
    full = multiply(*(grassmannian_class(s, e + 1) for s, e in spec.factors))
    bpf = bpf_tuple_class(spec.factors)
    expected = {"coprime": bpf, "common_zero": full - bpf, "true": full}
    rows = []
    for q in _ints(args.q):
        counts = fq_counts(spec, q, budget=args.oracle_budget)
        for pred in args.predicate:
            count = counts[pred]
            want = expected[pred].evaluate(q)
            rows.append({"q": str(q), "predicate": pred, "count": str(count),
                         "recursion": str(want), "agree": count == want})
    results = {"factors": [f"{s},{e}" for s, e in spec.factors],
               "classes": {k: poly_json(v) for k, v in expected.items()}, "counts": rows}
    ok = all(r["agree"] for r in rows)
    return results, "counts agree" if ok else "COUNTS DISAGREE", False


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--strict", action="store_true", help="exit 3 if any component is UNVERIFIED")
    common.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET,
                        help="largest tuple space the finite-field oracle may enumerate")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--timing", action="store_true", help="add elapsed seconds to the report")

    p = _Parser(prog="argyle", description="Exact Poincaré series and chain moduli computations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    for name, helptext in (("betti", "Poincaré polynomial of the twisted Higgs moduli space"),
                           ("components", "fixed components with Morse index, class and strata")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("r", type=int)
        sp.add_argument("d", type=int)
        sp.add_argument("t", type=int)

    def chain_args(sp, genus=False):
        sp.add_argument("--ranks", required=True, help="comma-separated, e.g. 1,2,1")
        sp.add_argument("--degrees", required=True, help="comma-separated; use --degrees=-1,0 for a leading minus")
        sp.add_argument("--twist", type=int, required=True)
        if genus:
            sp.add_argument("--genus", type=int, default=0)

    sp = sub.add_parser("stratum", parents=[common], help="closure geometry of a splitting stratum")
    chain_args(sp)
    sp.add_argument("--splitting", action="append", required=True,
                    help="summand degrees of one middle node; repeat per middle node")
    sp.add_argument("--convention", choices=("corrected", "printed"), default="corrected")

    sp = sub.add_parser("dimension", parents=[common], help="expected dimension of chain moduli")
    chain_args(sp, genus=True)
    sp.add_argument("--h0-end", help="comma-separated h^0(End U_i), required when genus > 0")

    sp = sub.add_parser("sigma", parents=[common], help="stability parameters for an argyle chain")
    chain_args(sp)

    sp = sub.add_parser("oracle", parents=[common], help="finite-field counts of form tuples")
    sp.add_argument("--degrees", required=True, help="form degrees e_i")
    sp.add_argument("--dims", help="subspace dimensions s_i (default all 1)")
    sp.add_argument("--q", required=True, help="comma-separated primes")
    sp.add_argument("--predicate", action="append", choices=("coprime", "common_zero", "true"))
    return p


COMMANDS = {"betti": cmd_betti, "components": cmd_components, "stratum": cmd_stratum,
            "dimension": cmd_dimension, "sigma": cmd_sigma, "oracle": cmd_oracle}


class _Collect(logging.Handler):
    def __init__(self):
        super().__init__(logging.WARNING)
        self.messages: list[str] = []

    def emit(self, record):
        msg = record.getMessage()
        if msg not in self.messages:
            self.messages.append(msg)


def cli_main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "oracle" and not args.predicate:
            args.predicate = ["coprime", "common_zero"]
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    logger = logging.getLogger("argyle")
    collect = _Collect()
    logger.addHandler(collect)
    old_propagate, logger.propagate = logger.propagate, False
    start = time.perf_counter()
    try:
        results, summary, unverified = COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, EmptyStratum, SingularSigmaSystem, OracleBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    finally:
        logger.removeHandler(collect)
        logger.propagate = old_propagate

    inputs = {k: v for k, v in vars(args).items()
              if k not in ("format", "out", "strict", "timing", "oracle_budget", "command")}
    report = {"command": args.command, "input": {k: v for k, v in inputs.items()},
              "summary": summary, "results": results, "warnings": collect.messages}
    if args.timing:
        report["timing_seconds"] = f"{time.perf_counter() - start:.3f}"
    text = render(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for w in collect.messages:
        print(f"warning: {w}", file=sys.stderr)
    if args.strict and unverified:
        print("error: UNVERIFIED components present (--strict)", file=sys.stderr)
        return EXIT_UNVERIFIED
    return EXIT_OK


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
