"""Command-line interface: parse an ideal file, run the requested criteria,
emit a deterministic report, and exit 0/1/2 for PROVEN/REFUTED/INCONCLUSIVE
(>= 3 for errors)."""

from __future__ import annotations

import argparse
import sys
import time

from .criteria import CheckConfig, golod_verdict
from .fileformat import IdealFileError, Task, parse_ideal_file
from .poincare import BudgetExceededError
from .poly import GF, QQ, CharacteristicGateError, DegRevLex, Lex, PolyRing
from .report import (
    EXIT_BUDGET,
    EXIT_GATE,
    EXIT_USAGE,
    Report,
    emit_report,
)

CRITERIA = ("auto", "strongly-golod", "prop-cycle", "sandwich", "product", "lofwall",
            "refute-only")


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="golod",
                                 description="Certify or refute the Golod property of "
                                             "homogeneous ideals.")
    sub = ap.add_subparsers(dest="command", required=True)
    chk = sub.add_parser("check", help="run criteria on the ideals in an ideal file")
    chk.add_argument("file", help="path to the ideal file ('-' for stdin)")
    chk.add_argument("--criterion", choices=CRITERIA, default=None,
                     help="restrict to one criterion (default: file task or auto)")
    chk.add_argument("--truncation", type=int, default=None, metavar="N",
                     help="Poincare series truncation order (default 6)")
    chk.add_argument("--rho-mmax", type=int, default=None, metavar="M",
                     help="power bound for bounded rho verification (default 4)")
    chk.add_argument("--field", default=None, metavar="F",
                     help="override the file's coefficient field (Q or F<p>)")
    chk.add_argument("--order", choices=("degrevlex", "lex"), default=None,
                     help="override the monomial order")
    chk.add_argument("--budget-seconds", type=float, default=None,
                     help="wall-clock budget; exceeding it is an error exit")
    chk.add_argument("--report", choices=("json", "text"), default="json")
    chk.add_argument("--timings", action="store_true",
                     help="include wall-clock timings (breaks byte-determinism)")
    return ap


def _override_ring(parsed, field_name, order_name):
    if field_name is None and order_name is None:
        return parsed
    from .fileformat import ParsedFile
    from .ideals import Ideal
    from .poly import Polynomial

    ring = parsed.ring
    fld = ring.field
    if field_name is not None:
        if field_name == "Q":
            fld = QQ
        elif field_name.startswith("F") and field_name[1:].isdigit():
            fld = GF(int(field_name[1:]))
        else:
            raise IdealFileError(f"unknown field {field_name!r}")
    order = ring.order
    if order_name is not None:
        order = DegRevLex() if order_name == "degrevlex" else Lex()
    new_ring = PolyRing(ring.names, field=fld, order=order)
    moved = {}
    for name, ideal in parsed.ideals.items():
        gens = []
        for g in ideal.generators:
            terms = {}
            for m, c in g.terms.items():
                v = new_ring.field.coerce(c)
                if v != new_ring.field.zero:
                    terms[m] = v
            gens.append(Polynomial(new_ring, terms))
        moved[name] = Ideal(new_ring, gens)
    return ParsedFile(new_ring, moved, parsed.tasks)


def _config_for(task: Task, args, ideals) -> CheckConfig:
    opts = dict(task.options)
    cfg = CheckConfig()
    cfg.criterion = args.criterion or opts.get("criterion", "auto")
    if cfg.criterion not in CRITERIA:
        raise IdealFileError(f"unknown criterion {cfg.criterion!r}")
    cfg.truncation = args.truncation or opts.get("truncation", cfg.truncation)
    cfg.rho_m_max = getattr(args, "rho_mmax", None) or opts.get("rho_mmax", cfg.rho_m_max)
    cfg.budget_seconds = args.budget_seconds
    for key in ("base", "b", "factor_a", "factor_b"):
        if key in opts and opts[key] not in ideals:
            raise IdealFileError(f"task option {key}={opts[key]!r} names no declared ideal")
    if "base" in opts:
        cfg.sandwich_base = ideals[opts["base"]]
        if "m" not in opts:
            raise IdealFileError("sandwich task needs m=<int>")
        cfg.sandwich_m = opts["m"]
    if "b" in opts:
        cfg.prop_cycle_partner = ideals[opts["b"]]
    if "factor_a" in opts or "factor_b" in opts:
        if not ("factor_a" in opts and "factor_b" in opts):
            raise IdealFileError("product task needs both factor_a and factor_b")
        cfg.product_factors = (ideals[opts["factor_a"]], ideals[opts["factor_b"]])
    return cfg


def run_check(parsed, args) -> Report:
    tasks = parsed.tasks or [Task(name) for name in parsed.ideals]
    results = []
    timings = {} if args.timings else None
    for task in tasks:
        cfg = _config_for(task, args, parsed.ideals)
        t0 = time.monotonic()
        verdict = golod_verdict(parsed.ideals[task.ideal], cfg)
        if timings is not None:
            timings[task.ideal] = round(time.monotonic() - t0, 3)
        results.append({
            "ideal": task.ideal,
            "generators": [str(g) for g in parsed.ideals[task.ideal].generators],
            "criterion": cfg.criterion,
            "verdict": {
                "status": verdict.status,
                "certificate": verdict.certificate,
                "details": verdict.details,
            },
        })
    fname = "Q" if parsed.ring.field.char == 0 else f"F{parsed.ring.field.char}"
    echo = {
        "ring": f"{fname}[{','.join(parsed.ring.names)}]",
        "order": parsed.ring.order.name,
        "ideals": {n: [str(g) for g in i.generators] for n, i in parsed.ideals.items()},
        "tasks": [{"ideal": t.ideal, "options": t.options} for t in tasks],
    }
    config_echo = {
        "criterion": args.criterion,
        "truncation": args.truncation,
        "rho_mmax": getattr(args, "rho_mmax", None),
        "budget_seconds": args.budget_seconds,
        "report": args.report,
    }
    budget = {"seconds": args.budget_seconds, "exceeded": False}
    return Report(echo, config_echo, results, budget, timings)


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        parsed = parse_ideal_file(text)
        parsed = _override_ring(parsed, args.field, args.order)
        report = run_check(parsed, args)
    except IdealFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CharacteristicGateError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GATE
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(emit_report(report, args.report))
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
