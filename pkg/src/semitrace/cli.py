"""Command-line entry point: ``semitrace <subcommand> ...``.

Exit codes: 0 clean, 1 a proved statement failed (a bug), 2 usage error.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Callable, Iterable, Iterator

from . import report as rp
from .core import NumericalSemigroup, normalize
from .enumeration import minimal_generating_sets, ordered_map, threegen_sets
from .errors import InternalInconsistency, SemitraceError
from .families import ArithmeticParams, arithmetic, conductor_family, family_tm_i, family_tm_ii, med_family
from .ideals import trace_ideal
from .shifted import scan, scan_general, shift_params

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

SCAN_COLUMNS = (
    "j", "gens", "divisor", "degenerate", "residue", "residue3", "symmetric",
    "nearly_gorenstein", "almost_symmetric", "matrix_a", "matrix_b",
)


class Output:
    """Collects the chosen format and destination for one invocation."""

    def __init__(self, args):
        self.fmt = "json" if args.json else "csv" if args.csv else "text"
        if self.fmt == "text" and args.out:
            if args.out.endswith(".json"):
                self.fmt = "json"
            elif args.out.endswith(".csv"):
                self.fmt = "csv"
        self.path = args.out
        self._fh = None

    def write(self, text: str):
        if self._fh is None:
            self._fh = open(self.path, "w", encoding="utf-8", newline="") if self.path else sys.stdout
        self._fh.write(text)

    def close(self):
        if self._fh is not None and self._fh is not sys.stdout:
            self._fh.close()


def _semigroup(gens: list[int]) -> tuple[NumericalSemigroup, int]:
    H, d = normalize(gens)
    if d > 1:
        print(f"note: gcd of the generators is {d}; working with {H}", file=sys.stderr)
    return H, d


# single-semigroup commands

SINGLE = {
    "info": (lambda H, pad: {**rp.semigroup_record(H, pad), **rp.trace_fields(H, pad)},
             rp.ROW_COLUMNS + rp.TRACE_COLUMNS, rp.ROW_COLUMNS + ("trace_gens",)),
    "trace": (lambda H, pad: {**rp.semigroup_record(H, pad), **rp.trace_fields(H, pad)},
              rp.ROW_COLUMNS + rp.TRACE_COLUMNS,
              ("gens", "trace_gens", "trace_sporadic", "position", "also_equals_M", "residue")),
    "residue": (lambda H, pad: rp.semigroup_record(H, pad), rp.ROW_COLUMNS, ("residue",)),
    "classify": (lambda H, pad: {**rp.semigroup_record(H, pad), "pseudo_symmetric": H.is_pseudo_symmetric},
                 rp.ROW_COLUMNS + ("pseudo_symmetric",),
                 ("symmetric", "pseudo_symmetric", "almost_symmetric", "nearly_gorenstein",
                  "residue", "type", "position", "cor13_ok", "q12_ok")),
    "matrix3": (lambda H, pad: {**rp.semigroup_record(H, pad), **rp.matrix_fields(H)},
                rp.ROW_COLUMNS + rp.MATRIX_COLUMNS,
                ("gens",) + rp.MATRIX_COLUMNS + ("residue",)),
}


def cmd_single(args, out: Output) -> int:
    build, columns, text_keys = SINGLE[args.command]
    H, d = _semigroup(args.gens)
    row = build(H, args.window_override)
    if out.fmt == "json":
        out.write(rp.to_json(rp.make_report(args.command, {"gens": args.gens, "divisor": d}, [row])))
    elif out.fmt == "csv":
        out.write(rp.to_csv([row], columns))
    else:
        out.write(rp.to_text(row, text_keys))
    return EXIT_OK


# corpora

def _corpus(args) -> list[tuple[int, ...]]:
    if args.kind == "threegen":
        sets = list(threegen_sets(args.N))
    else:
        sets = list(minimal_generating_sets(args.N, args.E))
    if args.sample:
        rng = random.Random(args.seed)
        sets = sorted(rng.sample(sets, min(args.sample, len(sets))))
    return sets


def _row_worker(task: tuple[tuple[int, ...], int]) -> dict:
    gens, pad = task
    return rp.semigroup_record(NumericalSemigroup(gens), pad)


def _rows(args, sets: Iterable[tuple[int, ...]]) -> Iterator[dict]:
    return ordered_map(_row_worker, [(g, args.window_override) for g in sets], jobs=args.jobs)


def cmd_enumerate(args, out: Output) -> int:
    sets = _corpus(args)
    rows = _rows(args, sets)
    if args.nonsymmetric:
        rows = (r for r in rows if not r["symmetric"])
    inputs = {"kind": args.kind, "N": args.N, "E": args.E if args.kind == "bounded" else 3,
              "sample": args.sample, "seed": args.seed, "nonsymmetric": args.nonsymmetric}
    if out.fmt == "json":
        rows = list(rows)
        out.write(rp.to_json(rp.make_report("enumerate", inputs, rows, {"count": len(rows)})))
    elif out.fmt == "csv":
        out.write(rp.csv_header(rp.ROW_COLUMNS))
        for r in rows:
            out.write(rp.csv_row(r, rp.ROW_COLUMNS))
    else:
        count = 0
        for r in rows:
            count += 1
            out.write(f"{r['gens']} Fr={r['frobenius']} type={r['type']} res={r['residue']} {r['position']}\n")
        out.write(f"count: {count}\n")
    return EXIT_OK


def _prop11(H: NumericalSemigroup, row: dict) -> bool:
    td = trace_ideal(H)
    c = H.conductor
    inside_h = all(H.contains(g) for g in td.ideal.gens)
    has_conductor = all(td.ideal.member(x) for x in range(c, c + H.mult))
    inside_m = H.is_symmetric or not td.ideal.member(0)
    return inside_h and has_conductor and inside_m


EXPERIMENTS: dict[str, tuple[bool, Callable[[NumericalSemigroup, dict], bool | None]]] = {
    # name -> (is a proved statement, check returning None when not applicable)
    "q12": (False, lambda H, r: r["q12_ok"]),
    "cor13": (True, lambda H, r: r["cor13_ok"]),
    "prop11": (True, _prop11),
    "prop22": (True, lambda H, r: r["residue"] <= r["genus"] - r["n"] if H.edim == 3 else None),
}


def cmd_experiment(args, out: Output) -> int:
    proved, check = EXPERIMENTS[args.name]
    sets = _corpus(args)
    checked = skipped = 0
    violations = []
    for gens, row in zip(sets, _rows(args, sets)):
        ok = check(NumericalSemigroup(gens), row)
        if ok is None:
            skipped += 1
            continue
        checked += 1
        if not ok:
            violations.append(row)
    summary = {
        "experiment": args.name,
        "proved_statement": proved,
        "checked": checked,
        "skipped": skipped,
        "violations": len(violations),
        "finding": bool(violations) and not proved,
    }
    inputs = {"kind": args.kind, "N": args.N, "E": args.E if args.kind == "bounded" else 3,
              "sample": args.sample, "seed": args.seed}
    if out.fmt == "json":
        out.write(rp.to_json(rp.make_report(f"experiment {args.name}", inputs, violations, summary)))
    elif out.fmt == "csv":
        out.write(rp.to_csv(violations, rp.ROW_COLUMNS))
    else:
        out.write(rp.to_text(summary))
        for r in violations:
            out.write(f"witness: {rp.to_json(r).strip()}\n".replace("\n  ", " "))
    return EXIT_VIOLATION if proved and violations else EXIT_OK


FAMILY_ARGS = {
    "arithmetic": ("a", "d", "e"),
    "med": ("m", "q"),
    "tm1": ("a", "b", "c"),
    "tm2": ("a", "b", "c"),
    "conductor": ("a",),
}


def cmd_family(args, out: Output) -> int:
    names = FAMILY_ARGS[args.kind]
    vals = {n: getattr(args, n) for n in names}
    missing = [n for n, v in vals.items() if v is None]
    if missing:
        raise SemitraceError(f"--kind {args.kind} needs " + ", ".join(f"--{n}" for n in missing))
    build = {
        "arithmetic": lambda: arithmetic(ArithmeticParams(**vals), verify=False),
        "med": lambda: med_family(**vals, verify=False),
        "tm1": lambda: family_tm_i(**vals, verify=False),
        "tm2": lambda: family_tm_ii(**vals, verify=False),
        "conductor": lambda: conductor_family(**vals, verify=False),
    }[args.kind]
    member = build()
    checks = member.check() if member.applicable else {}
    row = {
        **rp.semigroup_record(member.semigroup, args.window_override),
        "family": member.kind,
        "params": member.params,
        "labeling": list(member.labeling),
        "predictions": {k: list(v) if isinstance(v, tuple) else v for k, v in member.predictions.items()},
        "predictions_applicable": member.applicable,
        "checks": checks,
        "note": member.note,
    }
    failed = [k for k, ok in checks.items() if not ok]
    summary = {"predictions_ok": not failed, "failed": failed}
    if out.fmt == "json":
        out.write(rp.to_json(rp.make_report("family", {"kind": args.kind, **vals}, [row], summary)))
    elif out.fmt == "csv":
        out.write(rp.to_csv([row], rp.ROW_COLUMNS))
    else:
        out.write(rp.to_text(row, ("gens", "labeling", "frobenius", "pf", "residue", "position",
                                   "predictions_applicable", "checks")))
        if member.note:
            out.write(f"note: {member.note}\n")
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_shift_scan(args, out: Output) -> int:
    if args.general:
        base = [int(t) for t in args.general.split(",")]
        if args.jmax is None:
            raise SemitraceError("--general needs --jmax")
        rep = scan_general(base, args.jmax, jobs=args.jobs).to_dict()
        rows, columns = rep.pop("rows"), ("j", "residue")
        status = EXIT_OK
    else:
        if args.a is None or args.b is None:
            raise SemitraceError("shift-scan needs --a and --b (or --general)")
        p = shift_params(args.a, args.b)
        jmax = args.jmax if args.jmax is not None else 2 * p.k + 4 * p.b
        r = scan(p, jmax, jobs=args.jobs)
        rep = r.to_dict()
        rows, columns = rep.pop("rows"), SCAN_COLUMNS
        status = EXIT_OK if r.ok else EXIT_VIOLATION
    if out.fmt == "json":
        inputs = {"a": args.a, "b": args.b, "jmax": args.jmax, "general": args.general}
        out.write(rp.to_json(rp.make_report("shift-scan", inputs, rows, rep)))
    elif out.fmt == "csv":
        out.write(rp.to_csv(rows, columns))
    else:
        out.write(rp.to_text(rep))
        for row in rows:
            out.write(f"j={row['j']} res={row['residue']}\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit one JSON document")
    fmt.add_argument("--csv", action="store_true", help="emit CSV with a header row")
    common.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")
    common.add_argument("--jobs", type=int, default=1, metavar="W", help="worker processes")
    common.add_argument("--seed", type=int, default=0, metavar="S", help="seed for --sample")
    common.add_argument("--window-override", type=int, default=0, metavar="PAD",
                        help="widen (or narrow, if negative) the dual scan window; testing only")

    parser = argparse.ArgumentParser(prog="semitrace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in [
        ("info", "all invariants of one semigroup"),
        ("trace", "canonical trace ideal"),
        ("residue", "residue |H \\ tr(H)|"),
        ("classify", "symmetric / almost symmetric / nearly Gorenstein flags"),
        ("matrix3", "structure matrix of a 3-generated semigroup"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("gens", type=int, nargs="+")
        p.set_defaults(func=cmd_single)

    def corpus_args(p):
        p.add_argument("--kind", choices=("threegen", "bounded"), default="threegen")
        p.add_argument("--N", type=int, required=True, help="largest generator")
        p.add_argument("--E", type=int, default=4, help="largest embedding dimension (bounded)")
        p.add_argument("--sample", type=int, default=0, help="random subset of this size")

    p = sub.add_parser("enumerate", parents=[common], help="stream records over a corpus")
    corpus_args(p)
    p.add_argument("--nonsymmetric", action="store_true", help="drop symmetric semigroups")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("experiment", parents=[common], help="check a bound over a corpus")
    p.add_argument("name", choices=sorted(EXPERIMENTS))
    corpus_args(p)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("family", parents=[common], help="member of a parametrized family")
    p.add_argument("--kind", choices=sorted(FAMILY_ARGS), required=True)
    for n in ("a", "b", "c", "d", "e", "m", "q"):
        p.add_argument(f"--{n}", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("shift-scan", parents=[common], help="residues along <j, j+a, j+b>")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--jmax", type=int)
    p.add_argument("--general", metavar="A1,...,AE", help="scan <A1+j, ..., AE+j> instead")
    p.set_defaults(func=cmd_shift_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args)
    try:
        return args.func(args, out)
    except InternalInconsistency as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except SemitraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
