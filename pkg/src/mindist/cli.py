"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 a proved bound or an internal
cross-check failed (always a bug).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .classify import find_shelling, is_cohen_macaulay, is_gorenstein, is_pure
from .complexes import stanley_reisner_ideal
from .distance import delta, delta_profile, is_unmixed, oracle_delta_forms, r_index, stable_value
from .errors import CrossValidationMismatch, MindistError, TheoremViolation
from .fileformat import read_complex
from .harness import SCHEMA_VERSION, SweepConfig, dumps, invariant_report, run_sweep, verify_bounds
from .homology import as_field

EXIT_OK, EXIT_INPUT, EXIT_BUG = 0, 1, 2


def _parse_n(text: str) -> tuple[int, ...]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError(f"bad vertex count list {text!r}")
    return tuple(out)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        sys.stdout.write(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, sort_keys=True, indent=1) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _table(rows: list[tuple[str, object]]) -> list[str]:
    width = max(len(k) for k, _ in rows)
    return [f"{k.ljust(width)}  {v}" for k, v in rows]


def _load(args):
    return read_complex(args.file, reindex=args.reindex)


def cmd_invariants(args) -> int:
    rep = invariant_report(_load(args), args.field)
    rows = [
        ("n", rep.n),
        ("facets", rep.facets),
        ("generators", rep.generators),
        ("krull_dim", rep.krull_dim),
        ("degree", rep.degree),
    ]
    rows += [(f"reg[{f}]", v) for f, v in rep.regularity.items()]
    rows += [("unmixed", rep.unmixed), ("shellable", rep.shellable)]
    rows += [(f"cohen_macaulay[{f}]", v) for f, v in rep.cohen_macaulay.items()]
    rows += [(f"gorenstein[{f}]", v) for f, v in rep.gorenstein.items()]
    rows += [("f_vector", rep.f_vector), ("hilbert", rep.hilbert)]
    d = rep.as_dict()
    d.pop("schema_version")
    _emit(args, d, _table(rows))
    return EXIT_OK


def cmd_delta(args) -> int:
    ideal = stanley_reisner_ideal(_load(args))
    prof = delta_profile(ideal, args.t_max)
    lines = [f"t={t}  delta={v}  [{prof.methods[t]}]" for t, v in sorted(prof.values.items())]
    lines.append(f"r_I={prof.r_index}  stable={prof.stable_value}  unmixed={prof.unmixed}")
    _emit(args, {"kind": "delta", **prof.as_dict()}, lines)
    return EXIT_OK


def cmd_ri(args) -> int:
    ideal = stanley_reisner_ideal(_load(args))
    r = r_index(ideal)
    payload = {"kind": "ri", "r_index": r, "stable_value": stable_value(ideal), "unmixed": is_unmixed(ideal)}
    _emit(args, payload, [f"r_I = {r}"])
    return EXIT_OK


def cmd_classify(args) -> int:
    cplx = _load(args)
    pure = is_pure(cplx)
    shelling = find_shelling(cplx) if pure else None
    payload = {
        "kind": "classify",
        "pure": pure,
        "shellable": (shelling is not None) if pure else None,
        "shelling": [list(s) for s in shelling] if shelling else None,
        "cohen_macaulay": {str(f): is_cohen_macaulay(cplx, f) for f in args.field},
        "gorenstein": {str(f): is_gorenstein(cplx, f) for f in args.field},
    }
    rows = [("pure", pure), ("shellable", payload["shellable"] if pure else "n/a")]
    if shelling:
        rows.append(("shelling", payload["shelling"]))
    rows += [(f"cohen_macaulay[{f}]", v) for f, v in payload["cohen_macaulay"].items()]
    rows += [(f"gorenstein[{f}]", v) for f, v in payload["gorenstein"].items()]
    _emit(args, payload, _table(rows))
    return EXIT_OK


def cmd_check(args) -> int:
    v = verify_bounds(_load(args), args.field)
    payload = {"kind": "check", **v.as_dict()}
    rows = [
        ("complex", v.complex_id),
        ("r_I", v.r_index),
        ("dim", v.dim),
        ("delta", v.delta),
    ]
    rows += [(f"reg[{f}]", x) for f, x in v.regularity.items()]
    rows += [("r_le_dim", v.r_le_dim), ("delta_nonincreasing", v.delta_nonincreasing)]
    rows += [(f"r_le_reg_if_shellable[{f}]", x) for f, x in v.r_le_reg_if_shellable.items()]
    rows += [(f"r_le_reg_if_gorenstein[{f}]", x) for f, x in v.r_le_reg_if_gorenstein.items()]
    rows.append(("conjecture_violator", v.conjecture_violator))
    _emit(args, payload, _table(rows))
    return EXIT_OK if v.all_hold else EXIT_BUG


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        n_values=args.n,
        mode=args.mode,
        samples=args.samples,
        seed=args.seed,
        fields=tuple(str(f) for f in args.field),
        out=args.out,
    )
    report = run_sweep(cfg)
    text = dumps(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.json and not args.out:
        sys.stdout.write(text)
    else:
        s = report["summary"]
        rows = [(k, s[k]) for k in sorted(s)]
        sys.stdout.write("\n".join(_table(rows)) + "\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    ideal = stanley_reisner_ideal(_load(args))
    oracle = oracle_delta_forms(ideal, args.t, args.q)
    mono = delta(ideal, args.t).value
    payload = {"kind": "oracle-compare", "t": args.t, "q": args.q, "oracle": oracle, "delta": mono,
               "agree": oracle == mono}
    _emit(args, payload, [f"t={args.t} q={args.q}: forms={oracle} monomials={mono}"
                          + ("" if oracle == mono else "  MISMATCH")])
    return EXIT_OK if oracle == mono else EXIT_BUG


def _field_list(text: str):
    return [as_field(f) for f in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_list, default=None,
                        help="coefficient field(s), comma separated: F2, F3, ..., Q (default F2)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--reindex", action="store_true",
                        help="accept complexes missing vertices by relabelling onto the spanned set")

    parser = argparse.ArgumentParser(prog="mindist", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, file=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if file:
            p.add_argument("file")
        p.set_defaults(func=fn)
        return p

    add("invariants", cmd_invariants, "dimension, degree, regularity and classification")
    p = add("delta", cmd_delta, "minimum distance profile")
    p.add_argument("--t-max", type=int, default=None)
    add("ri", cmd_ri, "regularity index r_I")
    add("classify", cmd_classify, "shellable / Cohen-Macaulay / Gorenstein")
    add("check", cmd_check, "verify the proved bounds on one complex")
    p = add("sweep", cmd_sweep, "verify bounds over a family of complexes", file=False)
    p.add_argument("--n", type=_parse_n, required=True, help="vertex counts, e.g. 4 or 2-5 or 6,7")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--samples", type=int, default=100, help="random complexes per vertex count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p = add("oracle-compare", cmd_oracle, "compare delta with brute force over all forms")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--q", type=int, choices=(2, 3), default=2)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.field is None:
        args.field = [as_field("F2")]
    try:
        return args.func(args)
    except (TheoremViolation, CrossValidationMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUG
    except (MindistError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
