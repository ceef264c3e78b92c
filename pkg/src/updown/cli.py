"""``updown`` command-line front end.

Sources are either a JSON instance file or ``builtin:NAME[:PARAM]``, e.g.
``builtin:necklaces:3``.  Exit codes: 0 success, 1 validation or identity
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import TextIO

from .catalog import EXPECTED_FLAGS, FAMILIES, builtin
from .constructions import dn_quotient, product, universal_cover, up_quotient, wrp_export
from .core import ZERO, UpdownTable, classify, ext_row, truncate, validate
from .errors import UnknownFamily, UpdownError
from .jsonio import export_json, import_json
from .series import morphism_gf, object_gf, reference_gf

DEFAULT_BUDGET = 10**7

# static sequence ids, for the reader's convenience only
OEIS = {
    "subsets": "A007318",
    "monomials": "A000244",
    "graphs": "A006125",
    "necklaces": "A000031",
    "partitions-unit": "A000041",
    "partitions-kingman": "A000262",
    "compositions": "A011782",
    "planar-trees": "A000108",
    "rooted-trees": "A000169",
    "binary-trees": "A001190",
}


class UsageError(Exception):
    pass


def fmt_q(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _yes(flag: bool | None) -> str:
    return "unknown" if flag is None else ("yes" if flag else "no")


@dataclass(frozen=True)
class Source:
    table: UpdownTable
    family: str | None = None
    params: tuple[int, ...] = ()


def _parse_builtin(text: str) -> tuple[str, tuple[int, ...]]:
    name, _, rest = text.partition(":")
    if name not in FAMILIES:
        raise UsageError(f"unknown builtin {name!r}; choose from {', '.join(FAMILIES)}")
    try:
        params = tuple(int(x) for x in rest.replace(",", ":").split(":") if x)
    except ValueError:
        raise UsageError(f"builtin parameters must be integers: {rest!r}") from None
    return name, params


def load_source(source: str, max_rank: int | None = None, need_rank: int = 0) -> Source:
    """Resolve a ``source`` argument; a builtin is generated at least to ``need_rank`` unless ``max_rank`` is given."""
    if source.startswith("builtin:"):
        family, params = _parse_builtin(source[len("builtin:") :])
        default = FAMILIES[family][0]
        rank = max_rank if max_rank is not None else max(default, need_rank)
        return Source(builtin(family, *params, max_rank=rank), family, params)
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"no such file: {source}")
    table = import_json(path.read_text(encoding="utf-8"))
    if max_rank is not None:
        table = truncate(table, max_rank)
    return Source(table)


def _write(text: str, dest: str, out: TextIO) -> None:
    if dest == "-":
        out.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


# -- subcommands ------------------------------------------------------------------------


def cmd_validate(args, out: TextIO) -> int:
    table = load_source(args.source, args.max_rank).table
    report = validate(table)
    sizes = ",".join(str(table.rank_size(n)) for n in range(table.max_rank + 1))
    out.write(f"{table.name}: ranks 0..{table.max_rank}, sizes {sizes}, {len(table.edges)} covering edges\n")
    for v in report.violations:
        out.write(f"  [{v.tag}] {v.where}: {v.message}\n")
    out.write("valid\n" if report.ok else f"invalid: {len(report.violations)} violation(s)\n")
    return 0 if report.ok else 1


def cmd_genfunc(args, out: TextIO) -> int:
    n = args.n
    need = n if args.kind == "object" else (n - 1) // 2 + 1
    src = load_source(args.source, args.max_rank, need_rank=need)
    series = object_gf(src.table, n) if args.kind == "object" else morphism_gf(src.table, n)

    check = None
    if args.check_closed_form:
        if src.family is None:
            raise UsageError("--check-closed-form needs a builtin source")
        obj, mor = reference_gf(src.family, src.params, n)
        ref = obj if args.kind == "object" else mor
        bad = next((k for k in range(n + 1) if series[k] != ref[k]), None)
        check = {"pass": bad is None, "first_mismatch": bad}
        if bad is not None:
            check.update(computed=fmt_q(series[bad]), expected=fmt_q(ref[bad]))

    if args.format == "json":
        doc = {
            "name": src.table.name,
            "kind": args.kind,
            "order": n,
            "coefficients": [fmt_q(c) for c in series],
        }
        if check is not None:
            doc["closed_form"] = check
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write("power,coefficient\n")
        for k, c in enumerate(series):
            out.write(f"{k},{fmt_q(c)}\n")
        if check is not None:
            if check["pass"]:
                out.write(f"# closed form: pass through t^{n}\n")
            else:
                k = check["first_mismatch"]
                out.write(f"# closed form: mismatch at t^{k}: {check['computed']} != {check['expected']}\n")
    return 0 if check is None or check["pass"] else 1


def _budget(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("UPDOWN_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"UPDOWN_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def cmd_cover(args, out: TextIO) -> int:
    table = load_source(args.source, args.max_rank, need_rank=args.n).table
    if args.quotient == "up":
        table = up_quotient(table)
    elif args.quotient == "dn":
        table = dn_quotient(table)
    cov = universal_cover(table, args.n, budget=_budget(args.budget))
    out.write(f"universal cover of {table.name} through rank {args.n}\n")
    out.write("level sizes: " + ",".join(map(str, cov.level_sizes())) + "\n")
    if not args.fibers:
        return 0
    fibers = cov.fibers()
    ok = True
    out.write("rank,index,label,fiber,u_ext\n")
    expected = ext_row(table, ZERO, upto=args.n)
    for p in table.objects():
        if p.rank > args.n:
            break
        u = expected.get(p, (0, 0))[0]
        ok &= fibers[p] == u
        out.write(f"{p.rank},{p.index},{table.label(p)},{fibers[p]},{u}\n")
    out.write("fibers match u_ext: " + ("yes" if ok else "no") + "\n")
    return 0 if ok else 1


def _sequence(values, verdicts, first: int = 0) -> str:
    """Constant sums per rank; ``*`` where the sum varies, ``?`` where the table cannot tell."""
    out = []
    for r, (v, ok) in enumerate(zip(values, verdicts)):
        if r < first:
            continue
        out.append("?" if ok is None else ("*" if ok is False else str(v)))
    return ",".join(out)


def _classify_lines(table: UpdownTable) -> list[str]:
    f = classify(table)
    return [
        f"univalent: {_yes(f.univalent)}",
        f"unital: {_yes(f.unital)}",
        f"simple: {_yes(f.simple)}",
        f"evenly up-covered: {_yes(f.evenly_up)} (u_0.. = {_sequence(f.up_sequence, f.up_by_rank)})",
        f"evenly down-covered: {_yes(f.evenly_down)} (d_1.. = {_sequence(f.down_sequence, f.down_by_rank, 1)})",
        f"factorial: {_yes(f.factorial)}",
    ]


def cmd_classify(args, out: TextIO) -> int:
    table = load_source(args.source, args.max_rank).table
    out.write(f"{table.name}\n")
    for line in _classify_lines(table):
        out.write(f"  {line}\n")
    return 0


def cmd_table(args, out: TextIO) -> int:
    out.write("family              U    UC   F    O(t)                            M(t) odd terms\n")
    ok = True
    for family, (_, cap, _) in FAMILIES.items():
        rank = min(args.n, cap)
        table = builtin(family, max_rank=rank)
        f = classify(table)
        flags = (f.univalent, f.evenly_up, f.factorial)
        match = flags == EXPECTED_FLAGS[family]
        ok &= match
        shown = min(rank, 5)
        o = ", ".join(fmt_q(c) for c in object_gf(table, shown))
        m_order = 2 * min(rank - 1, 2) + 1
        m = ", ".join(fmt_q(c) for c in morphism_gf(table, m_order)[1::2])
        mark = "" if match else "  <- differs"
        row = f"{family:<19} {_yes(flags[0]):<4} {_yes(flags[1]):<4} {_yes(flags[2]):<4} {o:<31} {m}"
        out.write(f"{row}  # {OEIS[family]}{mark}\n")
    out.write(f"flags {'match' if ok else 'DO NOT match'} the expected summary (rank {args.n})\n")
    return 0 if ok else 1


def cmd_product(args, out: TextIO) -> int:
    a = load_source(args.source1, args.max_rank).table
    b = load_source(args.source2, args.max_rank).table
    _write(export_json(product(a, b)), args.output, out)
    return 0


def cmd_quotient(args, out: TextIO) -> int:
    table = load_source(args.source, args.max_rank).table
    q = up_quotient(table) if args.dir == "up" else dn_quotient(table)
    _write(export_json(q), args.output, out)
    return 0


def cmd_wrp(args, out: TextIO) -> int:
    table = load_source(args.source, args.max_rank).table
    doc = wrp_export(table).to_dict(full_order=args.full_order)
    lines = ["{", f'  "name": {json.dumps(doc["name"])},']
    keys = [k for k in ("objects", "covers", "order") if k in doc]
    for i, key in enumerate(keys):
        lines.append(f'  "{key}": [')
        if doc[key]:
            lines.append(",\n".join(f"    {json.dumps(x)}" for x in doc[key]))
        lines.append("  ]" + ("," if i < len(keys) - 1 else ""))
    _write("\n".join(lines) + "\n}\n", args.output, out)
    return 0


# -- argument parsing ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="updown", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_source(p, name="source"):
        p.add_argument(name, help="JSON instance file or builtin:NAME[:PARAM]")
        return p

    def with_rank(p):
        p.add_argument("--max-rank", type=int, default=None, help="truncate (or generate) to this rank")
        return p

    p = with_rank(with_source(sub.add_parser("validate", help="check the axioms of a table")))
    p.set_defaults(func=cmd_validate)

    p = with_rank(with_source(sub.add_parser("genfunc", help="object or morphism generating function")))
    p.add_argument("-n", type=int, required=True, help="highest power of t")
    p.add_argument("--kind", choices=("object", "morphism"), default="object")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--check-closed-form", action="store_true", help="compare with the builtin's closed form")
    p.set_defaults(func=cmd_genfunc)

    p = with_rank(with_source(sub.add_parser("cover", help="universal cover level sizes")))
    p.add_argument("-n", type=int, required=True, help="cover depth")
    p.add_argument("--fibers", action="store_true", help="list fiber sizes and check them against u_ext")
    p.add_argument("--budget", type=int, default=None, help=f"object budget (default $UPDOWN_BUDGET or {DEFAULT_BUDGET})")
    p.add_argument("--quotient", choices=("up", "dn"), default=None, help="cover this quotient instead")
    p.set_defaults(func=cmd_cover)

    p = with_rank(with_source(sub.add_parser("classify", help="univalent / simple / evenly covered / factorial")))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="flags and leading coefficients of every builtin")
    p.add_argument("-n", type=int, default=8, help="rank, capped by each family's budget")
    p.set_defaults(func=cmd_table)

    p = with_rank(sub.add_parser("product", help="product of two tables, as JSON"))
    with_source(p, "source1")
    with_source(p, "source2")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_product)

    p = with_rank(with_source(sub.add_parser("quotient", help="univalent quotient, as JSON")))
    p.add_argument("--dir", choices=("up", "dn"), required=True)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_quotient)

    p = with_rank(with_source(sub.add_parser("wrp", help="weighted-relation poset of a univalent table")))
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--full-order", action="store_true", help="include every comparable pair, not just covers")
    p.set_defaults(func=cmd_wrp)
    return parser


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("n", "max_rank", "budget"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            err.write(f"updown: -{name.replace('_', '-')} must be non-negative\n")
            return 2
    try:
        return args.func(args, out)
    except (UsageError, UnknownFamily) as exc:
        err.write(f"updown: {exc}\n")
        return 2
    except UpdownError as exc:
        err.write(f"updown: {type(exc).__name__}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
