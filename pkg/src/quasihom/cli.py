"""Command-line entry point: ``count``, ``profile``, ``verify`` and ``poly``.

Exit codes: 0 success, 1 verification failure, 2 usage or range error,
3 output file not writable.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time

from . import closed_form as cf
from .bruteforce import count_by_class
from .errata import errata_csv
from .graphs import MIN_SIZE, Family, FamilySpec, HomClass, make_family, quasi_complete_graph
from .poly import eval_poly, gap_polynomial, render
from .transfer import cyclic_hom_count, hub_conditioned_count, linear_hom_count

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

PROFILE_COLUMNS = ("family", "n", "m", "class", "method", "count")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _transfer_count(spec: FamilySpec, m: int) -> int:
    h = quasi_complete_graph(m)
    if spec.family is Family.PATH:
        return linear_hom_count(h, spec.n)
    if spec.family is Family.CYCLE:
        return cyclic_hom_count(h, spec.n)
    if spec.family is Family.BROKEN_WHEEL:
        return hub_conditioned_count(h, spec.n, "path")
    if spec.family is Family.WHEEL:
        return hub_conditioned_count(h, spec.n, "cycle")
    raise UsageError(f"method unsupported for family {spec.family.value}")


def compute(spec: FamilySpec, m: int, cls: HomClass, method: str) -> int:
    if m < 3:
        raise UsageError(f"target size m must be >= 3, got {m}")
    if method == "closed":
        return cf.count(spec, m, cls)
    if method == "bruteforce":
        return count_by_class(make_family(spec), quasi_complete_graph(m), cls)
    if spec.family in (Family.COMPLETE, Family.QUASI_COMPLETE):
        raise UsageError(f"method unsupported for family {spec.family.value}")
    if cls is not HomClass.ALL:
        raise UsageError(f"method unsupported for class {cls.value}")
    return _transfer_count(spec, m)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


# ---------------------------------------------------------------------------
# subcommands

def cmd_count(args) -> int:
    spec = FamilySpec(args.family, args.n)
    cls = HomClass.parse(args.hom_class)
    value = compute(spec, args.m, cls, args.method)
    if args.format == "json":
        record = {"family": spec.family.value, "n": spec.n, "m": args.m,
                  "class": args.hom_class, "method": args.method, "count": str(value)}
        print(json.dumps(record))
    else:
        print(value)
    return EXIT_OK


def profile_rows(m: int, families: list[Family], n_max: int) -> list[tuple]:
    specs = [FamilySpec(f, n) for f in families for n in range(MIN_SIZE[f], n_max + 1)]
    table = cf.partial_profile(m, specs)
    return [(r.spec.family.value, r.spec.n, m, r.hom_class.value, "closed", str(r.count))
            for r in table]


def cmd_profile(args) -> int:
    families = sorted({Family.parse(f) for f in args.families.split(",") if f.strip()},
                      key=lambda f: f.value)
    if not families:
        raise UsageError("--families must name at least one family")
    if args.m < 3:
        raise UsageError(f"target size m must be >= 3, got {args.m}")
    rows = profile_rows(args.m, families, args.n_max)
    if args.format == "json":
        text = json.dumps([dict(zip(PROFILE_COLUMNS, r)) for r in rows], indent=1) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(PROFILE_COLUMNS)
        w.writerows(rows)
        text = buf.getvalue()
    _write(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import Grid, run_all

    grid = Grid(n_max=args.n_max, m_max=args.m_max, transfer_n_max=args.transfer_n_max)
    if grid.n_max < 3 or grid.m_max < 3 or grid.transfer_n_max < 4:
        raise UsageError("--n-max and --m-max must be >= 3, --transfer-n-max >= 4")
    t0 = time.perf_counter()
    results, rows = run_all(grid)
    _write(errata_csv(rows), args.errata)
    for res in results:
        print(res.summary())
        for note in res.notes:
            print(f"     {note}")
    failed = [r for r in results if not r.ok]
    print(f"errata CSV written to {args.errata}")
    print(f"{len(results) - len(failed)}/{len(results)} properties ok "
          f"in {time.perf_counter() - t0:.1f}s")
    if failed:
        print(f"first failing tuple: {failed[0].failure}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_poly(args) -> int:
    if args.i < 0:
        raise UsageError(f"--i must be >= 0, got {args.i}")
    poly = gap_polynomial(args.kind, args.i)
    print(render(poly))
    if args.eval is not None:
        print(eval_poly(poly, args.eval))
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quasihom",
                description="Homomorphism counts into the complete graph minus one edge.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="one count")
    c.add_argument("--family", required=True, choices=[f.value for f in Family])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--class", dest="hom_class", default="hom", choices=["hom", "inj", "sur", "bij"])
    c.add_argument("--method", default="closed", choices=["closed", "bruteforce", "transfer"])
    c.add_argument("--format", default="text", choices=["text", "json"])
    c.set_defaults(func=cmd_count)

    pr = sub.add_parser("profile", help="closed-form counts for several families")
    pr.add_argument("--m", type=int, required=True)
    pr.add_argument("--families", required=True, help="comma-separated family names")
    pr.add_argument("--n-max", type=int, required=True)
    pr.add_argument("--format", default="csv", choices=["csv", "json"])
    pr.add_argument("--out", default=None)
    pr.set_defaults(func=cmd_profile)

    v = sub.add_parser("verify", help="check closed forms against the oracles")
    v.add_argument("--n-max", type=int, default=7)
    v.add_argument("--m-max", type=int, default=6)
    v.add_argument("--transfer-n-max", type=int, default=18)
    v.add_argument("--errata", default="errata.csv")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("poly", help="show a gap polynomial")
    g.add_argument("--kind", required=True, choices=["p", "q"])
    g.add_argument("--i", type=int, required=True)
    g.add_argument("--eval", type=int, default=None, metavar="M")
    g.set_defaults(func=cmd_poly)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
