"""Command line driver: ``crossfree construct|verify|color|search|rcolor-demo``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .colorings import iterated_product_coloring
from .construct import construct_cross_free_sts
from .design import (
    DesignError,
    audit_lower_bound,
    color_components,
    lemma_gn_coloring,
    lower_bound,
    transversal_blocks,
    validate_sts,
)
from .search import BudgetExceeded, cross_free_search, enumerate_sts, exhaustive_f


def _emit(d: formats.DesignFile, out: str | None, fmt: str) -> None:
    text = formats.dumps(d, fmt)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _print_profile(ts, coloring, stream=None) -> bool:
    stream = stream or sys.stdout
    rep = color_components(ts, coloring)
    for col, sizes in enumerate(rep.profile()):
        print(f"color {col}: {len(sizes)} components, sizes {sizes}", file=stream)
    ok = audit_lower_bound(ts, coloring)
    bound = lower_bound(ts.n, coloring.r)
    print(f"largest component: {rep.largest}; bound ceil(n/(r-1)) = {bound}: "
          f"{'ok' if ok else 'FAILED'}", file=stream)
    return ok


def cmd_construct(args) -> int:
    c = construct_cross_free_sts(args.k)
    prov = {"k": str(args.k), "fallback": "yes" if c.fallback else "no"}
    _emit(formats.DesignFile(c.ts, c.partition, None, prov), args.out, args.format)
    print(f"STS({c.n}): {len(c.ts.blocks)} blocks, cross-free parts of size {c.partition.m}, "
          f"U factors from {'search' if c.fallback else 'explicit rows'}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    d = formats.read(args.input)
    if args.parts:
        d.partition = formats.read(args.parts).partition
    if args.coloring:
        d.coloring = formats.read(args.coloring).coloring
    ok = True
    rep = validate_sts(d.ts)
    print(f"STS({d.ts.n}): {'valid' if rep.ok else 'INVALID: ' + str(rep.violation)}, "
          f"{rep.n_blocks} blocks")
    ok &= rep.ok
    if d.partition is not None:
        bad = transversal_blocks(d.ts, d.partition)
        if bad:
            print(f"partition of size {d.partition.m}: NOT cross-free, "
                  f"{len(bad)} transversal blocks, first {bad[0]}")
            ok = False
        else:
            print(f"partition of size {d.partition.m}: cross-free")
    if d.coloring is not None:
        if len(d.coloring.colors) != len(d.ts.blocks):
            print("coloring does not match block list")
            ok = False
        else:
            ok &= _print_profile(d.ts, d.coloring)
    return 0 if ok else 1


def cmd_color(args) -> int:
    if args.rcolor is not None:
        cs = iterated_product_coloring(args.rcolor, args.t)
        ts, coloring = cs.ts, cs.coloring
        prov = {"q": str(args.rcolor), "t": str(args.t)}
        part = None
    else:
        if not args.input:
            raise DesignError("color needs --in (with a partition) or --rcolor")
        d = formats.read(args.input)
        part = formats.read(args.parts).partition if args.parts else d.partition
        if part is None:
            raise DesignError("input has no partition; pass --parts")
        ts, coloring, prov = d.ts, lemma_gn_coloring(d.ts, part), d.provenance
    _emit(formats.DesignFile(ts, part, coloring, prov), args.out, args.format)
    ok = _print_profile(ts, coloring, sys.stderr if not args.out else sys.stdout)
    return 0 if ok else 1


def cmd_rcolor_demo(args) -> int:
    cs = iterated_product_coloring(args.q, args.t)
    if args.profile:
        print(f"STS({cs.ts.n}) with r = {cs.coloring.r} colors")
        ok = _print_profile(cs.ts, cs.coloring) and cs.check()
    else:
        _emit(formats.DesignFile(cs.ts, None, cs.coloring, {"q": str(args.q), "t": str(args.t)}),
              args.out, args.format)
        ok = cs.check()
    return 0 if ok else 1


def cmd_search(args) -> int:
    if args.mode == "enumerate":
        systems = enumerate_sts(args.n)
        print(f"STS({args.n}): {len(systems)} isomorphism classes")
        for ts in systems:
            print(formats.dumps_plain(formats.DesignFile(ts)), end="")
        return 0
    if args.input:
        systems = [formats.read(args.input).ts]
    elif args.n:
        systems = enumerate_sts(args.n)
    else:
        raise DesignError("search needs --in or --n")
    if args.mode == "f":
        best = None
        for ts in systems:
            res = exhaustive_f(ts, r=args.r, budget=args.budget or 3 ** 16)
            if best is None or res.value < best[0].value:
                best = (res, ts)
        res, ts = best
        print(f"value: {res.value}")
        print(f"explored: {res.explored}")
        print("witness: " + " ".join(map(str, res.witness.colors)))
        if args.out:
            formats.write(formats.DesignFile(ts, None, res.witness), args.out, args.format)
        return 0
    # crossfree
    if args.m is None:
        raise DesignError("crossfree search needs --m")
    ts = systems[0]
    res = cross_free_search(ts, args.m, budget=args.budget or 10 ** 7)
    print(f"value: {'found' if res.value is not None else 'none'}")
    print(f"explored: {res.explored}")
    if res.witness is not None:
        for i, p in enumerate(res.witness.parts):
            print(f"X{i}: " + " ".join(map(str, sorted(p))))
        if args.out:
            formats.write(formats.DesignFile(ts, res.witness), args.out, args.format)
    return 0


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crossfree", description=__doc__)
    ap.add_argument("--threads", type=int, default=1,
                    help="parallelism hint; results do not depend on it")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def io_opts(p):
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("construct", help="build STS(18k+3) with a cross-free set of size 6k")
    p.add_argument("--k", type=_positive, required=True)
    io_opts(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check validity, cross-freeness and coloring profile")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--parts")
    p.add_argument("--coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("color", help="first-avoided-part 3-coloring or affine-plane r-coloring")
    p.add_argument("--in", dest="input")
    p.add_argument("--parts")
    p.add_argument("--rcolor", type=int, metavar="Q")
    p.add_argument("--t", type=int, default=0)
    io_opts(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("search", help="brute-force oracles")
    p.add_argument("mode", choices=["f", "crossfree", "enumerate"])
    p.add_argument("--n", type=int)
    p.add_argument("--in", dest="input")
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--budget", type=int)
    io_opts(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("rcolor-demo", help="colored STS(3^t q^2) with q+1 colors")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--profile", action="store_true", help="print the component census")
    io_opts(p)
    p.set_defaults(func=cmd_rcolor_demo)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except formats.FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (DesignError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
