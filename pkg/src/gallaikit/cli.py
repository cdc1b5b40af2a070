"""Batch command-line front end.

Exit codes: 0 success / property holds, 1 property fails (a witness is
printed), 2 input error, 3 search timeout.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import constructions as cons
from .gallai import (
    NotGallaiError,
    check_theorem4,
    decompose,
    find_inexact_triangle,
    find_rainbow_triangle,
    recompose,
)
from .homomorphism import classify_monochrome, monochromes, reduced_form, type_name
from .io import FormatError, dumps_cgr, dumps_gt, dumps_ug, read_cgr, read_gt, read_ug
from .search import Status, search_coloring
from .spectrum import check_spectrum_laws, spectrum

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def thread_cap() -> int:
    """Value of ``GALLAI_THREADS`` (default 1); all work currently runs on one thread."""
    raw = os.environ.get("GALLAI_THREADS", "1")
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"GALLAI_THREADS must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise InputError("GALLAI_THREADS must be a positive integer")
    return cap


def _fmt_triangle(t) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _emit(text: str, out: str | None, summary: str) -> None:
    if out:
        Path(out).write_text(text)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)


def _int(value: str) -> int:
    """Integers, also written as ``10^9`` or ``1e9``."""
    v = value.strip()
    try:
        if "^" in v:
            base, exp = v.split("^", 1)
            return int(base) ** int(exp)
        if "e" in v.lower():
            return int(float(v))
        return int(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None


def cmd_construct(args) -> int:
    kind, params = args.kind, args.params
    extra = []
    try:
        if kind == "named":
            if not params:
                raise InputError("named needs a graph name (P, C or A)")
            G = cons.named_graph(params[0], int(params[1]) if len(params) > 1 else None)
            _emit(dumps_ug(G), args.out, f"built n={G.n} m={len(G.edges)}")
            return EXIT_OK
        if kind == "host":
            if len(params) != 1:
                raise InputError("host needs one .ug file")
            K = cons.gallai_host(read_ug(params[0]))
        else:
            if len(params) != 1:
                raise InputError(f"{kind} needs exactly one integer parameter")
            p = int(params[0])
            if kind == "odd-gon":
                K = cons.odd_gon_no_squares(p)
                imap = cons.odd_gon_index_map(p)
                extra.append("index_map " + " ".join(f"{x}:{i}" for x, i in imap.items()))
            elif kind == "even-gon":
                K = cons.even_gon_no_preceding(p)
            elif kind == "simple":
                K = cons.simple_clique(p)
            elif kind == "extremal":
                K = cons.extremal_exact_gallai(p)
            else:
                raise InputError(f"unknown construction {kind!r}")
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(dumps_cgr(K), args.out, "\n".join([f"built n={K.n} k={K.k}"] + extra))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    K = read_cgr(args.file)
    S = spectrum(K)
    print(S)
    print(f"laws={'ok' if check_spectrum_laws(S) else 'violated'}")
    return EXIT_OK


def cmd_check(args) -> int:
    K = read_cgr(args.file)
    code = EXIT_OK
    bad = find_rainbow_triangle(K)
    if bad is not None:
        print(f"NOT-GALLAI witness={_fmt_triangle(bad)}")
        code = EXIT_FAIL
    elif args.exact:
        t = find_inexact_triangle(K)
        if t is None:
            print("GALLAI EXACT")
        else:
            print(f"GALLAI NOT-EXACT witness={_fmt_triangle(t)}")
            code = EXIT_FAIL
    else:
        print("GALLAI")
    if args.theorem4:
        rep = check_theorem4(K, subset_budget=args.subset_budget, seed=args.seed)
        parts = [
            f"disjoint={'pass' if rep.disjoint_ok else 'fail'}",
            f"subset={'pass' if rep.subset_ok else 'fail'}",
            f"exhaustive={'yes' if rep.exhaustive else 'no'}",
        ]
        if rep.disjoint_witness:
            b, c = rep.disjoint_witness
            parts.append(f"disjoint_witness=b{list(b)},c{list(c)}")
        if rep.subset_witness:
            parts.append(f"subset_witness={list(rep.subset_witness)}")
        print("theorem4 " + " ".join(parts).replace(" ]", "]").replace(", ", ","))
    return code


def cmd_decompose(args) -> int:
    K = read_cgr(args.file)
    try:
        T = decompose(K)
    except NotGallaiError as exc:
        print(f"NOT-GALLAI witness={_fmt_triangle(exc.witness)}")
        return EXIT_FAIL
    sizes = sorted((len(T.children[t]) for t in T.internal_nodes()), reverse=True)
    summary = f"tree nodes={len(T.parent)} leaves={T.n} height={T.height()} factors=[{','.join(map(str, sizes))}]"
    _emit(dumps_gt(T), args.out, summary)
    return EXIT_OK


def cmd_compose(args) -> int:
    T = read_gt(args.file)
    K = recompose(T)
    _emit(dumps_cgr(K), args.out, f"built n={K.n} k={K.k}")
    return EXIT_OK


def _read_connected(path):
    G = read_ug(path)
    if G.n == 0 or not G.is_connected():
        raise InputError("graph must be connected")
    return G


def cmd_classify(args) -> int:
    G = _read_connected(args.file)
    print(f"TYPE {type_name(G)}")
    res = classify_monochrome(G)
    print(res)
    return EXIT_OK if res.hom is not None else EXIT_FAIL


def cmd_reduce(args) -> int:
    G = read_ug(args.file)
    red = reduced_form(G)
    _emit(dumps_ug(red.graph), args.out, f"map {red.r}")
    return EXIT_OK


def cmd_monochromes(args) -> int:
    K = read_cgr(args.file)
    for m in monochromes(K):
        try:
            t = type_name(m.graph)
        except ValueError:
            t = "large"
        verts = ",".join(map(str, m.vertices))
        print(f"color={m.color} vertices=[{verts}] edges={len(m.graph.edges)} type={t}")
    return EXIT_OK


def cmd_search(args) -> int:
    forbid = set()
    for item in args.forbid or []:
        forbid.update(int(x) for x in item.split(",") if x)
    try:
        res = search_coloring(args.n, forbid, args.require, budget=args.budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(res)
    if res.status is Status.SAT:
        if args.out:
            Path(args.out).write_text(dumps_cgr(res.witness))
        else:
            sys.stdout.write(dumps_cgr(res.witness))
        return EXIT_OK
    return EXIT_FAIL if res.status is Status.UNSAT else EXIT_TIMEOUT


def cmd_verify(args) -> int:
    from .suites import SUITES, run_suite

    names = list(SUITES) if "all" in args.suites else args.suites
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise InputError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    code = EXIT_OK
    for name in names:
        kwargs = {"budget": args.budget} if name == "decagon" else {}
        res = run_suite(name, **kwargs)
        print(res.line(), flush=True)
        if not res.passed:
            code = EXIT_FAIL
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gallaikit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an explicit coloring or named graph")
    c.add_argument("kind", choices=["odd-gon", "even-gon", "simple", "extremal", "host", "named"])
    c.add_argument("params", nargs="*")
    c.add_argument("-o", "--out")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("spectrum", help="spectrum of a .cgr clique")
    c.add_argument("file")
    c.set_defaults(func=cmd_spectrum)

    c = sub.add_parser("check", help="Gallai / exact Gallai test")
    c.add_argument("file")
    c.add_argument("--exact", action="store_true")
    c.add_argument("--theorem4", action="store_true", help="also evaluate the subset inequalities")
    c.add_argument("--subset-budget", type=int, default=15)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("decompose", help="tree 2-clique decomposition to .gt")
    c.add_argument("file")
    c.add_argument("-o", "--out")
    c.set_defaults(func=cmd_decompose)

    c = sub.add_parser("compose", help="rebuild a .cgr from a .gt tree")
    c.add_argument("file")
    c.add_argument("-o", "--out")
    c.set_defaults(func=cmd_compose)

    c = sub.add_parser("classify", help="type and C5 duality certificate of a connected .ug")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("reduce", help="reduced form of a .ug")
    c.add_argument("file")
    c.add_argument("-o", "--out")
    c.set_defaults(func=cmd_reduce)

    c = sub.add_parser("monochromes", help="list monochromes of a .cgr")
    c.add_argument("file")
    c.set_defaults(func=cmd_monochromes)

    c = sub.add_parser("search", help="search colorings with prescribed colorful cycles")
    c.add_argument("n", type=int)
    c.add_argument("--forbid", action="append", help="forbidden length(s), repeatable or comma separated")
    c.add_argument("--require", type=int, required=True)
    c.add_argument("--budget", type=_int, default=10**7)
    c.add_argument("-o", "--out")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("verify", help="run named verification suites")
    c.add_argument("suites", nargs="+")
    c.add_argument("--budget", type=_int, default=10**7, help="node budget for the decagon search")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        thread_cap()
        return args.func(args)
    except (InputError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
