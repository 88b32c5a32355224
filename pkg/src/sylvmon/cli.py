"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Every error is reported on stderr as one line ``error: <kind>: <reason>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import fqsym, graphs, pbt, sylvester, trees, verify, words
from .render import graded_graph_dot, hasse_dot, render_ascii, tree_dot
from .trees import Tree, enumerate_shapes, serialize_tree

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        raise UsageError(message)


# argument decoding


def _is_tree_text(text: str) -> bool:
    return text.strip()[:1] in ("(", ".")


def _word(text: str) -> tuple[tuple[int, ...], bool]:
    """Parse a word; the flag says whether it was written with letters."""
    return words.parse_word(text), words.is_letter_text(text)


def _perm(text: str) -> tuple[int, ...]:
    return words.parse_permutation(text)


def _shape(text: str) -> Tree:
    t = trees.parse_tree(text)
    return trees.shape(t)


def _fmt_word(w, letters: bool) -> str:
    if letters:
        return words.format_word(w)
    if words.is_permutation(w):
        return words.format_permutation(w)
    return ",".join(map(str, w)) or "ε"


def _has_letters(text: str) -> bool:
    return any("a" <= c <= "z" for c in text)


# output


def _emit(args, text: str, data=None, dot: Optional[str] = None) -> None:
    fmt = args.format
    if getattr(args, "dot", False):
        fmt = "dot"
    if fmt == "json":
        print(json.dumps(data, sort_keys=True))
    elif fmt == "dot":
        if dot is None:
            raise UsageError(f"no DOT rendering for {args.command}")
        print(dot)
    else:
        print(text)


# commands


def cmd_symbol(args) -> int:
    w, letters = _word(args.word)
    t = trees.p_symbol(w) if args.command == "p-symbol" else trees.q_symbol(w)
    use_letters = letters and args.command == "p-symbol"
    text = render_ascii(t, use_letters) if args.ascii else serialize_tree(t, use_letters)
    _emit(args, text, trees.tree_to_json(t), tree_dot(t, use_letters))
    return EXIT_OK


def cmd_std(args) -> int:
    w, _ = _word(args.word)
    s = words.standardize(w)
    inv = words.inverse(s)
    text = words.format_permutation(inv if args.inverse else s)
    _emit(args, text, {"word": list(w), "std": list(s), "inverse": list(inv)})
    return EXIT_OK


def cmd_canonical(args) -> int:
    if _is_tree_text(args.x):
        t = trees.parse_tree(args.x)
        if t is not None and t.label is not None:
            if not trees.is_bst(t):
                raise ValueError("labeled tree is not a binary search tree")
            w, letters = trees.postfix_reading(t), _has_letters(args.x)
        else:
            w, letters = trees.canonical_perm(t), False
    else:
        v, letters = _word(args.x)
        w = sylvester.canonical_word(v)
    _emit(args, _fmt_word(w, letters), list(w))
    return EXIT_OK


def cmd_equiv(args) -> int:
    u, _ = _word(args.u)
    v, _ = _word(args.v)
    result = sylvester.sylvester_equivalent(u, v)
    _emit(args, "true" if result else "false", result)
    return EXIT_OK


def cmd_class(args) -> int:
    if _is_tree_text(args.x):
        seed = trees.parse_tree(args.x)
        letters = _has_letters(args.x)
    else:
        seed, letters = _word(args.x)
    cls = sorted(sylvester.sylvester_class(seed, args.method))
    _emit(args, "\n".join(_fmt_word(w, letters) for w in cls), [list(w) for w in cls])
    return EXIT_OK


def cmd_product(args) -> int:
    b = args.basis
    if b in ("F", "G"):
        x, y = _perm(args.x), _perm(args.y)
        result = fqsym.f_product(x, y) if b == "F" else fqsym.g_product(x, y)
    elif b == "P":
        result = pbt.p_product(_shape(args.x), _shape(args.y))
    else:
        result = pbt.q_dual_product(_shape(args.x), _shape(args.y), args.alphabet)
    _emit(args, str(result), result.to_json())
    return EXIT_OK


def cmd_coproduct(args) -> int:
    if args.basis == "F":
        result = fqsym.f_coproduct(_perm(args.x))
    else:
        result = pbt.p_coproduct(_shape(args.x))
    _emit(args, str(result), result.to_json())
    return EXIT_OK


def cmd_hook(args) -> int:
    t = _shape(args.tree)
    poly = sylvester.q_hook_formula(t)
    size = sylvester.class_size(t)
    stats = trees.node_stats(t)
    data = {
        "tree": serialize_tree(t),
        "class_size": size,
        "q_hook": poly.to_json(),
        "h": list(stats.h),
        "delta": list(stats.delta),
    }
    _emit(args, str(poly) if args.q else str(size), data)
    return EXIT_OK


def cmd_specialize(args) -> int:
    shapes = [_shape(t) for t in args.trees] if args.trees else list(enumerate_shapes(args.degree))
    rows = []
    for t in shapes:
        if trees.size(t) != args.degree:
            raise ValueError(f"{serialize_tree(t)} does not have {args.degree} nodes")
        spec = fqsym.principal_specialization(pbt.p_to_f(t), args.cutoff)
        rows.append((t, spec))
    text = "\n".join(f"{serialize_tree(t)}\t{p}" for t, p in rows)
    _emit(args, text, [{"tree": serialize_tree(t), "specialization": p.to_json()} for t, p in rows])
    return EXIT_OK


def cmd_order(args) -> int:
    shapes = enumerate_shapes(args.n)
    covers = pbt.tree_order_covers(args.n)
    text = "\n".join(f"{serialize_tree(a)} < {serialize_tree(b)}" for a, b in covers)
    data = {
        "vertices": [serialize_tree(t) for t in shapes],
        "covers": [[serialize_tree(a), serialize_tree(b)] for a, b in covers],
    }
    _emit(args, text, data, hasse_dot(covers, shapes, "tree_order"))
    return EXIT_OK


def cmd_graphs(args) -> int:
    g = graphs.build_gamma(args.n)
    gs = graphs.build_gamma_star(args.n)
    result = graphs.fomin_duality_check(args.n - 1, g, gs) if args.n >= 2 else None
    lines = []
    for graph in (g, gs):
        lines.append(f"{graph.name}:")
        for a, b in sorted(graph.edges, key=lambda e: (trees.size(e[0]), serialize_tree(e[0]), serialize_tree(e[1]))):
            lines.append(f"  {serialize_tree(a)} -> {serialize_tree(b)}")
    counts = graphs.path_counts(args.n, g, gs)
    lines.append(f"path counts at level {args.n} (f, f*):")
    for t, (f, fs) in counts.items():
        lines.append(f"  {serialize_tree(t)}\t{f}\t{fs}")
    if result is not None:
        lines.append(f"DU-UD=Id on levels <= {args.n - 1}: {result.ok} (orientation {result.orientation})")
    data = {
        "gamma": g.to_json(),
        "gamma_star": gs.to_json(),
        "orientation": result.orientation if result else None,
        "duality": result.ok if result else None,
        "path_counts": {serialize_tree(t): list(v) for t, v in counts.items()},
    }
    _emit(args, "\n".join(lines), data, graded_graph_dot(g) + "\n" + graded_graph_dot(gs))
    return EXIT_OK if result is None or result.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    results = [verify.run_suite(name, args.max_n) for name in names]
    text = "\n".join(r.line() for r in results)
    _emit(args, text, [r.to_json() for r in results])
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sylvmon", description="Sylvester monoid and binary-tree Hopf algebra toolkit.")
    parser.add_argument("--format", choices=("text", "json", "dot"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("p-symbol", "q-symbol"):
        p = sub.add_parser(name, help=f"{name[0].upper()}-symbol of a word")
        p.add_argument("word")
        p.add_argument("--ascii", action="store_true", help="draw the tree")
        p.set_defaults(func=cmd_symbol)

    p = sub.add_parser("std", help="standardization of a word")
    p.add_argument("word")
    p.add_argument("--inverse", action="store_true", help="print the inverse permutation")
    p.set_defaults(func=cmd_std)

    p = sub.add_parser("canonical", help="tree-word of a word's class, or of a tree")
    p.add_argument("x")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("equiv", help="are two words sylvester-congruent")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("class", help="sylvester class of a tree or word")
    p.add_argument("x")
    p.add_argument("--method", choices=("rewriting", "oracle"), default="rewriting")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("product", help="product of two basis elements")
    p.add_argument("--basis", choices=("P", "Q", "F", "G"), required=True)
    p.add_argument("--alphabet", type=int, default=None, help="alphabet size for the Q product")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("coproduct", help="coproduct of a basis element")
    p.add_argument("--basis", choices=("P", "F"), required=True)
    p.add_argument("x")
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("hook", help="class size / q-hook-length formula of a shape")
    p.add_argument("tree")
    p.add_argument("--q", action="store_true", help="print the q-analogue")
    p.set_defaults(func=cmd_hook)

    p = sub.add_parser("specialize", help="(q)_n P_T(1,q,q^2,...) for shapes of one degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("trees", nargs="*")
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("order", help="tree order (Hasse diagram) on shapes of size N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("graphs", help="dual graded graphs up to level N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_graphs)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all",) + tuple(verify.SUITES), default="all")
    p.add_argument("--max-n", type=int, default=None, help="override the default size bound")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except trees.TreeParseError as exc:
        print(f"error: parse: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError) as exc:
        print(f"error: input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, AssertionError) as exc:
        print(f"error: verification: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
