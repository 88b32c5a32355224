"""Exhaustive verification suites.

Each suite checks one family of identities up to a size bound and returns a
:class:`SuiteResult`; the first failure stops the suite and is reported as a
counterexample.  All suites are deterministic.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from math import comb, factorial, prod
from typing import Callable, Optional

from . import fqsym, graphs, pbt, sylvester, trees, words
from .fqsym import F, FQSymElement
from .trees import catalan, enumerate_shapes, serialize_tree

WORKED_WORD = "bacaabca"
WORKED_STD = "51723684"
WORKED_INVERSE = "24581637"
WORKED_P = "((((. a .) a .) a .) a (((. b .) b (. c .)) c .))"
WORKED_Q = "((((. 2 .) 4 .) 5 .) 8 (((. 1 .) 6 (. 3 .)) 7 .))"


class Failure(Exception):
    pass


@dataclass
class SuiteResult:
    name: str
    ok: bool
    max_n: int
    checked: int = 0
    seconds: float = 0.0
    counterexample: Optional[str] = None
    notes: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name} max_n={self.max_n} checked={self.checked} time={self.seconds:.2f}s"
        if self.counterexample:
            text += f" counterexample: {self.counterexample}"
        return text

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class VerifyConfig:
    """Default size bounds, one per suite."""

    worked: int = 8
    congruence: int = 7
    canonical: int = 8
    census: int = 9
    product: int = 7
    realization: int = 5
    realization_alphabet: int = 5
    hook: int = 8
    specialization: int = 4
    duality: int = 6
    projection: int = 5
    cauchy: int = 4
    cauchy_alphabet: int = 4
    intervals: int = 7
    graphs: int = 7
    paths: int = 8


class _Counter:
    def __init__(self) -> None:
        self.n = 0

    def check(self, condition: bool, message: Callable[[], str] | str) -> None:
        self.n += 1
        if not condition:
            raise Failure(message() if callable(message) else message)


def _shape(t) -> str:
    return serialize_tree(t)


def _word(w) -> str:
    return words.format_word(w)


def _perm(p) -> str:
    return words.format_permutation(p)


def check_worked(c: _Counter, max_n: int) -> dict:
    w = words.parse_word(WORKED_WORD)
    s = words.standardize(w)
    c.check(_perm(s) == WORKED_STD, lambda: f"std {_perm(s)}")
    c.check(_perm(words.inverse(s)) == WORKED_INVERSE, lambda: f"inverse {_perm(words.inverse(s))}")
    p = trees.serialize_tree(trees.p_symbol(w), letters=True)
    q = trees.serialize_tree(trees.q_symbol(w))
    c.check(p == WORKED_P, f"P symbol {p}")
    c.check(q == WORKED_Q, f"Q symbol {q}")
    c.check(trees.relabel(trees.q_symbol(w), w) == trees.p_symbol(w), "relabel(Q, w) != P")
    return {"std": _perm(s), "P": p, "Q": q}


def check_congruence(c: _Counter, max_n: int) -> dict:
    """Move-closure partition equals the P-symbol partition."""
    for n in range(max_n + 1):
        perms = list(words.all_permutations(n))
        by_moves = sylvester.move_partition(perms)
        by_p = sylvester.classes_partition(perms, trees.p_postfix)
        c.check(by_moves == by_p, lambda: f"S_{n}: move classes differ from P-symbol classes")
        ws = list(words.all_words(n, 3))
        by_moves = sylvester.move_partition(ws)
        by_p = sylvester.classes_partition(ws, trees.p_postfix)
        c.check(by_moves == by_p, lambda: f"words of length {n} over 3 letters: partitions differ")
    return {}


def check_canonical(c: _Counter, max_n: int) -> dict:
    for n in range(max_n + 1):
        for t in enumerate_shapes(n):
            w = trees.canonical_perm(t)
            c.check(trees.p_shape(w) == t, lambda: f"P(w_T) != T for {_shape(t)}")
            cls = set(sylvester.permutation_class(t))
            rewritten = sylvester.move_closure(w, oriented=True)
            c.check(rewritten == cls, lambda: f"rewriting from {_perm(w)} misses part of the class of {_shape(t)}")
            c.check(min(cls) == w, lambda: f"{_perm(w)} is not the lexicographic minimum for {_shape(t)}")
    return {}


def check_census(c: _Counter, max_n: int) -> dict:
    counts = []
    for n in range(max_n + 1):
        classes = sylvester.permutation_classes(n)
        counts.append(len(classes))
        c.check(len(classes) == catalan(n), lambda: f"S_{n} has {len(classes)} classes, expected {catalan(n)}")
        c.check(sum(map(len, classes.values())) == factorial(n), f"class sizes of S_{n} do not sum to {n}!")
    return {"class_counts": counts}


def _shape_pairs(total_max: int):
    for n in range(total_max + 1):
        for k in range(n + 1):
            for a in enumerate_shapes(k):
                for b in enumerate_shapes(n - k):
                    yield a, b


def check_product(c: _Counter, max_n: int) -> dict:
    for a, b in _shape_pairs(max_n):
        sh = pbt.p_product(a, b)
        c.check(sh == pbt.p_product_via_fqsym(a, b), lambda: f"P[{_shape(a)}] P[{_shape(b)}]: shuffle rule != FQSym product")
        c.check(all(v == 1 for _, v in sh.items()), "Sh is not multiplicity-free")
        shuffled = words.shifted_shuffle(trees.canonical_perm(a), trees.canonical_perm(b))
        n1, n2 = trees.size(a), trees.size(b)
        c.check(sum(shuffled.values()) == comb(n1 + n2, n1) and set(shuffled.values()) <= {1}, "shuffle size")
        # grouping the shuffle by sylvester class gives one block per T in Sh,
        # each block holding the tree-word of T
        blocks: dict = {}
        for nu in shuffled:
            blocks.setdefault(trees.p_shape(nu), set()).add(nu)
        c.check(
            set(blocks) == set(sh) and all(trees.canonical_perm(t) in blocks[t] for t in blocks),
            lambda: f"shuffle of w_{_shape(a)} and w_{_shape(b)} does not split into the classes of Sh",
        )
    return {}


def check_realization(c: _Counter, max_n: int, m: int = 5) -> dict:
    for total in range(max_n + 1):
        for k in range(total + 1):
            for s in words.all_permutations(k):
                for t in words.all_permutations(total - k):
                    lhs = fqsym.expand_polynomial(fqsym.f_product(s, t), m)
                    rhs = fqsym.expand_polynomial(F(s), m) * fqsym.expand_polynomial(F(t), m)
                    c.check(lhs == rhs, lambda: f"F[{_perm(s)}] F[{_perm(t)}] over {m} letters")
    return {"alphabet": m}


def check_hook(c: _Counter, max_n: int) -> dict:
    for n in range(max_n + 1):
        for t in enumerate_shapes(n):
            formula = sylvester.q_hook_formula(t)
            brute = sylvester.class_maj_gf(t)
            c.check(formula == brute, lambda: f"{_shape(t)}: hook formula {formula} != {brute}")
            stats = trees.node_stats(t)
            c.check(formula(1) == factorial(n) // prod(stats.h) == sylvester.class_size(t), f"{_shape(t)} at q=1")
    return {"convention": "q^(sum delta) [n]_q! / prod [h]_q"}


def check_specialization(c: _Counter, max_n: int) -> dict:
    for n in range(max_n + 1):
        for t in enumerate_shapes(n):
            spec = fqsym.principal_specialization(pbt.p_to_f(t))
            brute = sylvester.class_maj_gf(t)
            c.check(spec == brute, lambda: f"{_shape(t)}: (q)_n P_T(1,q,...) = {spec}, expected {brute}")
    return {}


def check_duality(c: _Counter, max_n: int, projection_max: int = 5) -> dict:
    for n in range(max_n + 1):
        c.check(pbt.duality_check(n), lambda: f"<P_S, G_(w_T)> != delta at n={n}")
    for n in range(1, min(max_n, projection_max) + 1):
        for sigma in words.all_permutations(n):
            t = trees.p_shape(sigma)
            img = pbt.pi_project(FQSymElement("G", {sigma: 1}), n)
            c.check(img == pbt.q_realization(t, n), lambda: f"pi(G[{_perm(sigma)}]) != Q[{_shape(t)}] at m={n}")
        rank = pbt.exact_rank(pbt.q_realization(t, n) for t in enumerate_shapes(n))
        c.check(rank == catalan(n), lambda: f"Q_T dependent at n={n}: rank {rank}")
    for a, b in _shape_pairs(min(max_n, projection_max)):
        got = pbt.q_dual_product(a, b)
        want = pbt.q_product_by_transpose(a, b)
        c.check(got == want, lambda: f"Q[{_shape(a)}] Q[{_shape(b)}]: {got} vs {want}")
    return {}


def check_cauchy(c: _Counter, max_n: int, m: int = 4) -> dict:
    for n in range(max_n + 1):
        c.check(fqsym.cauchy_check(n, m), f"free Cauchy identity fails at n={n}, m={m}")
        c.check(fqsym.cauchy_check(n, m, ("G", "F")), f"free Cauchy identity (G,F) fails at n={n}, m={m}")
    return {"alphabet": m}


def check_intervals(c: _Counter, max_n: int) -> dict:
    for n in range(max_n + 1):
        for t in enumerate_shapes(n):
            try:
                lo, hi = pbt.class_interval(t)
            except pbt.IntervalError as exc:
                c.check(False, str(exc))
            c.check(lo == trees.canonical_perm(t), f"class minimum of {_shape(t)} is not its tree-word")
    for a, b in _shape_pairs(max_n):
        try:
            pbt.sh_interval(a, b)
            c.check(True, "")
        except pbt.IntervalError as exc:
            c.check(False, str(exc))
    return {"weak_order": "right (value-inversion inclusion)"}


def check_graphs(c: _Counter, max_n: int, paths_max: Optional[int] = None) -> dict:
    paths_max = max(max_n, paths_max or 0)
    top = max(max_n + 1, paths_max)
    gamma = graphs.build_gamma(top)
    gamma_star = graphs.build_gamma_star(top)
    for g in (gamma, gamma_star):
        c.check(graphs.level_sizes(g) == [catalan(n) for n in range(top + 1)], f"{g.name} level sizes")
        c.check(graphs.edges_respect_grading(g), f"{g.name} has a non-graded edge")
    result = graphs.fomin_duality_check(max_n, gamma, gamma_star)
    c.check(result.ok, lambda: f"DU-UD != Id at {result.counterexample}: {result.defect}")
    for n in range(paths_max + 1):
        counts = graphs.path_counts(n, gamma, gamma_star)
        c.check(graphs.path_identity_holds(n, counts), f"sum f f* != {n}!")
        for t, (f, fs) in counts.items():
            c.check(f == 1, lambda: f"{_shape(t)}: {f} Gamma-paths")
            c.check(fs == sylvester.class_size(t) == trees.count_decreasing_labelings(t), f"{_shape(t)}: f*")
    return {
        "orientation": result.orientation,
        "passing_orientations": result.passing_orientations,
        "path_counts": "f = 1 (Gamma is a tree); f* = class size = decreasing labelings",
    }


SUITES: dict[str, tuple[Callable, Callable[[VerifyConfig], dict]]] = {
    "worked": (check_worked, lambda cfg: {"max_n": cfg.worked}),
    "congruence": (check_congruence, lambda cfg: {"max_n": cfg.congruence}),
    "canonical": (check_canonical, lambda cfg: {"max_n": cfg.canonical}),
    "census": (check_census, lambda cfg: {"max_n": cfg.census}),
    "product": (check_product, lambda cfg: {"max_n": cfg.product}),
    "realization": (check_realization, lambda cfg: {"max_n": cfg.realization, "m": cfg.realization_alphabet}),
    "hook": (check_hook, lambda cfg: {"max_n": cfg.hook}),
    "specialization": (check_specialization, lambda cfg: {"max_n": cfg.specialization}),
    "duality": (check_duality, lambda cfg: {"max_n": cfg.duality, "projection_max": cfg.projection}),
    "cauchy": (check_cauchy, lambda cfg: {"max_n": cfg.cauchy, "m": cfg.cauchy_alphabet}),
    "intervals": (check_intervals, lambda cfg: {"max_n": cfg.intervals}),
    "graphs": (check_graphs, lambda cfg: {"max_n": cfg.graphs, "paths_max": cfg.paths}),
}


def run_suite(name: str, max_n: Optional[int] = None, config: Optional[VerifyConfig] = None) -> SuiteResult:
    """Run one suite.  ``max_n`` overrides the primary bound of the config."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn, kwargs_of = SUITES[name]
    kwargs = kwargs_of(config or VerifyConfig())
    if max_n is not None:
        kwargs = {k: (min(v, max_n) if k != "max_n" else max_n) for k, v in kwargs.items() if k != "m"} | (
            {"m": kwargs["m"]} if "m" in kwargs else {}
        )
    counter = _Counter()
    start = time.perf_counter()
    result = SuiteResult(name, True, kwargs["max_n"])
    try:
        result.notes = fn(counter, **kwargs) or {}
    except Failure as exc:
        result.ok = False
        result.counterexample = str(exc)
    result.checked = counter.n
    result.seconds = time.perf_counter() - start
    return result


def run_all(max_n: Optional[int] = None, config: Optional[VerifyConfig] = None) -> list[SuiteResult]:
    return [run_suite(name, max_n, config) for name in SUITES]
