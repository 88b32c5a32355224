"""Acceptance criteria 1-12, each under its wall-clock bound.

Each test prints one line ``criterion N: PASS|FAIL ...``.  Run directly
(``python3 tests/test_acceptance.py``) for the twelve lines alone.
"""

from __future__ import annotations

import sys
import time
from collections import Counter

import pytest

from sylvmon import pbt, trees, verify
from sylvmon.sylvester import permutation_class
from sylvmon.trees import enumerate_shapes
from sylvmon.words import shifted_shuffle

CRITERIA: dict[int, tuple[float, callable]] = {}


def criterion(number: int, seconds: float):
    def register(fn):
        CRITERIA[number] = (seconds, fn)
        return fn

    return register


def suite(name: str, max_n: int | None = None) -> str | None:
    result = verify.run_suite(name, max_n)
    return None if result.ok else result.counterexample


@criterion(1, 1)
def worked_example():
    return suite("worked")


@criterion(2, 60)
def congruence_is_insertion_fibres():
    return suite("congruence", 7)


@criterion(3, 60)
def tree_words_generate_classes():
    return suite("canonical", 8)


@criterion(4, 60)
def class_census():
    return suite("census", 9)


@criterion(5, 120)
def tree_products():
    failure = suite("product", 7)
    if failure:
        return failure
    # whole classes: the shuffle of two classes is exactly the classes of Sh
    for n in range(8):
        for k in range(n + 1):
            for a in enumerate_shapes(k):
                for b in enumerate_shapes(n - k):
                    total: Counter = Counter()
                    for u in permutation_class(a):
                        for v in permutation_class(b):
                            total.update(shifted_shuffle(u, v))
                    want = Counter(p for s in pbt.sh_set(a, b) for p in permutation_class(s))
                    if total != want:
                        return f"class shuffle of {trees.serialize_tree(a)} and {trees.serialize_tree(b)}"
    return None


@criterion(6, 60)
def realization_oracle():
    return suite("realization", 5)


@criterion(7, 120)
def q_hook_formula():
    return suite("hook", 8)


@criterion(8, 60)
def principal_specialization():
    return suite("specialization", 4)


@criterion(9, 120)
def dual_basis():
    return suite("duality", 6)


@criterion(10, 60)
def cauchy_identity():
    return suite("cauchy", 4)


@criterion(11, 120)
def order_intervals():
    return suite("intervals", 7)


@criterion(12, 60)
def dual_graded_graphs():
    return suite("graphs", 7)


def evaluate(number: int) -> tuple[bool, str]:
    bound, fn = CRITERIA[number]
    start = time.perf_counter()
    failure = fn()
    elapsed = time.perf_counter() - start
    if failure is None and elapsed > bound:
        failure = f"took {elapsed:.1f}s, bound {bound:g}s"
    status = "PASS" if failure is None else "FAIL"
    line = f"criterion {number}: {status} {fn.__name__} ({elapsed:.2f}s / {bound:g}s)"
    if failure:
        line += f" -- {failure}"
    return failure is None, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
