"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (visible with pytest -s or on failure).

Criterion 5 is the timing-sensitive one; it runs the real expansion per
order and fits the growth exponent, so it takes a couple of minutes.
"""

import math
import time
from fractions import Fraction

import pytest

from bchcalc.cli import main
from bchcalc.coeff import coefficient_block, coefficient_naive
from bchcalc.mateval import verify_convergence
from bchcalc.series import expand
from bchcalc.tables import f_prime_direct, g_prime_direct, precompute_tables
from bchcalc.words import enumerate_words, parse_word


@pytest.fixture(scope="module")
def tables():
    return precompute_tables(18)


def report(number, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"{status} criterion {number}: {detail}")
    assert ok, f"criterion {number}: {detail}"


def test_criterion_1_oracle_equivalence_exhaustive(tables):
    start = time.perf_counter()
    checked = 0
    for n in range(1, 13):
        for w in enumerate_words(n):
            assert coefficient_block(w, tables) == coefficient_naive(w), w
            checked += 1
    elapsed = time.perf_counter() - start
    report(1, checked == 8190 and elapsed < 300,
           f"block == naive on {checked} words in {elapsed:.1f}s")


def test_criterion_2_closed_form_spot_values(tables):
    m = lambda s: coefficient_block(parse_word(s), tables)
    ok = (
        m("X") == 1
        and m("Y") == 1
        and all(m("X" * k) == 0 for k in range(2, 13))
        and m("XY") == Fraction(1, 4)
        and m("YX") == Fraction(-1, 4)
        and m("XXY") == Fraction(1, 36)
        and m("XYX") == Fraction(-1, 18)
        and m("YYX") == Fraction(1, 36)
        and m("YXY") == Fraction(-1, 18)
        and m("XXY") - m("XYX") == Fraction(1, 12)
        and m("YYX") - m("YXY") == Fraction(1, 12)
    )
    report(2, ok, "classical coefficient values through third order")


def test_criterion_3_numerical_ground_truth(tables):
    hi = verify_convergence(6, 4, 0.05, 20, 20260824, tables)
    lo = verify_convergence(6, 4, 0.025, 20, 20260824, tables)
    bound = 1e2 * 0.05**7
    ratio = hi.max_residual / lo.max_residual
    # stated bracket [2^4, 2^6] excludes the stated ideal 2^7; the bracket
    # here is centered on the ideal instead (see decisions ledger)
    ok = hi.max_residual <= bound and 2**6 <= ratio <= 2**8
    report(3, ok,
           f"max_residual {hi.max_residual:.3e} <= {bound:.3e}, "
           f"halving ratio {ratio:.1f} in [64, 256]")


def test_criterion_4_table_properties():
    def recurrence(u, n, memo={}):
        if n > u:
            return 0
        if n == 1:
            return 1
        key = (u, n)
        if key not in memo:
            memo[key] = n * (recurrence(u - 1, n) + recurrence(u - 1, n - 1))
        return memo[key]

    for u in range(2, 31):
        for n in range(2, u + 1):
            assert f_prime_direct(u, n) == recurrence(u, n)

    def splits(word, n):
        if n == 0:
            if not word:
                yield ()
            return
        for take in range(1, len(word) - n + 2):
            piece = word[:take]
            if "YX" in piece:
                break
            r = piece.count("X")
            for rest in splits(word[take:], n - 1):
                yield ((r, len(piece) - r),) + rest

    for u in range(0, 9):
        for v in range(0, 9 - u):
            if u + v == 0:
                continue
            for n in range(1, u + v + 1):
                total = Fraction(0)
                for pairs in splits("X" * u + "Y" * v, n):
                    weight = Fraction(1)
                    for r, s in pairs:
                        weight /= math.factorial(r) * math.factorial(s)
                    total += weight
                expected = total * math.factorial(u) * math.factorial(v)
                assert g_prime_direct(u, v, n) == expected, (u, v, n)
    report(4, True, "f' recurrence (u <= 30) and g' enumeration oracle (u+v <= 8)")


def test_criterion_5_scaling_benchmark(tables):
    # warm up the interpreter so the smallest order is not inflated
    expand(11, False, False, tables)

    timings = {}
    for order in range(12, 19):
        start = time.perf_counter()
        expand(order, False, False, tables)
        timings[order] = time.perf_counter() - start

    xs = list(timings)
    ys = [math.log2(timings[n]) for n in xs]
    count = len(xs)
    sx, sy = sum(xs), sum(ys)
    slope = (count * sum(x * y for x, y in zip(xs, ys)) - sx * sy) / (
        count * sum(x * x for x in xs) - sx * sx
    )

    start = time.perf_counter()
    for n in range(1, 15):
        for w in enumerate_words(n):
            coefficient_naive(w)
    naive_14 = time.perf_counter() - start
    speedup = naive_14 / timings[14]

    ok = 1.3 <= slope <= 1.7 and speedup >= 10
    report(5, ok,
           f"slope {slope:.2f} in [1.3, 1.7]; block {speedup:.0f}x faster "
           f"than naive at order 14")


def test_criterion_6_expand_determinism(capsys):
    outputs = set()
    for threads in ("1", "4"):
        for _ in range(2):
            code = main(["expand", "--order", "10", "--format", "json",
                         "--threads", threads])
            captured = capsys.readouterr()
            assert code == 0
            outputs.add(captured.out)
    with capsys.disabled():
        report(6, len(outputs) == 1,
               "expand --order 10 byte-identical across runs and thread counts")
