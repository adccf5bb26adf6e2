"""Acceptance criteria, one marker label per criterion.

Run ``pytest tests/test_acceptance.py`` (or execute this file directly); the
terminal summary prints one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import json
import math
import random
import sys
import time
from fractions import Fraction

import mpmath
import pytest

import oracles
from helpers import run_capped_word
from pisotexp import (
    FiniteWord,
    LeftWord,
    algorithm1,
    alpha_expand,
    beta_expand,
    build_normalization_transducer,
    consecutive_a_bound,
    enumerate_expansions,
    expansions_of_minus_one,
    is_weakly_admissible,
    make_spec,
    normalize_preperiod,
    parse_word,
    pi_alpha,
    pi_beta,
    psi_step,
    psi_trace,
    rational_alpha_expand,
    rational_alpha_represent,
    renyi_d,
    renyi_d_star,
    run_right_sequential,
)
from pisotexp import alpha_adic, beta
from pisotexp.cli import main

ac = pytest.mark.acceptance


@pytest.fixture
def cold():
    """Drop module-level caches so timings include table construction."""
    alpha_adic._TABLES.clear()
    beta._RENYI_CACHE.clear()


def _cli_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0, out
    return json.loads(out)


def _alpha_matches(word: LeftWord, coeffs, target_coords) -> bool:
    root = oracles.conjugate_root(coeffs)
    got = oracles.left_word_value(word.period, word.head, word.fraction, root)
    return oracles.close(got, oracles.evaluate(target_coords, root))


# ---------------------------------------------------------------------------
# 1. golden: the two expansions of -1


@ac("AC1 golden alpha-enumerate -1 gives exactly two words")
def test_ac1_enumerate_minus_one(capsys, cold):
    start = time.perf_counter()
    payload = _cli_json(
        capsys, "alpha-enumerate", "--coeffs", "1,1", "--value=-1", "--head-bound", "6", "--fraction-bound", "6"
    )
    elapsed = time.perf_counter() - start
    assert {e["word"] for e in payload["expansions"]} == {"~(10)", "~(10)0.1"}
    assert len(payload["expansions"]) == 2
    assert elapsed < 1.0


@ac("AC1 golden alpha-enumerate -1 gives exactly two words")
def test_ac1_words_evaluate_to_minus_one():
    for text in ("~(10)", "~(10)0.1"):
        assert _alpha_matches(parse_word(text), [1, 1], [Fraction(-1)])


# ---------------------------------------------------------------------------
# 2. golden: borrowing algorithm on -4


@ac("AC2 golden -4 by borrowing and its pre-period normalization")
def test_ac2_minus_four(golden, cold):
    start = time.perf_counter()
    result = algorithm1(golden.rational(-4))
    normalized, _ = normalize_preperiod(FiniteWord((1, -1, 1, -1, 1, 0), 4), golden)
    elapsed = time.perf_counter() - start
    assert str(result.word) == "~(10)0100.001"
    assert str(result.normalized) == "0100.001"
    assert str(normalized) == "0100.001"
    assert elapsed < 1.0


@ac("AC2 golden -4 by borrowing and its pre-period normalization")
def test_ac2_values_independently(golden):
    w = parse_word("~(10)0100.001")
    assert _alpha_matches(w, [1, 1], [Fraction(-4)])
    root = oracles.dominant_root([1, 1])
    # the signed pre-period and its normalization agree at beta
    with mpmath.workdps(oracles.DPS):
        signed = sum(d * root ** (3 - i) for i, d in enumerate((1, -1, 1, -1, 1, 0)))
        plain = sum(d * root ** (3 - i) for i, d in enumerate((0, 1, 0, 0, 0, 0, 1)))
    assert oracles.close(signed, plain)


# ---------------------------------------------------------------------------
# 3. golden: exact value of ~(10)010.1


@ac("AC3 golden value of ~(10)010.1 is -2")
def test_ac3_exact_value(golden):
    v = pi_alpha(parse_word("~(10)010.1"), golden)
    assert v.coords == (Fraction(-2), Fraction(0))
    assert v == golden.rational(-2)


@ac("AC3 golden value of ~(10)010.1 is -2")
def test_ac3_numeric_oracle():
    assert _alpha_matches(parse_word("~(10)010.1"), [1, 1], [Fraction(-2)])


# ---------------------------------------------------------------------------
# 4. cubic x^3 - x^2 - 1


@ac("AC4 cubic Renyi expansions and the three expansions of -1")
def test_ac4_cubic(cubic):
    assert str(renyi_d(cubic)) == "101"
    assert str(renyi_d_star(cubic)) == "0.(100)~"
    words = {str(w) for w in expansions_of_minus_one(cubic)}
    assert words == {"~(100)", "~(100)0.01", "~(100)01.00001"}
    assert len(expansions_of_minus_one(cubic)) == 3


@ac("AC4 cubic Renyi expansions and the three expansions of -1")
def test_ac4_numeric_oracles(cubic):
    beta_ = oracles.dominant_root([1, 0, 1])
    with mpmath.workdps(oracles.DPS):
        # d(1): greedy digits of 1 under the beta-transformation
        first = int(mpmath.floor(beta_))
        assert [first] + oracles.greedy_digits(beta_ - first, beta_, 5) == [1, 0, 1, 0, 0, 0]
    for text in ("~(100)", "~(100)0.01", "~(100)01.00001"):
        w = parse_word(text)
        assert _alpha_matches(w, [1, 0, 1], [Fraction(-1)])
        assert is_weakly_admissible(w, cubic)


# ---------------------------------------------------------------------------
# 5. a = 3: psi iteration for 1/2 and 3/2


@ac("AC5 a=3 psi trace of 1/2 and expansion of 3/2")
def test_ac5_trace(capsys):
    payload = _cli_json(capsys, "rational-adic", "--a", "3", "--q", "1/2", "--trace")
    assert payload["word"] == "~(012)1"
    after = [tuple(s["after"]) for s in payload["steps"]]
    assert after[0][:2] == ("-1/2", "3/2")
    assert after[payload["period_start"] + payload["period_len"] - 1][:2] == ("-1/2", "3/2")
    assert [s[2] for s in after] == ["1", "2", "1", "0"]
    assert main(["rational-adic", "--a", "3", "--q", "1/2", "--trace"]) == 0
    text = capsys.readouterr().out
    assert text.strip().splitlines()[-1] == "~(012)1"


@ac("AC5 a=3 psi trace of 1/2 and expansion of 3/2")
def test_ac5_three_halves(three, capsys):
    w = rational_alpha_expand(Fraction(3, 2), three)
    assert str(w) == "~(012)2"
    assert w.fraction == ()
    payload = _cli_json(capsys, "rational-adic", "--a", "3", "--q", "3/2", "--normalize")
    assert payload["word"] == "~(012)2"
    assert _alpha_matches(w, [1, 3], [Fraction(3, 2)])
    assert _alpha_matches(psi_trace(Fraction(1, 2), 3).word(), [1, 3], [Fraction(1, 2)])


# ---------------------------------------------------------------------------
# 6. randomized property suite, 500 cases per spec

CASES = 500
SPECS = {"golden": [1, 1], "a=3": [1, 3], "cubic": [1, 0, 1]}
QUADRATIC = {"golden": 1, "a=3": 3}
_AC6_ELAPSED: dict[str, float] = {}
AC6 = "AC6 randomized property suite"


def _rng(seed, *tags) -> random.Random:
    return random.Random(f"{seed}:" + ":".join(map(str, tags)))


@ac(AC6)
@pytest.mark.parametrize("name", SPECS)
def test_ac6_beta_round_trip(name, seed):
    start = time.perf_counter()
    spec = make_spec(SPECS[name])
    rng = _rng(seed, "beta", name)
    top = spec.beta_power(3)
    failures = []
    done = 0
    while done < CASES:
        x = spec.element([Fraction(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(spec.degree)])
        if x.sign() < 0 or x >= top:
            continue
        done += 1
        if pi_beta(beta_expand(x), spec) != x:
            failures.append(x)
    _AC6_ELAPSED[f"beta {name}"] = time.perf_counter() - start
    assert not failures


@ac(AC6)
@pytest.mark.parametrize("name", SPECS)
def test_ac6_alpha_outputs_admissible(name, seed):
    start = time.perf_counter()
    spec = make_spec(SPECS[name])
    rng = _rng(seed, "alpha", name)
    failures = []
    for _ in range(CASES):
        x = spec.element([rng.randint(-20, 20) for _ in range(spec.degree)])
        w = alpha_expand(x)
        if not (is_weakly_admissible(w, spec) and pi_alpha(w, spec) == x):
            failures.append((x, w))
    _AC6_ELAPSED[f"alpha {name}"] = time.perf_counter() - start
    assert not failures


@ac(AC6)
@pytest.mark.parametrize("name", QUADRATIC)
def test_ac6_psi_preserves_value(name, seed):
    start = time.perf_counter()
    a = QUADRATIC[name]
    spec = make_spec([1, a])
    alpha = -spec.beta.inverse()
    rng = _rng(seed, "psi", name)
    failures = []
    for _ in range(CASES):
        x3, x2, x1 = (Fraction(rng.randint(-30, 30), rng.randint(1, 12)) for _ in range(3))
        y3, y2, y1 = psi_step(x3, x2, x1, a)
        before = alpha * alpha * x3 + alpha * x2 + x1
        after = alpha * alpha * y3 + alpha * y2 + y1
        if before != after:
            failures.append((x3, x2, x1))
    _AC6_ELAPSED[f"psi {name}"] = time.perf_counter() - start
    assert not failures


@ac(AC6)
@pytest.mark.parametrize("name", QUADRATIC)
def test_ac6_carry_bounds(name, seed):
    start = time.perf_counter()
    a = QUADRATIC[name]
    rng = _rng(seed, "carry", name)
    failures = []
    for _ in range(CASES):
        den = rng.randint(1, 40)
        q = Fraction(rng.randint(-den + 1, den - 1), den)
        for step in psi_trace(q, a).steps:
            hi, lo, digit = step.after
            if not (-1 < lo < a and -1 < hi <= 0 and 0 <= digit <= a):
                failures.append((q, step))
    _AC6_ELAPSED[f"carry {name}"] = time.perf_counter() - start
    assert not failures


@ac(AC6)
@pytest.mark.parametrize("a", [1, 2, 3])
def test_ac6_transducer(a, seed):
    start = time.perf_counter()
    spec = make_spec([1, a])
    rng = _rng(seed, "transducer", a)
    machines = {c: build_normalization_transducer(a, c) for c in range(1, 6)}
    failures = []
    for _ in range(CASES):
        c = rng.randint(1, 5)
        t = machines[c]
        w = run_capped_word(rng, a, c - 1, rng.randint(0, 16))
        out = run_right_sequential(t, w)
        same_value = pi_alpha(FiniteWord(tuple(w), len(w)), spec) == pi_alpha(FiniteWord(out, len(out)), spec)
        admissible = is_weakly_admissible(LeftWord((), out), spec)
        idempotent = tuple(run_right_sequential(t, out)) == tuple(out)
        if not (same_value and admissible and idempotent):
            failures.append((c, w, out))
    _AC6_ELAPSED[f"transducer a={a}"] = time.perf_counter() - start
    assert not failures


@ac(AC6)
def test_ac6_total_time():
    assert len(_AC6_ELAPSED) == 13, sorted(_AC6_ELAPSED)
    assert sum(_AC6_ELAPSED.values()) < 60.0


# ---------------------------------------------------------------------------
# 7. uniqueness over the golden integer grid


@ac("AC7 golden uniqueness over the integer grid")
def test_ac7_grid(golden):
    start = time.perf_counter()
    phi = oracles.dominant_root([1, 1])
    problems = []
    for c0 in range(-10, 11):
        for c1 in range(-10, 11):
            x = golden.element([c0, c1])
            found = list(enumerate_expansions(x, 8, 6))
            with mpmath.workdps(oracles.DPS):
                numeric = c0 + c1 * phi
            for w in found:
                if not _alpha_matches(w, [1, 1], x.coords):
                    problems.append(("value", c0, c1, str(w)))
            if numeric > 0:
                if len(found) != 1:
                    problems.append(("count", c0, c1, [str(w) for w in found]))
            elif numeric < 0:
                if len(found) != 2 or any(w.period not in ((1, 0), (0, 1)) for w in found):
                    problems.append(("count", c0, c1, [str(w) for w in found]))
            elif [str(w) for w in found] != ["0"]:
                problems.append(("zero", c0, c1, [str(w) for w in found]))
    assert not problems, problems[:5]
    assert time.perf_counter() - start < 300


# ---------------------------------------------------------------------------
# 8. run bound on the psi output


@ac("AC8 runs of a stay below the consecutive-a bound")
@pytest.mark.parametrize("a", [2, 3])
def test_ac8_run_bound(a):
    spec = make_spec([1, a])
    violations = []
    for den in range(1, 31):
        bound = oracles.base_digit_count(den, a) + 2
        assert consecutive_a_bound(a, den) == bound
        assert a ** (bound - 2) > den >= a ** (bound - 3)
        for p in range(-den + 1, den):
            if math.gcd(p, den) != 1:
                continue
            w = rational_alpha_represent(Fraction(p, den), spec)
            if w.period and all(d == a for d in w.period):
                violations.append((p, den, str(w)))
                continue
            longest = run = 0
            for d in w.period * 3 + w.head:
                run = run + 1 if d == a else 0
                longest = max(longest, run)
            if longest >= bound:
                violations.append((p, den, str(w)))
    assert not violations


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", *sys.argv[1:]]))
