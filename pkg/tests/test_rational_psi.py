from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from pisotexp import (
    LeftWord,
    alpha_expand,
    is_weakly_admissible,
    make_spec,
    pi_alpha,
    psi_step,
    psi_trace,
    rational_alpha_expand,
    rational_alpha_represent,
)
from pisotexp.errors import BudgetExhausted, OutOfRange, UnsupportedSpec
from pisotexp.rational_psi import normalize_with_transducer

SPECS = {a: make_spec([1, a]) for a in (1, 2, 3, 4)}

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=30)
unit_rationals = st.fractions(min_value=-1, max_value=1, max_denominator=40).filter(lambda q: abs(q) < 1)


def alpha_numeric_match(w: LeftWord, a: int, q: Fraction) -> bool:
    root = oracles.conjugate_root([1, a])
    return oracles.close(oracles.left_word_value(w.period, w.head, w.fraction, root), oracles.evaluate([q], root))


# --- the local rewrite ----------------------------------------------------------------


def test_step_examples():
    assert psi_step(Fraction(3), Fraction(-2), 5, 3) == (3, -2, 5)
    assert psi_step(0, 0, Fraction(1, 2), 3) == (Fraction(-1, 2), Fraction(3, 2), 1)
    # second window of the 1/2 trace: (0, -1/2, 3/2)
    assert psi_step(0, Fraction(-1, 2), Fraction(3, 2), 3) == (Fraction(-1, 2), Fraction(1), 2)


@pytest.mark.parametrize("a", [1, 2, 3, 4])
@given(x3=fractions, x2=fractions, x1=fractions)
def test_step_preserves_alpha_value(a, x3, x2, x1):
    spec = SPECS[a]
    alpha = -spec.beta.inverse()
    y3, y2, y1 = psi_step(x3, x2, x1, a)
    assert alpha * alpha * x3 + alpha * x2 + x1 == alpha * alpha * y3 + alpha * y2 + y1
    assert isinstance(y1, int) and y1 == math.ceil(x1)


# --- traces -------------------------------------------------------------------------------


def test_half_trace():
    tr = psi_trace(Fraction(1, 2), 3)
    assert tr.emitted == [1, 2, 1, 0]
    assert (tr.period_start, tr.period_len) == (1, 3)
    assert str(tr.word()) == "~(012)1"
    assert "3/2" in tr.table()


@pytest.mark.parametrize("a", [1, 2, 3, 4])
@given(q=unit_rationals)
def test_trace_invariants(a, q):
    tr = psi_trace(q, a)
    den = q.denominator
    for step in tr.steps:
        hi, lo, digit = step.after
        assert -1 < lo < a
        assert -1 < hi <= 0
        assert 0 <= digit <= a
        assert den % hi.denominator == 0 and den % lo.denominator == 0
    assert len(tr.steps) <= (den * (a + 1) + 1) ** 2


def test_trace_errors():
    with pytest.raises(OutOfRange):
        psi_trace(Fraction(1), 2)
    with pytest.raises(BudgetExhausted):
        psi_trace(Fraction(1, 29), 3, budget=2)


# --- representations and expansions -------------------------------------------------------


def test_represent_examples():
    assert str(rational_alpha_represent(Fraction(1, 2), SPECS[3])) == "~(012)1"
    assert rational_alpha_represent(Fraction(0), SPECS[1]) == LeftWord()
    w = rational_alpha_represent(Fraction(1, 2), SPECS[1])
    assert pi_alpha(w, SPECS[1]) == SPECS[1].rational(Fraction(1, 2))
    assert alpha_numeric_match(w, 1, Fraction(1, 2))


def test_expand_examples():
    three = SPECS[3]
    assert str(rational_alpha_expand(Fraction(1, 2), three)) == "~(012)1"
    w = rational_alpha_expand(Fraction(3, 2), three)
    assert str(w) == "~(012)2" and w.fraction == ()
    w = rational_alpha_expand(Fraction(-1, 3), SPECS[2])
    assert pi_alpha(w, SPECS[2]) == SPECS[2].rational(Fraction(-1, 3))
    assert is_weakly_admissible(w, SPECS[2])
    assert alpha_numeric_match(w, 2, Fraction(-1, 3))


def test_expand_outside_unit_interval():
    golden = SPECS[1]
    # the only expansion of 4 is finite and has a fractional part
    assert str(rational_alpha_expand(Fraction(4), golden)) == "101.01"
    w = rational_alpha_expand(Fraction(-7, 3), golden)
    assert pi_alpha(w, golden) == golden.rational(Fraction(-7, 3))
    assert is_weakly_admissible(w, golden)


def test_expand_errors():
    with pytest.raises(UnsupportedSpec):
        rational_alpha_expand(Fraction(1, 2), make_spec([1, 0, 1]))
    with pytest.raises(OutOfRange):
        rational_alpha_represent(Fraction(3, 2), SPECS[2])


@pytest.mark.parametrize("a", [1, 2, 3, 4])
@given(q=fractions)
def test_expansion_properties(a, q):
    spec = SPECS[a]
    w = rational_alpha_expand(q, spec)
    if abs(q) < 1:
        assert w.fraction == ()
    assert pi_alpha(w, spec) == spec.rational(q)
    assert is_weakly_admissible(w, spec)


@pytest.mark.parametrize("a", [1, 2, 3])
def test_transducer_matches_exact_renormalization(a, seed):
    """Transducer output against the general exact construction, 200 rationals."""
    spec = SPECS[a]
    rng = random.Random(f"{seed}:diff:{a}")
    for _ in range(200):
        den = rng.randint(2, 30)
        q = Fraction(rng.randint(-den + 1, den - 1), den)
        raw = rational_alpha_represent(q, spec)
        via_transducer = normalize_with_transducer(raw, a, q.denominator)
        via_exact = alpha_expand(spec.rational(q))
        assert pi_alpha(via_transducer, spec) == pi_alpha(via_exact, spec) == spec.rational(q)
        assert is_weakly_admissible(via_transducer, spec)
