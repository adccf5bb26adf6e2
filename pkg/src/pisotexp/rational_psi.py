"""Left-eventually-periodic expansions of rationals in bases ``x^2 - a x - 1``.

The value-preserving rewrite

    psi(x3, x2, x1) = (x3 - c, x2 + a c, ceil(x1)),   c = ceil(x1) - x1

is applied at consecutive positions starting from the single digit q.  Two
rational carries ride ahead of the emitted integer digits; the first repeated
carry pair closes the period.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import PisotSpec
from .alpha_adic import assemble, decompose
from .errors import (
    BudgetExhausted,
    NoTransition,
    NormalizationError,
    OutOfRange,
    UnsupportedSpec,
)
from .transducer import build_normalization_transducer, consecutive_a_bound, run_right_sequential
from .words import LeftWord, canonicalize, is_weakly_admissible, pi_alpha

Rational = Fraction


def psi_step(x3: Rational, x2: Rational, x1: Rational, a: int) -> tuple[Fraction, Fraction, int]:
    x1 = Fraction(x1)
    up = math.ceil(x1)
    c = up - x1
    return Fraction(x3) - c, Fraction(x2) + a * c, up


@dataclass(frozen=True)
class PsiState:
    carry_hi: Fraction
    carry_lo: Fraction
    a: int


@dataclass(frozen=True)
class PsiStep:
    index: int
    before: tuple[Fraction, Fraction, Fraction]
    after: tuple[Fraction, Fraction, int]


@dataclass
class PsiTrace:
    """Digits ``s_0, s_1, ...`` (lowest position first) and the detected cycle."""

    emitted: list[int] = field(default_factory=list)
    states: dict[PsiState, int] = field(default_factory=dict)
    steps: list[PsiStep] = field(default_factory=list)
    period_start: int = 0
    period_len: int = 0

    def word(self) -> LeftWord:
        head = self.emitted[: self.period_start]
        period = self.emitted[self.period_start : self.period_start + self.period_len]
        return canonicalize(LeftWord(tuple(reversed(period)), tuple(reversed(head))))

    def table(self) -> str:
        """Step table: the rewritten triple before and after each step."""

        rows = [f"{'step':>4}  {'s_i+2':>7} {'s_i+1':>7} {'s_i':>7}  ->  {'s_i+2':>7} {'s_i+1':>7} {'s_i':>3}"]
        for st in self.steps:
            b = " ".join(f"{str(v):>7}" for v in st.before)
            a = " ".join(f"{str(v):>7}" for v in st.after[:2]) + f" {st.after[2]:>3}"
            rows.append(f"{st.index:>4}  {b}  ->  {a}")
        return "\n".join(rows)


def _check_spec(spec: PisotSpec) -> int:
    if not spec.is_quadratic_unit:
        raise UnsupportedSpec("the psi-iteration needs a base x^2 - a x - 1")
    return spec.coeffs[1]


def psi_trace(q: Rational, a: int, budget: int | None = None) -> PsiTrace:
    q = Fraction(q)
    if abs(q) >= 1:
        raise OutOfRange(f"|q| must be < 1, got {q}")
    if budget is None:
        budget = (q.denominator * (a + 1) + 1) ** 2
    trace = PsiTrace()
    hi, lo, cur = Fraction(0), Fraction(0), q
    for i in range(budget):
        before = (hi, lo, cur)
        nhi, nlo, digit = psi_step(hi, lo, cur, a)
        trace.steps.append(PsiStep(i, before, (nhi, nlo, digit)))
        trace.emitted.append(digit)
        state = PsiState(nhi, nlo, a)
        if state in trace.states:
            j = trace.states[state]
            trace.period_start = j + 1
            trace.period_len = i - j
            return trace
        trace.states[state] = i
        # the next window is (0, s_{i+2}, s_{i+1})
        hi, lo, cur = Fraction(0), nhi, nlo
    raise BudgetExhausted(f"no repeated carry pair within {budget} steps")


def rational_alpha_represent(q: Rational, spec: PisotSpec, budget: int | None = None) -> LeftWord:
    """Eventually periodic representation of ``|q| < 1`` with no fractional part.

    Digits lie in ``{0, ..., a}`` but the word need not be weakly admissible.
    """
    a = _check_spec(spec)
    q = Fraction(q)
    if abs(q) >= 1:
        raise OutOfRange(f"|q| must be < 1, got {q}")
    if q == 0:
        return LeftWord()
    w = psi_trace(q, a, budget).word()
    if pi_alpha(w, spec) != spec.rational(q):
        raise NormalizationError(f"psi output {w} does not evaluate to {q}")
    return w


def normalize_with_transducer(w: LeftWord, a: int, den: int) -> LeftWord:
    """Run the normalizer, enlarging its run bound if a longer run of ``a`` shows up."""
    bound = consecutive_a_bound(a, den)
    longest = max(len(w.digits()) * 3, 8)
    while True:
        try:
            return run_right_sequential(build_normalization_transducer(a, bound), w)
        except NoTransition:
            bound += 1
            if bound > longest + consecutive_a_bound(a, den):
                raise


def rational_alpha_expand(q: Rational, spec: PisotSpec, budget: int | None = None) -> LeftWord:
    """Weakly admissible expansion of a rational.

    For ``|q| < 1`` the result has no fractional part.  Larger q are split
    as ``n + r`` with integer ``n`` and ``0 <= r < 1``; n is added to the
    units digit of the expansion of r and the result renormalized, which may
    produce fractional digits (the only expansion of 4 in the golden base
    is ``101.01``).
    """
    a = _check_spec(spec)
    q = Fraction(q)
    if abs(q) >= 1:
        n = math.floor(q)
        inner = rational_alpha_expand(q - n, spec, budget)
        period, base, digits = decompose(inner)
        digits[0] = digits.get(0, 0) + n
        return assemble(spec, period, base, digits).word
    w = rational_alpha_represent(q, spec, budget)
    if is_weakly_admissible(w, spec):
        return w
    return normalize_with_transducer(w, a, q.denominator)
