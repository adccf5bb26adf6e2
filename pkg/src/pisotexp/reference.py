"""Fixed worked examples with known answers, checked end to end."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import make_spec
from .alpha_adic import algorithm1, enumerate_expansions, expansions_of_minus_one, normalize_preperiod
from .beta import beta_expand, renyi_d, renyi_d_star
from .rational_psi import psi_trace, rational_alpha_expand
from .words import FiniteWord, parse_word, pi_alpha


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


def _words(ws) -> str:
    return " , ".join(sorted(str(w) for w in ws))


def _cases() -> list[tuple[str, str, Callable[[], str]]]:
    golden = make_spec([1, 1])
    cubic = make_spec([1, 0, 1])
    three = make_spec([1, 3])

    def alpha_value(spec, text):
        return lambda: str(pi_alpha(parse_word(text), spec))

    return [
        ("golden d(1)", "11", lambda: str(renyi_d(golden))),
        ("golden d*(1)", "0.(10)~", lambda: str(renyi_d_star(golden))),
        ("golden greedy 4", "101.01", lambda: str(beta_expand(golden.rational(4)))),
        ("golden value ~(10)", "(-1, 0)", alpha_value(golden, "~(10)")),
        ("golden value ~(10)0.1", "(-1, 0)", alpha_value(golden, "~(10)0.1")),
        ("golden value ~(10)010.1", "(-2, 0)", alpha_value(golden, "~(10)010.1")),
        ("golden -4 by borrowing", "~(10)0100.001", lambda: str(algorithm1(golden.rational(-4)).word)),
        (
            "golden pre-period 1{-1}1{-1}.10",
            "0100.001",
            lambda: str(normalize_preperiod(FiniteWord((1, -1, 1, -1, 1, 0), 4), golden)[0]),
        ),
        (
            "golden -2 with the shifted -1",
            "~(10)010.1",
            lambda: str(algorithm1(golden.rational(-2), variant=1).word),
        ),
        (
            "golden all expansions of -1",
            "~(10) , ~(10)0.1",
            lambda: _words(enumerate_expansions(golden.rational(-1), 6, 6)),
        ),
        (
            "golden all expansions of 4",
            "101.01",
            lambda: _words(enumerate_expansions(golden.rational(4), 6, 6)),
        ),
        ("cubic d(1)", "101", lambda: str(renyi_d(cubic))),
        ("cubic d*(1)", "0.(100)~", lambda: str(renyi_d_star(cubic))),
        (
            "cubic expansions of -1",
            "~(100) , ~(100)0.01 , ~(100)01.00001",
            lambda: _words(expansions_of_minus_one(cubic)),
        ),
        ("a=3 d(1)", "31", lambda: str(renyi_d(three))),
        ("a=3 expansions of -1", "~(30) , ~(30)2.1", lambda: _words(expansions_of_minus_one(three))),
        ("a=3 psi digits of 1/2", "1 2 1 0", lambda: " ".join(map(str, psi_trace(Fraction(1, 2), 3).emitted))),
        ("a=3 expansion of 1/2", "~(012)1", lambda: str(rational_alpha_expand(Fraction(1, 2), three))),
        ("a=3 expansion of 3/2", "~(012)2", lambda: str(rational_alpha_expand(Fraction(3, 2), three))),
    ]


def reference_checks() -> list[Check]:
    out = []
    for name, expected, run in _cases():
        try:
            actual = run()
        except Exception as exc:  # a crash is reported as a failing row
            actual = f"{type(exc).__name__}: {exc}"
        out.append(Check(name, expected, actual))
    return out
