"""Shared generators for the transducer suites."""

from __future__ import annotations

import random

from pisotexp import build_normalization_transducer, run_right_sequential
from pisotexp.errors import NoTransition


def run_capped_word(rng: random.Random, a: int, cap: int, length: int) -> list[int]:
    """Word over {0..a} whose runs of the letter a are at most ``cap`` long."""
    w: list[int] = []
    run = 0
    for _ in range(length):
        letter = rng.randint(0, a)
        if letter == a and run >= cap:
            letter = rng.randint(0, a - 1)
        run = run + 1 if letter == a else 0
        w.append(letter)
    return w


def smallest_working_bound(a: int, word, start: int = 1, limit: int = 64) -> int:
    """Smallest run bound C >= start for which the normalizer accepts ``word``."""
    for c in range(start, limit + 1):
        try:
            run_right_sequential(build_normalization_transducer(a, c), word)
        except NoTransition:
            continue
        return c
    raise AssertionError(f"no run bound up to {limit} accepts {word}")


def longest_run(a: int, digits) -> int:
    run = best = 0
    for d in digits:
        run = run + 1 if d == a else 0
        best = max(best, run)
    return best
