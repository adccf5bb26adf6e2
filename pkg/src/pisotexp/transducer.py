"""Right-sequential normalizer for quadratic bases with d(1) = a1.

Words over ``{0, ..., a}`` are read from the least significant digit upward.
A state memorizes the pending factor: nothing, a single letter ``h``, or a
run ``a^k h`` sitting on top of ``h``.  A run ``a^k h`` (``h >= 1``) topped by
a letter ``i < a`` is forbidden and is rewritten as ``(i+1) u`` where ``u``
depends on the parity of ``k``; the incremented letter stays pending.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NoTransition
from .words import Digits, LeftWord, format_digits, parse_digits, canonicalize

State = Digits  # memorized factor, most significant first; () is the initial state


@dataclass(frozen=True)
class Edge:
    source: State
    letter: int
    output: Digits
    target: State


@dataclass(frozen=True)
class Transducer:
    a: int
    run_bound: int
    states: tuple[State, ...]
    edges: tuple[Edge, ...]
    initial: State = ()

    def __post_init__(self):
        table = {}
        for e in self.edges:
            key = (e.source, e.letter)
            if key in table:
                raise ValueError(f"two edges leave {label(e.source)} on {e.letter}")
            table[key] = e
        object.__setattr__(self, "_table", table)

    def step(self, state: State, letter: int) -> Edge:
        try:
            return self._table[(state, letter)]
        except KeyError:
            raise NoTransition(
                f"no edge from state {label(state) or 'ε'} on letter {letter}"
                f" (run bound C={self.run_bound} may be too small)"
            ) from None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Transducer)
            and (self.a, self.run_bound, self.initial) == (other.a, other.run_bound, other.initial)
            and set(self.states) == set(other.states)
            and set(self.edges) == set(other.edges)
        )

    def __hash__(self) -> int:
        return hash((self.a, self.run_bound, frozenset(self.edges)))


def label(state: State) -> str:
    return format_digits(state)


def build_normalization_transducer(a: int, run_bound: int) -> Transducer:
    """Normalizer for ``x^2 - a x - 1`` handling runs of ``a`` shorter than ``run_bound``."""
    if a < 1 or run_bound < 1:
        raise ValueError("need a >= 1 and run_bound >= 1")
    letters = range(1, a + 1)
    eps: State = ()
    states = [eps] + [(h,) for h in letters]
    edges = [Edge(eps, 0, (0,), eps)]
    for h in letters:
        edges.append(Edge(eps, h, (), (h,)))
        edges.append(Edge((h,), 0, (0, h), eps))
        for j in letters:
            if j != a:
                edges.append(Edge((h,), j, (h,), (j,)))
        if run_bound > 1:
            edges.append(Edge((h,), a, (), (a, h)))
        for k in range(1, run_bound):
            chain = (a,) * k + (h,)
            states.append(chain)
            if k + 1 <= run_bound - 1:
                edges.append(Edge(chain, a, (), (a,) * (k + 1) + (h,)))
            m = (k - 1) // 2
            if k % 2:
                u = (0, a) * m + (0, h - 1)
            else:
                u = (0, a) * m + (0, a - 1, h)
            for i in range(a):
                edges.append(Edge(chain, i, u, (i + 1,)))
    return Transducer(a, run_bound, tuple(states), tuple(edges))


def consecutive_a_bound(a: int, den: int) -> int:
    """Smallest K with ``a^(K-2) > den``; ``den + 2`` when ``a = 1``."""
    if den < 1:
        raise ValueError("den must be positive")
    if a == 1:
        return den + 2
    k = 2
    while a ** (k - 2) <= den:
        k += 1
    return k


def _run(t: Transducer, state: State, letters: Iterable[int], out: list) -> State:
    for x in letters:
        e = t.step(state, x)
        out.extend(reversed(e.output))
        state = e.target
    return state


def _flush(t: Transducer, state: State, out: list) -> None:
    for _ in range(2 * len(t.states) + 2):
        if state == t.initial:
            return
        state = _run(t, state, (0,), out)
    raise NoTransition("transducer does not return to its initial state on zeros")


def run_right_sequential(t: Transducer, w: Sequence[int] | LeftWord):
    """Normalize a word read from right to left.

    A plain digit sequence (most significant first) yields a digit tuple,
    extended on the left as far as pending carries require.  A
    :class:`LeftWord` yields a canonical :class:`LeftWord`; its period is
    processed copy by copy until the state at a period boundary repeats.
    """
    if not isinstance(w, LeftWord):
        out: list[int] = []
        state = _run(t, t.initial, reversed(tuple(w)), out)
        _flush(t, state, out)
        res = tuple(reversed(out))
        extra = len(res) - len(w)
        # drop zeros the flush added on the left
        while extra > 0 and res and res[0] == 0:
            res, extra = res[1:], extra - 1
        return res
    f = len(w.fraction)
    out = []
    state = _run(t, t.initial, reversed(w.head + w.fraction), out)
    if not any(w.period):
        _flush(t, state, out)
        low = list(reversed(out))
        return canonicalize(LeftWord((), low[: len(low) - f], low[len(low) - f :]))
    # output length at each period boundary, keyed by the state reached there
    seen: dict[State, int] = {}
    copies = 0
    while True:
        if len(out) >= f:
            if state in seen:
                start = seen[state]
                break
            seen[state] = len(out)
        state = _run(t, state, reversed(w.period), out)
        copies += 1
        if copies > 4 * len(t.states) + 4:
            raise NoTransition("period never synchronized")
    cycle, pre = out[start:], out[:start]
    body = list(reversed(pre))
    head = body[: len(body) - f]
    frac = body[len(body) - f :]
    return canonicalize(LeftWord(tuple(reversed(cycle)), head, frac))


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------


def export(t: Transducer, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(
            {
                "a": t.a,
                "run_bound": t.run_bound,
                "initial": label(t.initial),
                "states": [label(s) for s in t.states],
                "edges": [
                    {
                        "source": label(e.source),
                        "letter": e.letter,
                        "output": list(e.output),
                        "target": label(e.target),
                    }
                    for e in t.edges
                ],
            },
            indent=2,
        )
    if fmt == "dot":
        name = {s: f"q{i}" for i, s in enumerate(t.states)}
        lines = ["digraph normalizer {", "  rankdir=LR;"]
        for s in t.states:
            shape = "doublecircle" if s == t.initial else "circle"
            lines.append(f'  {name[s]} [label="{label(s) or "ε"}", shape={shape}];')
        for e in t.edges:
            out = format_digits(e.output) or "ε"
            lines.append(f'  {name[e.source]} -> {name[e.target]} [label="{e.letter}|{out}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")


def parse_transducer(text: str) -> Transducer:
    """Inverse of ``export(t, "json")``."""
    obj = json.loads(text)
    edges = tuple(
        Edge(parse_digits(e["source"]), int(e["letter"]), tuple(e["output"]), parse_digits(e["target"]))
        for e in obj["edges"]
    )
    return Transducer(
        int(obj["a"]),
        int(obj["run_bound"]),
        tuple(parse_digits(s) for s in obj["states"]),
        edges,
        parse_digits(obj["initial"]),
    )
