"""Deterministic finite automata with output (DFAO) over base-g digits.

An integer n is fed to the machine as its base-g representation without
leading zeros, least significant digit first; n = 0 is the empty string, so
``eval(m, 0)`` is the output of the initial state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .words import Alphabet, WordStream


@dataclass(frozen=True)
class Dfao:
    base: int
    states: tuple[str, ...]
    initial: str
    # transitions[q][d] is the index of d[q]
    transitions: tuple[tuple[int, ...], ...]
    outputs: tuple[str, ...]
    name: str = ""

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be at least 2")
        if not self.states or len(set(self.states)) != len(self.states):
            raise ValueError("states must be nonempty and distinct")
        if self.initial not in self.states:
            raise ValueError(f"initial state {self.initial!r} not in {self.states!r}")
        if len(self.transitions) != len(self.states) or len(self.outputs) != len(self.states):
            raise ValueError("transition table and outputs must cover every state")
        nq = len(self.states)
        for row in self.transitions:
            if len(row) != self.base:
                raise ValueError("transition map must be total on digits")
            if any(not 0 <= t < nq for t in row):
                raise ValueError("transition to unknown state")

    @classmethod
    def from_table(cls, base: int, table: dict[str, list[str]], initial: str, outputs: dict[str, str], name: str = "") -> "Dfao":
        """Build from ``{state: [0[state], 1[state], ...]}`` and ``{state: output}``."""
        states = tuple(table)
        idx = {q: i for i, q in enumerate(states)}
        transitions = tuple(tuple(idx[t] for t in table[q]) for q in states)
        return cls(base, states, initial, transitions, tuple(str(outputs[q]) for q in states), name)

    @property
    def output_alphabet(self) -> Alphabet:
        return Alphabet(tuple(sorted(set(self.outputs))))

    def digits(self, n: int) -> list[int]:
        """Base-g digits of n, least significant first; [] for n = 0."""
        if n < 0:
            raise ValueError("automata read natural numbers only")
        out = []
        while n:
            n, d = divmod(n, self.base)
            out.append(d)
        return out

    def run(self, digits, start: int | None = None) -> int:
        q = self.states.index(self.initial) if start is None else start
        for d in digits:
            q = self.transitions[q][d]
        return q

    def trace(self, n: int, msd_first: bool = False) -> list[str]:
        """States visited while reading n (initial state first)."""
        ds = self.digits(n)
        if msd_first:
            ds.reverse()
        q = self.states.index(self.initial)
        path = [self.states[q]]
        for d in ds:
            q = self.transitions[q][d]
            path.append(self.states[q])
        return path

    def state_of(self, n: int, msd_first: bool = False) -> str:
        ds = self.digits(n)
        if msd_first:
            ds.reverse()
        return self.states[self.run(ds)]

    def eval(self, n: int, msd_first: bool = False) -> str:
        ds = self.digits(n)
        if msd_first:
            ds.reverse()
        return self.outputs[self.run(ds)]

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "base": self.base,
                "states": list(self.states),
                "initial": self.initial,
                "transitions": [[self.states[t] for t in row] for row in self.transitions],
                "outputs": list(self.outputs),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "Dfao":
        data = json.loads(text)
        states = data["states"]
        table = dict(zip(states, data["transitions"]))
        outputs = dict(zip(states, data["outputs"]))
        return cls.from_table(data["base"], table, data["initial"], outputs, data.get("name", ""))


def eval(m: Dfao, n: int, msd_first: bool = False) -> str:  # noqa: A001 - mirrors the operation name
    return m.eval(n, msd_first)


def word_of(m: Dfao, msd_first: bool = False) -> WordStream:
    """Output sequence a_0 a_1 a_2 ... of the automaton."""
    alphabet = m.output_alphabet
    out_sym = [alphabet.index(o) for o in m.outputs]
    q0 = m.states.index(m.initial)
    g = m.base
    table = m.transitions

    if msd_first:
        def f(n: int) -> int:
            return out_sym[m.run(m.digits(n)[::-1])]
        return WordStream.from_function(alphabet, f, name=m.name)

    def chunks():
        n = 0
        block = 4096
        while True:
            out = bytearray()
            for k in range(n, n + block):
                q = q0
                while k:
                    k, d = divmod(k, g)
                    q = table[q][d]
                out.append(out_sym[q])
            yield bytes(out)
            n += block

    return WordStream(alphabet, chunks(), name=m.name)


def _powers2() -> Dfao:
    return Dfao.from_table(
        2,
        {"i": ["i", "a"], "a": ["a", "b"], "b": ["b", "b"]},
        "i",
        {"i": "0", "a": "1", "b": "0"},
        name="powers2",
    )


def _ptm() -> Dfao:
    return Dfao.from_table(2, {"i": ["i", "a"], "a": ["a", "i"]}, "i", {"i": "0", "a": "1"}, name="ptm")


def _baum_sweet() -> Dfao:
    return Dfao.from_table(
        2,
        {"i": ["a", "i"], "a": ["i", "b"], "b": ["b", "b"]},
        "i",
        {"i": "1", "a": "0", "b": "0"},
        name="baum_sweet",
    )


def _paper_fold() -> Dfao:
    return Dfao.from_table(
        2,
        {"i": ["a", "i"], "a": ["b", "c"], "b": ["b", "b"], "c": ["c", "c"]},
        "i",
        {"i": "1", "a": "1", "b": "1", "c": "0"},
        name="paper_fold",
    )


BUILTINS = {
    "powers2": _powers2,
    "ptm": _ptm,
    "baum_sweet": _baum_sweet,
    "paper_fold": _paper_fold,
}


def builtin(name: str) -> Dfao:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise ValueError(f"unknown automaton {name!r}; choose from {sorted(BUILTINS)}") from None


# direct arithmetic definitions, used as oracles for the automata


def _is_power_of_two(n: int) -> int:
    return int(n > 0 and n & (n - 1) == 0)


def _popcount_parity(n: int) -> int:
    return bin(n).count("1") & 1


def _no_odd_zero_block(n: int) -> int:
    # 0 is the empty representation, hence a_0 = 1
    if n == 0:
        return 1
    return int(all(len(run) % 2 == 0 for run in bin(n)[2:].split("1")))


def _rs_parity(n: int) -> int:
    # overlapping occurrences of 11 in binary
    return bin(n & (n >> 1)).count("1") & 1


def _paper_fold_recursive(horizon: int) -> bytes:
    # a_n = 1 at powers of 2, a_{2^k + j} = 1 - a_{2^k - j}; then u_n = a_{n+1}
    a = bytearray(horizon + 2)
    k = 1
    for n in range(1, horizon + 2):
        if n & (n - 1) == 0:
            a[n] = 1
            k = n
        else:
            a[n] = 1 - a[2 * k - n]
    return bytes(a[1 : horizon + 1])


PREDICATES = ("powers_of_two", "ptm_popcount", "baum_sweet_blocks", "rudin_shapiro_11count", "paper_fold_recursive")


def predicate_word(kind: str, horizon: int) -> WordStream:
    """Sequence computed straight from its arithmetic definition, for the first ``horizon`` terms.

    The stream is finite: reading past ``horizon`` raises.
    """
    binary = Alphabet(("0", "1"))
    if kind == "rudin_shapiro_11count":
        data = bytes(_rs_parity(n) for n in range(horizon))
        return WordStream(Alphabet(("a", "b")), [data], name=kind)
    if kind == "paper_fold_recursive":
        return WordStream(binary, [_paper_fold_recursive(horizon)], name=kind)
    f = {
        "powers_of_two": _is_power_of_two,
        "ptm_popcount": _popcount_parity,
        "baum_sweet_blocks": _no_odd_zero_block,
    }.get(kind)
    if f is None:
        raise ValueError(f"unknown predicate {kind!r}; choose from {PREDICATES}")
    return WordStream(binary, [bytes(f(n) for n in range(horizon))], name=kind)


#: automaton name -> matching direct definition
ORACLE_FOR = {
    "powers2": "powers_of_two",
    "ptm": "ptm_popcount",
    "baum_sweet": "baum_sweet_blocks",
    "paper_fold": "paper_fold_recursive",
}
