"""Braid words, the exponent sum, and the Gorin-Lin presentation of B_n'."""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np


class TooFewStrands(ValueError):
    pass


class OddLength(ValueError):
    pass


Letter = tuple[int, int]  # (generator index, +1 or -1)


def _free_reduce(letters) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for i, e in letters:
        if stack and stack[-1] == (i, -e):
            stack.pop()
        else:
            stack.append((i, e))
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), 1 if e > 0 else -1) for i, e in self.letters)
        for i, _ in letters:
            if not 1 <= i < self.n:
                raise ValueError(f"s_{i} is not a generator of B_{self.n}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, n: int, text: str) -> "BraidWord":
        """``"s2 S1"`` is s_2 s_1^-1."""
        letters = []
        for tok in text.split():
            if tok[0] not in "sS" or not tok[1:].isdigit():
                raise ValueError(f"bad braid token {tok!r}")
            letters.append((int(tok[1:]), 1 if tok[0] == "s" else -1))
        return cls(n, tuple(letters))

    def __str__(self) -> str:
        return " ".join(("s" if e > 0 else "S") + str(i) for i, e in self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(max(self.n, other.n), self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple((i, -e) for i, e in reversed(self.letters)))

    def reduced(self) -> "BraidWord":
        return BraidWord(self.n, _free_reduce(self.letters))

    def conjugate(self, by: "BraidWord") -> "BraidWord":
        """by * self * by^-1"""
        return by * self * by.inverse()


def s(n: int, i: int, e: int = 1) -> BraidWord:
    return BraidWord(n, ((i, e),))


def word(n: int, *letters: Letter) -> BraidWord:
    return BraidWord(n, letters)


def exponent_sum(w: BraidWord) -> int:
    return sum(e for _, e in w.letters)


def gorin_lin_generators(n: int) -> dict[str, BraidWord]:
    """p0, p1 and, for n >= 4, b and q_3 .. q_{n-1}."""
    if n < 3:
        raise TooFewStrands("the Gorin-Lin generators need n >= 3")
    gens = {
        "p0": word(n, (2, 1), (1, -1)),
        "p1": word(n, (1, 1), (2, 1), (1, -1), (1, -1)),
    }
    if n >= 4:
        gens["b"] = word(n, (2, 1), (1, -1), (3, 1), (2, -1))
        for ell in range(3, n):
            gens[f"q{ell}"] = word(n, (ell, 1), (1, -1))
    return gens


def gorin_lin_relations(n: int) -> list[tuple[str, BraidWord, BraidWord]]:
    """The defining relations (1)-(8) as (label, lhs, rhs) word pairs.

    Relations with an empty index range are omitted; ``label`` carries the
    relation number and the indices used.
    """
    if n < 4:
        raise TooFewStrands("the relations involve b and q_3, so n >= 4")
    g = gorin_lin_generators(n)
    p0, p1, b, q3 = g["p0"], g["p1"], g["b"], g["q3"]
    q = {ell: g[f"q{ell}"] for ell in range(3, n)}
    inv = BraidWord.inverse
    rels = [
        ("1", b, p0 * q3 * inv(p0)),
        ("2", p0 * b * inv(p0), b * b * inv(q3) * b),
        ("3", p1 * q3 * inv(p1), inv(q3) * b),
        ("4", p1 * b * inv(p1), (inv(q3) * b) ** 3 * q3 ** -2 * b),
    ]
    for i in range(4, n):
        rels.append((f"5:i={i}", p0 * q[i], q[i] * p1))
    for i in range(4, n):
        rels.append((f"6:i={i}", p1 * q[i], q[i] * inv(p0) * p1))
    for i in range(3, n - 1):
        rels.append((f"7:i={i}", q[i] * q[i + 1] * q[i], q[i + 1] * q[i] * q[i + 1]))
    for i in range(3, n):
        for j in range(i + 2, n):
            rels.append((f"8:i={i},j={j}", q[i] * q[j], q[j] * q[i]))
    return rels


def verify_gorin_lin_relations(evaluate, n: int) -> dict[str, bool]:
    """Check relations (1)-(8) as matrix identities under ``evaluate``.

    ``evaluate`` maps a BraidWord to a numpy matrix. Returns one boolean per
    relation number; a relation whose index range is empty reports True.
    """
    report = {str(k): True for k in range(1, 9)}
    for label, lhs, rhs in gorin_lin_relations(n):
        ok = bool(np.array_equal(evaluate(lhs), evaluate(rhs)))
        key = label.split(":")[0]
        report[key] = report[key] and ok
    return report


def vacuous_relations(n: int) -> list[str]:
    present = {label.split(":")[0] for label, _, _ in gorin_lin_relations(n)}
    return [str(k) for k in range(1, 9) if str(k) not in present]


def normal_closure_witness(n: int) -> tuple[BraidWord, BraidWord]:
    """Words lhs = s_{n-1} s_1^-1 and its expression as a conjugate of
    x = s_{n-2} s_1^-1 by c = s_{n-2} s_1^-1 s_{n-1} s_1^-1.

    The rewriting commutes s_1 past s_{n-2} and s_{n-1}, so it is an identity
    in B_n only when n - 2 >= 3.
    """
    if n < 5:
        raise TooFewStrands("the witness identity needs s_1 to commute with s_{n-2}, so n >= 5")
    m = n - 1
    lhs = word(n, (m, 1), (1, -1))
    x = word(n, (m - 1, 1), (1, -1))
    c = word(n, (m - 1, 1), (1, -1), (m, 1), (1, -1))
    return lhs.reduced(), x.conjugate(c).reduced()


def literal_witness_words(n: int) -> tuple[BraidWord, BraidWord]:
    """The same two words without the strand-count guard."""
    m = n - 1
    lhs = word(n, (m, 1), (1, -1))
    x = word(n, (m - 1, 1), (1, -1))
    c = word(n, (m - 1, 1), (1, -1), (m, 1), (1, -1))
    return lhs.reduced(), x.conjugate(c).reduced()


def random_commutator_word(n: int, length: int, seed: int = 0) -> BraidWord:
    """Reduced word built from ``length // 2`` random pairs s_i s_j^-1."""
    if length % 2:
        raise OddLength("length must be even")
    rng = random.Random(seed)
    letters: list[Letter] = []
    for _ in range(length // 2):
        letters.append((rng.randrange(1, n), 1))
        letters.append((rng.randrange(1, n), -1))
    return BraidWord(n, _free_reduce(letters))
