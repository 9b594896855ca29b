"""Partitions, standard Young tableaux and the statistics fed to the Hecke models.

Partitions are plain tuples of positive integers in weakly decreasing order.
A standard tableau is stored by its row word ``(r_1, ..., r_n)``: the row that
holds each entry. Rows and columns are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from itertools import combinations

from .gf import FieldCtx

Partition = tuple[int, ...]


class NotExchangeable(ValueError):
    pass


class DegenerateParameter(ArithmeticError):
    pass


def partition(parts) -> Partition:
    parts = tuple(int(x) for x in parts)
    if not parts or any(x <= 0 for x in parts):
        raise ValueError(f"parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    return parts


def parse_partition(s: str) -> Partition:
    return partition(int(t) for t in s.replace("[", "").replace("]", "").split(",") if t.strip())


def format_partition(shape: Partition) -> str:
    return ",".join(map(str, shape))


def transpose(shape: Partition) -> Partition:
    return tuple(sum(1 for part in shape if part > j) for j in range(shape[0]))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return list(rec(n, n))


def is_hook(shape: Partition) -> bool:
    return all(part == 1 for part in shape[1:])


def non_hooks(n: int) -> list[Partition]:
    return [lam for lam in partitions_of(n) if not is_hook(lam)]


def hook_shape(n: int, r: int) -> Partition:
    """The hook [n - r, 1^r]."""
    return (n - r,) + (1,) * r


def diagonal_length(shape: Partition) -> int:
    return max(i for i, part in enumerate(shape, start=1) if part >= i)


def _comparable_pairs(shape: Partition) -> int:
    cells = [(i, j) for i, part in enumerate(shape) for j in range(part)]
    return sum(
        1 for a, b in combinations(cells, 2) if (a[0] <= b[0] and a[1] <= b[1]) or (b[0] <= a[0] and b[1] <= a[1])
    )


def shape_sign(shape: Partition) -> int:
    """w(T) w(T') for any standard T of this shape.

    Every pair k < l is an inversion of exactly one of T, T' unless the cell of
    l lies weakly south-east of the cell of k, so the product only depends on
    the number of comparable cell pairs.
    """
    n = sum(shape)
    return -1 if (n * (n - 1) // 2 - _comparable_pairs(shape)) % 2 else 1


def diag_and_nu(shape: Partition) -> tuple[int, int]:
    """Diagonal length b and the sign nu.

    For self-conjugate shapes nu is +1 exactly when (n - b)/2 is even. For
    other shapes that rule is meaningless (n - b can be odd) and nu is the
    tableau sign product :func:`shape_sign`, which is the quantity the duality
    operator consumes.
    """
    b = diagonal_length(shape)
    if shape != transpose(shape):
        return b, shape_sign(shape)
    n = sum(shape)
    return b, 1 if ((n - b) // 2) % 2 == 0 else -1


@dataclass(frozen=True, order=True)
class StdTableau:
    rows: tuple[int, ...]  # rows[k - 1] is the row of entry k
    shape: Partition

    @classmethod
    def from_rows(cls, filling) -> "StdTableau":
        """Build from a filling given as a list of rows of entries."""
        filling = [list(r) for r in filling]
        n = sum(len(r) for r in filling)
        if sorted(k for r in filling for k in r) != list(range(1, n + 1)) or any(
            a >= b for r in filling for a, b in zip(r, r[1:])
        ):
            raise ValueError(f"not a standard tableau: {filling}")
        word = [0] * n
        for i, row in enumerate(filling, start=1):
            for k in row:
                word[k - 1] = i
        t = cls(tuple(word), partition(len(r) for r in filling))
        if not t.is_standard():
            raise ValueError(f"not a standard tableau: {filling}")
        return t

    @classmethod
    def parse(cls, s: str) -> "StdTableau":
        return cls.from_rows([[int(x) for x in row.split(",")] for row in s.split("/")])

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def cols(self) -> tuple[int, ...]:
        seen: dict[int, int] = {}
        out = []
        for r in self.rows:
            seen[r] = seen.get(r, 0) + 1
            out.append(seen[r])
        return tuple(out)

    def pos(self, k: int) -> tuple[int, int]:
        """(row, column) of entry k."""
        return self.rows[k - 1], self.cols[k - 1]

    def filling(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.shape]
        for k, r in enumerate(self.rows, start=1):
            out[r - 1].append(k)
        return out

    def __str__(self) -> str:
        return "/".join(",".join(map(str, row)) for row in self.filling())

    def is_standard(self) -> bool:
        counts = [0] * (len(self.shape) + 1)
        for r in self.rows:
            if r < 1 or r > len(self.shape):
                return False
            counts[r] += 1
            if counts[r] > self.shape[r - 1] or (r > 1 and counts[r] > counts[r - 1]):
                return False
        return tuple(counts[1:]) == tuple(self.shape)

    def transpose(self) -> "StdTableau":
        return StdTableau(self.cols, transpose(self.shape))

    def exchangeable(self, r: int) -> bool:
        (i, j), (u, v) = self.pos(r), self.pos(r + 1)
        return i != u and j != v

    def swap(self, r: int) -> "StdTableau":
        """Interchange r and r + 1."""
        if not self.exchangeable(r):
            raise NotExchangeable(f"{r} and {r + 1} share a row or column in {self}")
        rows = list(self.rows)
        rows[r - 1], rows[r] = rows[r], rows[r - 1]
        return StdTableau(tuple(rows), self.shape)

    def content(self, k: int) -> int:
        """The exponent j - i of the cell (i, j) holding k."""
        i, j = self.pos(k)
        return j - i


@cache
def standard_tableaux(shape: Partition) -> tuple[StdTableau, ...]:
    """All standard tableaux of ``shape``, lexicographic in the row word.

    This order is the basis order of the irreducible module for ``shape``.
    """
    shape = partition(shape)
    n = sum(shape)
    out: list[StdTableau] = []
    counts = [0] * len(shape)
    word: list[int] = []

    def rec():
        if len(word) == n:
            out.append(StdTableau(tuple(word), shape))
            return
        for i in range(len(shape)):
            if counts[i] < shape[i] and (i == 0 or counts[i - 1] > counts[i]):
                counts[i] += 1
                word.append(i + 1)
                rec()
                word.pop()
                counts[i] -= 1

    rec()
    return tuple(out)


@cache
def tableau_index(shape: Partition) -> dict[StdTableau, int]:
    return {t: i for i, t in enumerate(standard_tableaux(shape))}


def hook_length_count(shape: Partition) -> int:
    """Number of standard tableaux by the hook length formula."""
    from math import factorial

    n = sum(shape)
    conj = transpose(shape)
    prod = 1
    for i, part in enumerate(shape):
        for j in range(part):
            prod *= (part - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


def w_sign(t: StdTableau) -> int:
    """(-1) to the number of pairs i < j with r_i > r_j."""
    inv = sum(1 for a in range(t.n) for b in range(a + 1, t.n) if t.rows[a] > t.rows[b])
    return -1 if inv % 2 else 1


def hook_subset(t: StdTableau) -> tuple[int, ...]:
    """For a hook-shaped tableau, the entries below the first row (sorted)."""
    if not is_hook(t.shape):
        raise ValueError(f"{t.shape} is not a hook")
    return tuple(k for k, r in enumerate(t.rows, start=1) if r > 1)


def hook_tableau(n: int, subset) -> StdTableau:
    """The hook tableau whose first column below the corner holds ``subset``."""
    subset = tuple(sorted(subset))
    if subset and (subset[0] < 2 or subset[-1] > n):
        raise ValueError(f"subset must lie in 2..{n}")
    rows = [1] * n
    for pos, k in enumerate(subset, start=2):
        rows[k - 1] = pos
    return StdTableau(tuple(rows), hook_shape(n, len(subset)))


def hermitian_weight(ctx: FieldCtx, t: StdTableau, alpha: int) -> int:
    """The diagonal weight d(T) of the unitary form.

    Product over inverted pairs i < j (row of i below row of j) of
    (a^{c_j - r_j} - a^{c_i - r_i + 1}) / (a^{c_j - r_j + 1} - a^{c_i - r_i}),
    with cell coordinates read in T after exchanging i and j, i.e. i and j
    take each other's cells. This is the reading under which d satisfies the
    swap ratio used to prove unitarity.
    """
    d = 1
    for i in range(1, t.n + 1):
        for j in range(i + 1, t.n + 1):
            if t.rows[i - 1] <= t.rows[j - 1]:
                continue
            # cells of i and j in the tableau with i, j exchanged
            ej = t.content(i)  # c(j) - r(j)
            ei = t.content(j)  # c(i) - r(i)
            num = ctx.sub(ctx.pow(alpha, ej), ctx.pow(alpha, ei + 1))
            den = ctx.sub(ctx.pow(alpha, ej + 1), ctx.pow(alpha, ei))
            if den == 0:
                raise DegenerateParameter(f"vanishing denominator in d({t})")
            d = ctx.mul(d, ctx.div(num, den))
    return d

