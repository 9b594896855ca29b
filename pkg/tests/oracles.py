"""Slow, independent reference implementations used to freeze expected values.

Nothing here imports the package's arithmetic: fields are rebuilt from
polynomial multiplication, determinants from the Leibniz expansion, groups
from exhaustive enumeration.
"""

from __future__ import annotations

from itertools import permutations, product


class PolyField:
    """F_{p^k} as coefficient tuples (c0, ..., c_{k-1}) modulo a monic polynomial."""

    def __init__(self, p: int, modulus):
        self.p = p
        self.mod = list(modulus)  # c0..ck, monic
        self.k = len(self.mod) - 1
        self.q = p**self.k

    def vec(self, x: int) -> list[int]:
        return [(x // self.p**i) % self.p for i in range(self.k)]

    def enc(self, v) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(v))

    def add(self, x: int, y: int) -> int:
        return self.enc(a + b for a, b in zip(self.vec(x), self.vec(y)))

    def neg(self, x: int) -> int:
        return self.enc(-a for a in self.vec(x))

    def mul(self, x: int, y: int) -> int:
        a, b = self.vec(x), self.vec(y)
        prod = [0] * (2 * self.k - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
        for deg in range(len(prod) - 1, self.k - 1, -1):
            c = prod[deg] % self.p
            if c:
                for i, m in enumerate(self.mod):
                    prod[deg - self.k + i] -= c * m
        return self.enc(prod[: self.k])

    def pow(self, x: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul(out, x)
        return out

    def order(self, x: int) -> int:
        y, n = x, 1
        while y != 1:
            y, n = self.mul(y, x), n + 1
        return n

    def inv(self, x: int) -> int:
        return next(y for y in range(1, self.q) if self.mul(x, y) == 1)


def irreducible_brute(p: int, mod) -> bool:
    """No root-free factorization check: a degree <= 3 polynomial is
    irreducible iff it has no root; for larger degree compare against all
    products of lower-degree monic polynomials."""
    k = len(mod) - 1
    if k == 1:
        return True
    if k <= 3:
        return all(sum(c * x**i for i, c in enumerate(mod)) % p for x in range(p))
    target = tuple(c % p for c in mod)
    for d in range(1, k // 2 + 1):
        for a in product(range(p), repeat=d):
            for b in product(range(p), repeat=k - d):
                fa, fb = list(a) + [1], list(b) + [1]
                prod_ = [0] * (k + 1)
                for i, x in enumerate(fa):
                    for j, y in enumerate(fb):
                        prod_[i + j] += x * y
                if tuple(c % p for c in prod_) == target:
                    return False
    return True


def det_leibniz(F: PolyField, m) -> int:
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = F.mul(term, int(m[i][perm[i]]))
        if inversions % 2:
            term = F.neg(term)
        total = F.add(total, term)
    return total


def matmul_brute(F: PolyField, a, b):
    n, m, r = len(a), len(b), len(b[0])
    out = [[0] * r for _ in range(n)]
    for i in range(n):
        for j in range(r):
            s = 0
            for k in range(m):
                s = F.add(s, F.mul(int(a[i][k]), int(b[k][j])))
            out[i][j] = s
    return out


def closure_brute(F: PolyField, gens) -> int:
    """Group order by naive breadth-first search on tuple-keyed matrices."""
    n = len(gens[0])
    eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {eye}
    todo = [eye]
    while todo:
        nxt = []
        for a in todo:
            for g in gens:
                b = tuple(tuple(r) for r in matmul_brute(F, a, g))
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        todo = nxt
    return len(seen)


def standard_tableaux_brute(shape) -> list[tuple[int, ...]]:
    """Row words of all standard fillings, by filtering all arrangements."""
    n = sum(shape)
    cells = [(i, j) for i, part in enumerate(shape) for j in range(part)]
    out = set()
    for perm in permutations(range(1, n + 1)):
        fill = dict(zip(cells, perm))
        if all(
            (j + 1 >= shape[i] or fill[(i, j)] < fill[(i, j + 1)])
            and (i + 1 >= len(shape) or j >= shape[i + 1] or fill[(i, j)] < fill[(i + 1, j)])
            for i, j in cells
        ):
            word = [0] * n
            for (i, _), v in fill.items():
                word[v - 1] = i + 1
            out.add(tuple(word))
    return sorted(out)
