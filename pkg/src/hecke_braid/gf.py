"""Finite fields F_q = F_p[x]/(f) with table-driven arithmetic.

Elements are plain integers in ``[0, q)``: the coefficient vector
``(c0, c1, ..., c_{k-1})`` of a residue class is stored as ``sum(c_i * p**i)``.
Integer comparison on this encoding is the fixed total order used whenever a
"smallest" element is requested, so the class of ``X`` (encoded as ``p``) comes
before ``X**2`` (encoded as ``p**2``).

Every arithmetic method accepts Python ints or integer numpy arrays and works
elementwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

# Full q x q addition/multiplication tables are built up to this size.
TABLE_LIMIT = 2048
# Hard ceiling for field sizes handled at all (q - 1 is factored by trial division).
MAX_Q = 1 << 20


class FieldError(ValueError):
    pass


class NotPrime(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class DegreeMismatch(FieldError):
    pass


class ZeroElement(FieldError):
    pass


class NoSuchOrder(FieldError):
    pass


class ConjUndefined(FieldError):
    pass


class ContextMismatch(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization ``{prime: exponent}``."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# -- polynomial helpers over F_p (coefficient lists, low degree first) --------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _poly_trim([c % p for c in a])
    m = _poly_trim(list(m))
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _poly_trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_mod(prod, m, p)


def _poly_powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _poly_trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(modulus: list[int] | tuple[int, ...], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    f = _poly_trim([c % p for c in modulus])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    # x^(p^k) == x mod f
    xp = x
    for _ in range(k):
        xp = _poly_powmod(xp, p, f, p)
    if _poly_sub(xp, x, p):
        return False
    for r in factorize(k):
        xr = x
        for _ in range(k // r):
            xr = _poly_powmod(xr, p, f, p)
        g = _poly_gcd(f, _poly_sub(xr, x, p), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``k`` under the integer encoding of its
    low coefficients (high-degree coefficients are most significant)."""
    for idx in range(p**k):
        low = [(idx // p**i) % p for i in range(k)]
        cand = tuple(low + [1])
        if is_irreducible(cand, p):
            return cand
    raise ReducibleModulus(f"no irreducible of degree {k} over F_{p}")  # unreachable


# -- the field context --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """An explicit finite field F_p[x]/(modulus).

    Build with :func:`make_field`; the constructor does not validate.
    """

    p: int
    k: int
    modulus: tuple[int, ...]
    q: int = field(init=False)
    order_factors: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.k)
        object.__setattr__(self, "order_factors", tuple(sorted(factorize(self.q - 1))))
        self._build_tables()

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        pw = np.array([p**i for i in range(k)], dtype=np.int64)
        object.__setattr__(self, "_pw", pw)
        # Find a primitive element using polynomial arithmetic, then exp/log tables.
        f = list(self.modulus)
        gen = None
        for idx in range(1, q):
            poly = [(idx // p**i) % p for i in range(k)]
            if all(
                _poly_trim(_poly_powmod(poly, (q - 1) // r, f, p)) != [1]
                for r in self.order_factors
            ):
                gen = poly
                break
        if q == 2:
            gen = [1]
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        cur = [1]
        for e in range(q - 1):
            c = cur + [0] * (k - len(cur))
            exp[e] = sum(c[i] * p**i for i in range(k))
            cur = _poly_mulmod(cur, gen, f, p)
        exp[q - 1 :] = exp[: q - 1]
        log = np.full(q, -1, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)
        object.__setattr__(self, "primitive", int(exp[1]) if q > 2 else 1)

        allx = np.arange(q, dtype=np.int64)
        digits = (allx[:, None] // pw[None, :]) % p
        neg = ((-digits) % p) @ pw
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (q - 1)]
        object.__setattr__(self, "_neg", neg)
        object.__setattr__(self, "_inv", inv)
        if q <= TABLE_LIMIT:
            dt = np.int16 if q <= 1 << 15 else np.int32
            add = ((digits[:, None, :] + digits[None, :, :]) % p) @ pw
            la, lb = np.meshgrid(log, log, indexing="ij")
            mul = exp[(la + lb) % (q - 1)]
            mul[0, :] = 0
            mul[:, 0] = 0
            object.__setattr__(self, "add_table", add.astype(dt))
            object.__setattr__(self, "mul_table", mul.astype(dt))
        else:
            object.__setattr__(self, "add_table", None)
            object.__setattr__(self, "mul_table", None)

    # -- scalar/array arithmetic --

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def check(self, x) -> None:
        """Reject values that are not elements of this field."""
        a = np.asarray(x)
        if a.size and (a.min() < 0 or a.max() >= self.q):
            raise ContextMismatch(f"value outside F_{self.q}")

    def _out(self, r, x, y=None):
        if np.ndim(x) == 0 and (y is None or np.ndim(y) == 0):
            return int(r)
        return np.asarray(r, dtype=np.int64)

    def add(self, x, y):
        if self.add_table is not None:
            return self._out(self.add_table[x, y], x, y)
        xd = (np.asarray(x)[..., None] // self._pw) % self.p
        yd = (np.asarray(y)[..., None] // self._pw) % self.p
        return self._out(((xd + yd) % self.p) @ self._pw, x, y)

    def neg(self, x):
        return self._out(self._neg[x], x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if self.mul_table is not None:
            return self._out(self.mul_table[x, y], x, y)
        x_, y_ = np.asarray(x), np.asarray(y)
        r = self._exp[(self._log[x_] + self._log[y_]) % (self.q - 1)]
        r = np.where((x_ == 0) | (y_ == 0), 0, r)
        return self._out(r, x, y)

    def inv(self, x):
        if np.any(np.asarray(x) == 0):
            raise ZeroElement("inverse of zero")
        return self._out(self._inv[x], x)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, e: int):
        x_ = np.asarray(x)
        if e == 0:
            return self._out(np.ones_like(x_), x)
        if e < 0 and np.any(x_ == 0):
            raise ZeroElement("negative power of zero")
        r = self._exp[(self._log[x_] * (e % (self.q - 1))) % (self.q - 1)]
        r = np.where(x_ == 0, 0, r)
        return self._out(r, x)

    def sum(self, x, axis=None):
        """Field sum along ``axis`` (all entries when ``None``)."""
        a = np.asarray(x, dtype=np.int64)
        if self.p == 2:
            r = np.bitwise_xor.reduce(a, axis=axis)
        elif self.k == 1:
            r = a.sum(axis=axis) % self.p
        else:
            digits = (a[..., None] // self._pw) % self.p
            ax = axis if axis is None or axis >= 0 else axis - 1
            if axis is None:
                s = digits.reshape(-1, self.k).sum(axis=0)
            else:
                s = digits.sum(axis=ax)
            r = (s % self.p) @ self._pw
        return int(r) if np.ndim(r) == 0 else np.asarray(r, dtype=np.int64)

    def from_int(self, n: int) -> int:
        """Image of an integer under Z -> F_p -> F_q."""
        return n % self.p

    def log(self, x) -> int:
        if x == 0:
            raise ZeroElement("log of zero")
        return int(self._log[x])

    def exp(self, e: int) -> int:
        return int(self._exp[e % (self.q - 1)])

    # -- coefficient vectors and serialization --

    def coeffs(self, x: int) -> tuple[int, ...]:
        return tuple((x // self.p**i) % self.p for i in range(self.k))

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise DegreeMismatch(f"expected at most {self.k} coefficients")
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def format(self, x: int) -> str:
        return ",".join(str(c) for c in self.coeffs(int(x)))

    def parse(self, s: str) -> int:
        return self.from_coeffs(int(t) for t in s.split(","))

    def spec_string(self) -> str:
        return f"p={self.p},k={self.k},mod={','.join(map(str, self.modulus))}"

    # -- structure --

    @cached_property
    def sqrt_q(self) -> int:
        if self.k % 2:
            raise ConjUndefined(f"F_{self.q} has odd degree {self.k}")
        return self.p ** (self.k // 2)

    def elements(self) -> range:
        return range(self.q)


def make_field(p: int, k: int = 1, modulus=None) -> FieldCtx:
    """Build F_{p^k}. ``modulus=None`` (or ``"AUTO"``) picks the smallest irreducible."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise DegreeMismatch("degree must be >= 1")
    if p**k > MAX_Q:
        raise FieldError(f"q = {p}^{k} exceeds the supported size {MAX_Q}")
    if modulus is None or modulus == "AUTO":
        mod = smallest_irreducible(p, k)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != k + 1:
            raise DegreeMismatch(f"modulus must have {k + 1} coefficients, got {len(mod)}")
        if mod[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"{mod} is reducible over F_{p}")
    return FieldCtx(p, k, mod)


def parse_field_spec(spec: str) -> FieldCtx:
    """Parse ``p=<int>,k=<int>,mod=<c0,...,ck>`` (``mod=AUTO`` allowed)."""
    head, _, mod = spec.partition("mod=")
    parts = dict(kv.split("=") for kv in head.strip(",").split(",") if kv)
    try:
        p, k = int(parts["p"]), int(parts["k"])
    except (KeyError, ValueError) as exc:
        raise FieldError(f"malformed field spec {spec!r}") from exc
    mod = mod.strip()
    if not mod or mod.upper() == "AUTO":
        return make_field(p, k)
    return make_field(p, k, [int(c) for c in mod.split(",")])


# -- operations on elements ---------------------------------------------------


def element_order(ctx: FieldCtx, x: int) -> int:
    """Multiplicative order, stripping prime factors of q - 1."""
    if x == 0:
        raise ZeroElement("zero has no multiplicative order")
    order = ctx.q - 1
    for r in ctx.order_factors:
        while order % r == 0 and ctx.pow(x, order // r) == 1:
            order //= r
    return order


def find_element_of_order(ctx: FieldCtx, m: int) -> int:
    """Smallest element (integer encoding) of multiplicative order exactly ``m``."""
    if m < 1 or (ctx.q - 1) % m:
        raise NoSuchOrder(f"no element of order {m} in F_{ctx.q}")
    logs = ctx._log[1:]
    orders = (ctx.q - 1) // np.gcd(logs, ctx.q - 1)
    hits = np.nonzero(orders == m)[0]
    return int(hits[0]) + 1


def frobenius(ctx: FieldCtx, x, i: int = 1):
    """x -> x^(p^i)."""
    return ctx.pow(x, ctx.p ** (i % ctx.k))


def conj(ctx: FieldCtx, x):
    """The involution x -> x^sqrt(q); only for even degree."""
    return ctx.pow(x, ctx.sqrt_q)


def subfield_degree_of(ctx: FieldCtx, elems) -> int:
    """Smallest d | k such that every element lies in F_{p^d}."""
    arr = np.unique(np.asarray(list(elems) if not isinstance(elems, np.ndarray) else elems,
                               dtype=np.int64).ravel())
    for d in divisors(ctx.k):
        if d == ctx.k or np.array_equal(frobenius(ctx, arr, d), arr):
            return d
    return ctx.k


def subfield_elements(ctx: FieldCtx, d: int) -> np.ndarray:
    """All elements of the subfield F_{p^d}, ascending."""
    allx = np.arange(ctx.q)
    return allx[frobenius(ctx, allx, d) == allx]


def norm_solutions(ctx: FieldCtx, c: int) -> list[int]:
    """All y with y * conj(y) == c, by exhaustive search."""
    ys = np.arange(1, ctx.q)
    vals = ctx.mul(ys, conj(ctx, ys))
    return [int(y) for y in ys[vals == c]]
