"""Dense linear algebra over F_q on integer-encoded numpy arrays."""

from __future__ import annotations

import numpy as np

from .gf import FieldCtx, conj


class LinAlgError(ArithmeticError):
    pass


class Singular(LinAlgError):
    pass


class DimensionMismatch(LinAlgError):
    pass


def asmat(x) -> np.ndarray:
    return np.asarray(x, dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def scalar(ctx: FieldCtx, c: int, n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64) * int(c)


def matmul(ctx: FieldCtx, a, b) -> np.ndarray:
    """Matrix product; ``a`` may carry leading batch dimensions."""
    a, b = asmat(a), asmat(b)
    if a.shape[-1] != b.shape[-2 if b.ndim > 1 else 0]:
        raise DimensionMismatch(f"{a.shape} @ {b.shape}")
    if b.ndim == 1:
        return ctx.sum(ctx.mul(a, b), axis=-1)
    prod = ctx.mul(a[..., :, :, None], b[..., None, :, :])
    return ctx.sum(prod, axis=-2)


def matprod(ctx: FieldCtx, mats, n: int | None = None) -> np.ndarray:
    mats = list(mats)
    if not mats:
        if n is None:
            raise ValueError("empty product needs a dimension")
        return identity(n)
    out = asmat(mats[0])
    for m in mats[1:]:
        out = matmul(ctx, out, m)
    return out


def madd(ctx: FieldCtx, a, b) -> np.ndarray:
    return asmat(ctx.add(asmat(a), asmat(b)))


def msub(ctx: FieldCtx, a, b) -> np.ndarray:
    return asmat(ctx.sub(asmat(a), asmat(b)))


def mscale(ctx: FieldCtx, c: int, a) -> np.ndarray:
    return asmat(ctx.mul(int(c), asmat(a)))


def mconj(ctx: FieldCtx, a) -> np.ndarray:
    return asmat(conj(ctx, asmat(a)))


def trace(ctx: FieldCtx, a) -> int:
    return int(ctx.sum(np.diagonal(asmat(a))))


def is_zero(a) -> bool:
    return not np.any(asmat(a))


def rref(ctx: FieldCtx, a) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = asmat(a).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = ctx.mul(ctx.inv(int(m[r, c])), m[r])
        factors = m[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            m[hit] = ctx.sub(m[hit], ctx.mul(factors[hit, None], m[r][None, :]))
        pivots.append(c)
        r += 1
    return m, pivots


def rank(ctx: FieldCtx, a) -> int:
    return len(rref(ctx, a)[1])


def nullspace(ctx: FieldCtx, a) -> np.ndarray:
    """Basis of {v : a v = 0} as the rows of the returned array."""
    a = asmat(a)
    cols = a.shape[1]
    red, pivots = rref(ctx, a)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = ctx.neg(int(red[r, f]))
    return basis


def inv(ctx: FieldCtx, a) -> np.ndarray:
    a = asmat(a)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionMismatch(f"inverse of non-square {a.shape}")
    red, pivots = rref(ctx, np.hstack([a, identity(n)]))
    if pivots[:n] != list(range(n)):
        raise Singular("matrix is singular")
    return red[:, n:].copy()


def det(ctx: FieldCtx, a) -> int:
    m = asmat(a).copy()
    n = m.shape[0]
    d = 1
    for c in range(n):
        nz = np.nonzero(m[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
            d = ctx.neg(d)
        pv = int(m[c, c])
        d = ctx.mul(d, pv)
        if c + 1 < n:
            f = ctx.mul(m[c + 1 :, c], ctx.inv(pv))
            m[c + 1 :] = ctx.sub(m[c + 1 :], ctx.mul(f[:, None], m[c][None, :]))
    return int(d)


def kron(ctx: FieldCtx, a, b) -> np.ndarray:
    a, b = asmat(a), asmat(b)
    out = ctx.mul(a[:, None, :, None], b[None, :, None, :])
    return asmat(out).reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])


def block_diag(*mats) -> np.ndarray:
    n = sum(m.shape[0] for m in mats)
    out = np.zeros((n, n), dtype=np.int64)
    i = 0
    for m in mats:
        d = m.shape[0]
        out[i : i + d, i : i + d] = m
        i += d
    return out


class EchelonSpace:
    """Incrementally grown subspace of F_q^d kept in reduced row echelon form."""

    def __init__(self, ctx: FieldCtx, dim: int):
        self.ctx = ctx
        self.dim = dim
        self.rows = np.zeros((0, dim), dtype=np.int64)
        self.pivots: list[int] = []

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, v) -> np.ndarray:
        v = asmat(v).ravel()
        if not self.pivots:
            return v.copy()
        ctx = self.ctx
        coef = v[self.pivots]
        sub = ctx.sum(ctx.mul(coef[:, None], self.rows), axis=0)
        return asmat(ctx.sub(v, sub))

    def add(self, v) -> bool:
        """Insert ``v``; returns False when it already lies in the span."""
        ctx = self.ctx
        r = self.reduce(v)
        nz = np.nonzero(r)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        r = asmat(ctx.mul(ctx.inv(int(r[c])), r))
        if self.pivots:
            f = self.rows[:, c].copy()
            hit = np.nonzero(f)[0]
            if hit.size:
                self.rows[hit] = ctx.sub(self.rows[hit], ctx.mul(f[hit, None], r[None, :]))
        self.rows = np.vstack([self.rows, r[None, :]])
        self.pivots.append(c)
        return True
