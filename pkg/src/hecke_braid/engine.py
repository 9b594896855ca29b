"""Breadth-first closure of finitely generated matrix groups over F_q.

Frontiers are multiplied in batches through the field tables. When a matrix
fits in 64 bits (N^2 * ceil(log2 q) <= 64) it is packed into a uint64 key and
the visited set is a sorted key array merged once per level; otherwise each
matrix is keyed by its bytes in a hash set.
"""

from __future__ import annotations

import enum
import json
import logging
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import linalg as la
from .gf import FieldCtx

log = logging.getLogger(__name__)

DEFAULT_CAP = 20_000_000
CHUNK = 250_000


class SingularGenerator(ArithmeticError):
    pass


class Verdict(str, enum.Enum):
    MATCH = "Match"
    MISMATCH = "Mismatch"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class ClosureStats:
    levels: int = 0
    max_frontier: int = 0
    seconds: float = 0.0
    key_path: str = "packed"


@dataclass
class ClosureResult:
    status: str  # "Complete" or "CapExceeded"
    order: int  # exact when Complete, a lower bound otherwise
    cap: int
    stats: ClosureStats = field(default_factory=ClosureStats)

    @property
    def complete(self) -> bool:
        return self.status == "Complete"

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ClosureResult":
        d = json.loads(text)
        return cls(d["status"], d["order"], d["cap"], ClosureStats(**d["stats"]))


def _batch_right_mul(ctx: FieldCtx, frontier: np.ndarray, g: np.ndarray) -> np.ndarray:
    """frontier @ g for a (F, N, N) batch, by table lookups."""
    n = g.shape[0]
    mul, add = ctx.mul_table, ctx.add_table
    out = np.empty_like(frontier)
    for j in range(n):
        acc = mul[frontier[:, :, 0], g[0, j]]
        for k in range(1, n):
            acc = add[acc, mul[frontier[:, :, k], g[k, j]]]
        out[:, :, j] = acc
    return out


def _bits(q: int) -> int:
    return max(1, (q - 1).bit_length())


def _pack(batch: np.ndarray, bits: int) -> np.ndarray:
    flat = batch.reshape(batch.shape[0], -1).astype(np.uint64)
    keys = np.zeros(batch.shape[0], dtype=np.uint64)
    for pos in range(flat.shape[1]):
        keys |= flat[:, pos] << np.uint64(bits * pos)
    return keys


def _validate(ctx: FieldCtx, gens) -> list[np.ndarray]:
    gens = [la.asmat(g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    shapes = {g.shape for g in gens}
    if len(shapes) != 1 or any(len(s) != 2 or s[0] != s[1] for s in shapes):
        raise la.DimensionMismatch(f"generator shapes {sorted(shapes)}")
    for g in gens:
        if np.any((g < 0) | (g >= ctx.q)):
            raise ValueError(f"entries outside F_{ctx.q}")
        if la.det(ctx, g) == 0:
            raise SingularGenerator("generator is singular")
    if ctx.mul_table is None:
        raise ValueError(f"closure needs field tables; F_{ctx.q} is too large")
    return gens


def bfs_closure(ctx: FieldCtx, gens, cap: int = DEFAULT_CAP, key_path: str | None = None) -> ClosureResult:
    """Order of <gens> by breadth-first search from the identity.

    Stops with ``CapExceeded`` once more than ``cap`` elements are known;
    ``order`` then reports how many were seen.
    """
    gens = _validate(ctx, gens)
    n = gens[0].shape[0]
    bits = _bits(ctx.q)
    if key_path is None:
        key_path = "packed" if n * n * bits <= 64 else "bytes"
    dt = ctx.mul_table.dtype
    gens_t = [g.astype(np.intp) for g in gens]
    start = np.eye(n, dtype=dt)[None]
    stats = ClosureStats(key_path=key_path)
    t0 = time.perf_counter()

    if key_path == "packed":
        visited = _pack(start, bits)
        count = 1
    else:
        seen = {start[0].tobytes()}
        count = 1
    frontier = start
    while frontier.shape[0]:
        stats.levels += 1
        stats.max_frontier = max(stats.max_frontier, frontier.shape[0])
        new_parts = []
        if key_path == "packed":
            keys_parts = []
            for lo in range(0, frontier.shape[0], CHUNK):
                chunk = frontier[lo : lo + CHUNK]
                for g in gens_t:
                    prod = _batch_right_mul(ctx, chunk, g)
                    keys = _pack(prod, bits)
                    keys, idx = np.unique(keys, return_index=True)
                    pos = np.searchsorted(visited, keys)
                    pos[pos == visited.size] = 0
                    fresh = visited[pos] != keys
                    keys_parts.append(keys[fresh])
                    new_parts.append(prod[idx[fresh]])
            if keys_parts:
                keys = np.concatenate(keys_parts)
                prods = np.concatenate(new_parts)
                keys, idx = np.unique(keys, return_index=True)
                frontier = prods[idx]
                visited = np.concatenate([visited, keys])
                visited.sort(kind="stable")
                count = visited.size
        else:
            for lo in range(0, frontier.shape[0], CHUNK):
                chunk = frontier[lo : lo + CHUNK]
                for g in gens_t:
                    prod = _batch_right_mul(ctx, chunk, g)
                    keep = []
                    for i in range(prod.shape[0]):
                        key = prod[i].tobytes()
                        if key not in seen:
                            seen.add(key)
                            keep.append(i)
                    if keep:
                        new_parts.append(prod[keep])
            frontier = np.concatenate(new_parts) if new_parts else start[:0]
            count = len(seen)
        log.info("level %d: visited %d, frontier %d", stats.levels, count, frontier.shape[0])
        if count > cap:
            stats.seconds = time.perf_counter() - t0
            return ClosureResult("CapExceeded", count, cap, stats)
    stats.seconds = time.perf_counter() - t0
    return ClosureResult("Complete", count, cap, stats)


def matrix_order(ctx: FieldCtx, m, limit: int = 10_000_000) -> int:
    """Multiplicative order of an invertible matrix by repeated multiplication."""
    m = la.asmat(m)
    if la.det(ctx, m) == 0:
        raise SingularGenerator("singular matrix has no order")
    eye = la.identity(m.shape[0])
    cur = m
    for k in range(1, limit + 1):
        if np.array_equal(cur, eye):
            return k
        cur = la.matmul(ctx, cur, m)
    raise RuntimeError(f"order exceeds {limit}")


def _order_of(predicted) -> int:
    return int(getattr(predicted, "order", predicted))


def lagrange_consistent(closure: ClosureResult, predicted) -> bool:
    """A complete closure inside the predicted group must divide its order."""
    return not closure.complete or _order_of(predicted) % closure.order == 0


def certify_order(closure: ClosureResult, predicted) -> Verdict:
    """Match iff the closure is complete with exactly the predicted order.

    ``predicted`` is a PredictedGroup or a bare integer order.
    """
    if not closure.complete:
        return Verdict.INCONCLUSIVE
    if not lagrange_consistent(closure, predicted):
        log.warning("closure order %d does not divide %d", closure.order, _order_of(predicted))
    return Verdict.MATCH if closure.order == _order_of(predicted) else Verdict.MISMATCH
