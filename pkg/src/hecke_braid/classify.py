"""Recognition layer: invariant forms, Witt index, trace fields, absolute
irreducibility, the predicted classical groups and their orders, and Galois
descent of unitary-and-bilinear groups to the half field.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from . import linalg as la
from .gf import (
    ConjUndefined,
    FieldCtx,
    conj,
    element_order,
    norm_solutions,
    subfield_degree_of,
)
from .hecke import HeckeRep
from .young import Partition, diag_and_nu, hook_shape, is_hook, partition, standard_tableaux, transpose

EXCLUDED_ORDERS = frozenset({2, 3, 4, 5, 6, 10})


class InadmissibleParameter(ValueError):
    pass


class HookNotLambdaZero(ValueError):
    pass


class UnsupportedFamily(ValueError):
    pass


class EvenCharacteristic(ValueError):
    pass


class Degenerate(ArithmeticError):
    pass


class NotIrreducible(ArithmeticError):
    pass


class NormEquationFailure(ArithmeticError):
    pass


class MaxRandomRetriesExceeded(RuntimeError):
    pass


# -- invariant forms -----------------------------------------------------------


def classify_symmetry(ctx: FieldCtx, gram) -> str:
    """``symmetric``, ``alternating`` or ``neither`` (``alternating`` wins in char 2)."""
    w = la.asmat(gram)
    zero_diag = not np.any(np.diagonal(w))
    if np.array_equal(w, w.T):
        return "alternating" if ctx.p == 2 and zero_diag else "symmetric"
    if zero_diag and np.array_equal(la.asmat(ctx.neg(w.T)), w):
        return "alternating"
    return "neither"


def is_hermitian(ctx: FieldCtx, gram) -> bool:
    w = la.asmat(gram)
    return np.array_equal(la.mconj(ctx, w).T, w)


@dataclass(frozen=True, eq=False)
class FormSolution:
    kind: str  # "bilinear" or "sesquilinear"
    c: int
    basis: list[np.ndarray]
    symmetry: list[str]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def overall_symmetry(self) -> str:
        kinds = set(self.symmetry)
        if not kinds:
            return "none"
        return kinds.pop() if len(kinds) == 1 else "mixed"


def _check_square(gens) -> int:
    gens = [la.asmat(g) for g in gens]
    dims = {g.shape for g in gens}
    if len(dims) != 1:
        raise la.DimensionMismatch(f"generators of different shapes: {sorted(dims)}")
    n, m = dims.pop()
    if n != m:
        raise la.DimensionMismatch("generators must be square")
    return n


def _solve_forms(ctx: FieldCtx, gens, c: int, left) -> list[np.ndarray]:
    n = _check_square(gens)
    cI = la.scalar(ctx, c, n * n)
    blocks = [la.msub(ctx, la.kron(ctx, left(la.asmat(g)).T, la.asmat(g).T), cI) for g in gens]
    basis = la.nullspace(ctx, np.vstack(blocks))
    return [row.reshape(n, n) for row in basis]


def invariant_bilinear_space(ctx: FieldCtx, gens, c: int = 1) -> FormSolution:
    """Basis of {W : g^t W g = c W for every g in gens}."""
    basis = _solve_forms(ctx, gens, c, lambda g: g)
    return FormSolution("bilinear", c, basis, [classify_symmetry(ctx, w) for w in basis])


def invariant_sesquilinear_space(ctx: FieldCtx, gens, c: int = 1) -> FormSolution:
    """Basis of {D : conj(g)^t D g = c D}, returned as hermitian matrices when
    the space is stable under D -> conj(D)^t (always the case for c = 1)."""
    if ctx.k % 2:
        raise ConjUndefined(f"no conjugation on F_{ctx.q}")
    raw = _solve_forms(ctx, gens, c, lambda g: la.mconj(ctx, g))
    if not raw:
        return FormSolution("sesquilinear", c, [], [])
    n = raw[0].shape[0]
    space = la.EchelonSpace(ctx, n * n)
    herm: list[np.ndarray] = []
    # mu D + conj(mu D)^t is hermitian; two mu's with distinct conjugates span D
    thetas = [1, ctx.primitive]
    for d in raw:
        for theta in thetas:
            td = la.mscale(ctx, theta, d)
            h = la.madd(ctx, td, la.mconj(ctx, td).T)
            if not la.is_zero(h) and space.add(h.ravel()):
                herm.append(h)
    if len(herm) == len(raw):
        return FormSolution("sesquilinear", c, herm, ["hermitian"] * len(herm))
    return FormSolution(
        "sesquilinear", c, raw, ["hermitian" if is_hermitian(ctx, d) else "neither" for d in raw]
    )


# -- Witt index ------------------------------------------------------------------


def _quad_values(ctx: FieldCtx, gram: np.ndarray, vecs: np.ndarray) -> np.ndarray:
    gv = la.matmul(ctx, vecs, gram)  # rows v^t G
    return la.asmat(ctx.sum(ctx.mul(gv, vecs), axis=-1))


def _find_isotropic(ctx: FieldCtx, gram: np.ndarray) -> np.ndarray | None:
    m = gram.shape[0]
    if m <= 1:
        return None
    span = min(m, 3)
    pts = np.array(np.meshgrid(*[np.arange(ctx.q)] * span, indexing="ij")).reshape(span, -1).T[1:]
    vals = _quad_values(ctx, gram[:span, :span], pts)
    hit = np.nonzero(vals == 0)[0]
    if hit.size == 0:
        return None
    v = np.zeros(m, dtype=np.int64)
    v[:span] = pts[hit[0]]
    return v


def witt_index(ctx: FieldCtx, gram) -> int:
    """Witt index of a nondegenerate symmetric form (odd characteristic),
    by splitting off hyperbolic planes around isotropic vectors."""
    if ctx.p == 2:
        raise EvenCharacteristic("orthogonal geometry in characteristic 2 is not supported")
    g = la.asmat(gram)
    if not np.array_equal(g, g.T):
        raise ValueError("gram matrix is not symmetric")
    if la.rank(ctx, g) != g.shape[0]:
        raise Degenerate("form is degenerate")
    half = ctx.inv(2)
    index = 0
    while True:
        v = _find_isotropic(ctx, g)
        if v is None:
            return index
        m = g.shape[0]
        gv = la.matmul(ctx, g, v)
        j = int(np.nonzero(gv)[0][0])
        w = np.zeros(m, dtype=np.int64)
        w[j] = ctx.inv(int(gv[j]))
        qw = int(_quad_values(ctx, g, w[None, :])[0])
        w = la.msub(ctx, w, la.mscale(ctx, ctx.mul(qw, half), v))
        gw = la.matmul(ctx, g, w)
        comp = la.nullspace(ctx, np.vstack([gv, gw]))
        index += 1
        if comp.shape[0] == 0:
            return index
        g = la.matprod(ctx, [comp, g, comp.T])


def is_square(ctx: FieldCtx, x: int) -> bool:
    return x != 0 and ctx.log(x) % 2 == 0 if ctx.p != 2 else True


def witt_index_by_discriminant(ctx: FieldCtx, gram) -> int:
    """Closed-form Witt index from dimension and discriminant (q odd)."""
    g = la.asmat(gram)
    m = g.shape[0]
    if m % 2:
        return (m - 1) // 2
    disc = ctx.mul(la.det(ctx, g), ctx.from_int((-1) ** (m // 2)))
    return m // 2 if is_square(ctx, disc) else m // 2 - 1


# -- irreducibility and traces -------------------------------------------------


def burnside_span_dim(ctx: FieldCtx, gens) -> int:
    """Dimension of the matrix algebra generated by ``gens`` (with identity)."""
    gens = [la.asmat(g) for g in gens]
    n = _check_square(gens) if gens else 0
    if not gens:
        return 1
    space = la.EchelonSpace(ctx, n * n)
    start = la.identity(n)
    space.add(start.ravel())
    queue = deque([start])
    while queue and len(space) < n * n:
        a = queue.popleft()
        for g in gens:
            b = la.matmul(ctx, g, a)
            if space.add(b.ravel()):
                queue.append(b)
    return len(space)


def trace_field_degree(
    ctx: FieldCtx,
    gens,
    sampler=None,
    budget: int = 10_000,
    samples: int = 1000,
    seed: int = 0,
    max_word: int = 24,
) -> int:
    """Degree over F_p of the field generated by traces of group elements.

    Inspects the first ``budget`` elements of the breadth-first closure of
    ``gens`` plus ``samples`` random products (drawn by ``sampler(rng)`` when
    given, else random words in the generators and their inverses). A lower
    bound by nature, nondecreasing in ``budget``.
    """
    gens = [la.asmat(g) for g in gens]
    if not gens:
        return 1
    n = _check_square(gens)
    traces = {la.trace(ctx, la.identity(n))}
    seen = {la.identity(n).tobytes()}
    queue = deque([la.identity(n)])
    while queue and len(seen) < budget:
        a = queue.popleft()
        for g in gens:
            b = la.matmul(ctx, a, g)
            key = b.tobytes()
            if key not in seen:
                seen.add(key)
                traces.add(la.trace(ctx, b))
                queue.append(b)
                if len(seen) >= budget:
                    break
    rng = np.random.default_rng(seed)
    pool = gens + [la.inv(ctx, g) for g in gens]
    for _ in range(samples):
        if sampler is not None:
            m = sampler(rng)
        else:
            length = int(rng.integers(1, max_word + 1))
            m = la.matprod(ctx, [pool[i] for i in rng.integers(0, len(pool), length)])
        traces.add(la.trace(ctx, m))
    return subfield_degree_of(ctx, sorted(traces))


# -- predictions -----------------------------------------------------------------


def group_order(family: str, dim: int, field_size: int) -> int:
    """Order of SL, SU, SP or OMEGA_PLUS in dimension ``dim``.

    ``field_size`` is the q in the usual notation: SU_N(q) is defined over F_q
    with q a square.
    """
    N, q = dim, field_size
    if family == "SL":
        out = q ** (N * (N - 1) // 2)
        for i in range(2, N + 1):
            out *= q**i - 1
        return out
    if family == "SU":
        u = round(q**0.5)
        if u * u != q:
            raise UnsupportedFamily(f"SU needs a square field size, got {q}")
        out = u ** (N * (N - 1) // 2)
        for i in range(2, N + 1):
            out *= u**i - (-1) ** i
        return out
    if family == "SP":
        if N % 2:
            raise UnsupportedFamily("SP needs even dimension")
        m = N // 2
        out = q ** (m * m)
        for i in range(1, m + 1):
            out *= q ** (2 * i) - 1
        return out
    if family == "OMEGA_PLUS":
        if N % 2:
            raise UnsupportedFamily("OMEGA_PLUS needs even dimension")
        m = N // 2
        out = q ** (m * (m - 1)) * (q**m - 1)
        for i in range(1, m):
            out *= q ** (2 * i) - 1
        return out // gcd(2, q - 1)
    raise UnsupportedFamily(family)


def group_label(family: str, dim: int, field_size: int) -> str:
    name = {"SL": "SL", "SU": "SU", "SP": "SP", "OMEGA_PLUS": "Omega+"}[family]
    return f"{name}_{dim}({field_size})"


@dataclass(frozen=True)
class PredictedGroup:
    family: str
    dim: int
    field: int
    order: int
    case: str  # "linear" or "unitary"
    shape: Partition
    inferred: bool = False  # unitary hook [n-1,1]: not listed in the case tree

    @property
    def label(self) -> str:
        return group_label(self.family, self.dim, self.field)


def field_case(ctx: FieldCtx, alpha: int) -> str:
    """``linear`` when F_p(alpha + 1/alpha) = F_q, ``unitary`` when it is the half field."""
    d = subfield_degree_of(ctx, [ctx.add(alpha, ctx.inv(alpha))])
    if d == ctx.k:
        return "linear"
    if 2 * d == ctx.k:
        return "unitary"
    raise InadmissibleParameter(f"F_p(alpha + 1/alpha) has degree {d}, expected {ctx.k} or {ctx.k // 2}")


def admissibility_error(ctx: FieldCtx, n: int, alpha: int) -> str | None:
    """Why alpha is inadmissible for n (order too small, excluded, or not generating F_q), or None."""
    if alpha == 0:
        return "alpha must be nonzero"
    o = element_order(ctx, alpha)
    if o <= n:
        return f"order of alpha ({o}) must exceed n = {n}"
    if o in EXCLUDED_ORDERS:
        return f"order of alpha ({o}) is excluded (2, 3, 4, 5, 6, 10)"
    if subfield_degree_of(ctx, [alpha]) != ctx.k:
        return f"alpha does not generate F_{ctx.q}"
    return None


def predicted_group(ctx: FieldCtx, shape: Partition, alpha: int) -> PredictedGroup:
    """The classical group the image of B_n' is predicted to be for ``shape``."""
    shape = partition(shape)
    n = sum(shape)
    err = admissibility_error(ctx, n, alpha)
    if err:
        raise InadmissibleParameter(err)
    lam0 = hook_shape(n, 1)
    if is_hook(shape) and shape != lam0:
        raise HookNotLambdaZero(f"{shape} is a hook other than {lam0}")
    N = len(standard_tableaux(shape))
    case = field_case(ctx, alpha)
    q = ctx.q
    if shape == lam0:
        if case == "linear":
            fam, fld = "SL", q
        else:
            fam, fld = "SU", q
        return PredictedGroup(fam, N, fld, group_order(fam, N, fld), case, shape, inferred=case == "unitary")
    small = q if case == "linear" else ctx.sqrt_q
    if shape != transpose(shape):
        fam, fld = ("SL", q) if case == "linear" else ("SU", q)
    else:
        nu = diag_and_nu(shape)[1]
        fam = "SP" if ctx.p == 2 or nu == -1 else "OMEGA_PLUS"
        fld = small
    return PredictedGroup(fam, N, fld, group_order(fam, N, fld), case, shape)


# -- Galois descent ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DescentResult:
    conjugator: np.ndarray  # S
    gens: list[np.ndarray]  # S^-1 g S, entries in the half field
    form: np.ndarray  # phi' over the half field
    symmetry: str
    P: np.ndarray  # normalized: conj(P) P = Id and conj(g) = P g P^-1
    attempts: int
    hermitian_dim: int = field(default=-1)


def hilbert90_descent(
    ctx: FieldCtx,
    gens,
    W=None,
    seed: int = 0,
    max_retries: int = 64,
) -> DescentResult:
    """Conjugate an absolutely irreducible group preserving a bilinear form
    into GL_N of the half field, together with an invariant form there.

    ``W`` is the invariant bilinear form (solved for when omitted).
    """
    if ctx.k % 2:
        raise ConjUndefined(f"no conjugation on F_{ctx.q}")
    gens = [la.asmat(g) for g in gens]
    n = _check_square(gens)
    if burnside_span_dim(ctx, gens) != n * n:
        raise NotIrreducible("generators are not absolutely irreducible")
    if W is None:
        sol = invariant_bilinear_space(ctx, gens, 1)
        if sol.dim != 1:
            raise ValueError(f"expected a 1-dimensional invariant bilinear space, got {sol.dim}")
        W = sol.basis[0]
    W = la.asmat(W)
    herm_dim = invariant_sesquilinear_space(ctx, gens, 1).dim

    # conj(g) P = P g for all g
    eye = la.identity(n)
    rows = [
        la.msub(ctx, la.kron(ctx, la.mconj(ctx, g), eye), la.kron(ctx, eye, g.T)) for g in gens
    ]
    sols = la.nullspace(ctx, np.vstack(rows))
    if sols.shape[0] != 1:
        raise NotIrreducible(f"intertwiner space has dimension {sols.shape[0]}")
    P = sols[0].reshape(n, n)
    PP = la.matmul(ctx, la.mconj(ctx, P), P)
    c = int(PP[0, 0])
    if not np.array_equal(PP, la.scalar(ctx, c, n)) or c == 0:
        raise NormEquationFailure("conj(P) P is not a nonzero scalar")
    roots = norm_solutions(ctx, c)
    if not roots:
        raise NormEquationFailure(f"no solution of y conj(y) = {c}")
    P = la.mscale(ctx, ctx.inv(roots[0]), P)

    rng = np.random.default_rng(seed)
    candidates = [la.scalar(ctx, 1, n), la.scalar(ctx, ctx.primitive, n)]
    attempts = 0
    while True:
        if attempts >= max_retries:
            raise MaxRandomRetriesExceeded(f"no invertible B after {max_retries} attempts")
        C = candidates[attempts] if attempts < len(candidates) else rng.integers(0, ctx.q, (n, n))
        attempts += 1
        B = la.madd(ctx, C, la.matmul(ctx, P, la.mconj(ctx, C)))
        if la.det(ctx, B) != 0:
            break
    S = la.mconj(ctx, B)
    S_inv = la.inv(ctx, S)
    new_gens = [la.matprod(ctx, [S_inv, g, S]) for g in gens]
    for g in new_gens:
        if not np.array_equal(la.mconj(ctx, g), g):
            raise ArithmeticError("descended generator not fixed by the half Frobenius")

    WS = la.matprod(ctx, [S.T, W, S])
    form = None
    for mu in range(1, ctx.q):
        cand = la.madd(ctx, la.mscale(ctx, mu, WS), la.mconj(ctx, la.mscale(ctx, mu, WS)))
        if not la.is_zero(cand):
            form = cand
            break
    if form is None:
        raise ArithmeticError("every trace form vanished")
    sym = classify_symmetry(ctx, form)
    for g in new_gens:
        if not np.array_equal(la.matprod(ctx, [g.T, form, g]), form):
            raise ArithmeticError("descended generators do not preserve the descended form")
    return DescentResult(S, new_gens, form, sym, P, attempts, herm_dim)


def commutator_images(rep: HeckeRep) -> list[np.ndarray]:
    """Images of the Gorin-Lin generators of B_n' under ``rep``."""
    from .braid import gorin_lin_generators

    return [rep(w) for w in gorin_lin_generators(rep.n).values()]


def classification_record(
    ctx: FieldCtx, shape: Partition, alpha: int, seed: int = 0, budget: int = 10_000, samples: int = 1000
) -> dict:
    """Per-shape summary: prediction, invariant forms, trace field and Burnside span."""
    from .young import format_partition

    shape = partition(shape)
    rep = HeckeRep(ctx, shape, alpha)
    imgs = commutator_images(rep)
    bil = invariant_bilinear_space(ctx, imgs, 1)
    herm = invariant_sesquilinear_space(ctx, imgs, 1).dim if ctx.k % 2 == 0 else None
    rec: dict = {
        "lambda": format_partition(shape),
        "N": rep.dim,
        "case": field_case(ctx, alpha),
        "family": None,
        "field": None,
        "order": None,
        "forms": {"bilinear_dim": bil.dim, "symmetry": bil.overall_symmetry, "hermitian_dim": herm},
        "trace_field_degree": trace_field_degree(ctx, imgs, budget=budget, samples=samples, seed=seed),
        "burnside_dim": burnside_span_dim(ctx, imgs),
    }
    try:
        pg = predicted_group(ctx, shape, alpha)
    except (HookNotLambdaZero, InadmissibleParameter) as exc:
        rec["prediction_error"] = f"{type(exc).__name__}: {exc}"
    else:
        rec.update(family=pg.family, field=pg.field, order=pg.order, label=pg.label, inferred=pg.inferred)
    return rec
