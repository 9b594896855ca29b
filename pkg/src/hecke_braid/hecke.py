"""Hoefsmit matrix models of the type-A Hecke algebra H_n(alpha) over F_q.

Matrices act on coordinate columns: the column indexed by a tableau T holds
the coordinates of ``s_r . T``. With this convention the bilinear pairing
satisfies ``S^t W S = (-alpha) W`` for every generator matrix S.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .gf import FieldCtx, conj, element_order
from .young import (
    DegenerateParameter,
    Partition,
    StdTableau,
    diag_and_nu,
    hermitian_weight,
    hook_shape,
    hook_subset,
    format_partition,
    partition,
    partitions_of,
    standard_tableaux,
    tableau_index,
    transpose,
    w_sign,
)


class SelfConjugateShape(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


class NotScalar(ArithmeticError):
    pass


class NotAgreeingOnCommutators(ArithmeticError):
    pass


def content_value(ctx: FieldCtx, t: StdTableau, m: int, alpha: int) -> int:
    """ct(T : m) = -alpha^(j - i) for m in row i, column j."""
    return ctx.neg(ctx.pow(alpha, t.content(m)))


def m_coefficient(ctx: FieldCtx, t: StdTableau, r: int, alpha: int) -> int:
    """m_r(T) = (alpha - 1) ct(T:r+1) / (ct(T:r+1) - ct(T:r))."""
    c1 = content_value(ctx, t, r + 1, alpha)
    c0 = content_value(ctx, t, r, alpha)
    den = ctx.sub(c1, c0)
    if den == 0:
        raise DegenerateParameter(f"ct(T:{r + 1}) = ct(T:{r}) for T = {t}")
    return ctx.div(ctx.mul(ctx.sub(alpha, 1), c1), den)


def hoefsmit_generator(ctx: FieldCtx, shape: Partition, alpha: int, r: int) -> np.ndarray:
    """Matrix of s_r on V_shape in the standard tableau basis."""
    shape = partition(shape)
    tabs = standard_tableaux(shape)
    index = tableau_index(shape)
    n = sum(shape)
    if not 1 <= r < n:
        raise IndexOutOfRange(f"generator s_{r} outside 1..{n - 1}")
    mat = np.zeros((len(tabs), len(tabs)), dtype=np.int64)
    for col, t in enumerate(tabs):
        (i, j), (u, v) = t.pos(r), t.pos(r + 1)
        if i == u:
            mat[col, col] = alpha
        elif j == v:
            mat[col, col] = ctx.neg(1)
        else:
            m = m_coefficient(ctx, t, r, alpha)
            mat[col, col] = m
            mat[index[t.swap(r)], col] = ctx.add(1, m)
    return mat


def check_admissible(ctx: FieldCtx, n: int, alpha: int) -> None:
    """Raise DegenerateParameter unless the order of alpha exceeds n."""
    if alpha == 0 or element_order(ctx, alpha) <= n:
        raise DegenerateParameter(f"order of alpha must exceed n = {n}")


@dataclass(frozen=True, eq=False)
class HeckeRep:
    """The irreducible representation R_shape of H_n(alpha)."""

    ctx: FieldCtx
    shape: Partition
    alpha: int
    tableaux: tuple[StdTableau, ...] = field(init=False)
    gens: tuple[np.ndarray, ...] = field(init=False, repr=False)
    inverses: tuple[np.ndarray, ...] = field(init=False, repr=False)

    def __post_init__(self):
        shape = partition(self.shape)
        object.__setattr__(self, "shape", shape)
        n = sum(shape)
        check_admissible(self.ctx, n, self.alpha)
        object.__setattr__(self, "tableaux", standard_tableaux(shape))
        gens = tuple(hoefsmit_generator(self.ctx, shape, self.alpha, r) for r in range(1, n))
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "inverses", tuple(la.inv(self.ctx, g) for g in gens))

    @property
    def n(self) -> int:
        return sum(self.shape)

    @property
    def dim(self) -> int:
        return len(self.tableaux)

    def gen(self, r: int) -> np.ndarray:
        return self.gens[r - 1]

    def __call__(self, word) -> np.ndarray:
        return rep_of_word(self, word)


def evaluate_word(ctx: FieldCtx, gens, inverses, word, dim: int) -> np.ndarray:
    """Ordered product of generator matrices along a braid word."""
    out = la.identity(dim)
    for i, e in word.letters:
        if not 1 <= i <= len(gens):
            raise IndexOutOfRange(f"generator s_{i} outside 1..{len(gens)}")
        out = la.matmul(ctx, out, gens[i - 1] if e > 0 else inverses[i - 1])
    return out


def rep_of_word(rep: HeckeRep, word) -> np.ndarray:
    return evaluate_word(rep.ctx, rep.gens, rep.inverses, word, rep.dim)


def matrix_csv(ctx: FieldCtx, mat, shape: Partition, alpha: int, label) -> str:
    """CSV of field-element strings, row-major, under a one-line header."""
    buf = io.StringIO()
    buf.write(f"lambda={format_partition(shape)};alpha={ctx.format(alpha)};r={label}\n")
    writer = csv.writer(buf, lineterminator="\n")
    for row in la.asmat(mat):
        writer.writerow([ctx.format(int(x)) for x in row])
    return buf.getvalue()


def parse_matrix_csv(ctx: FieldCtx, text: str) -> tuple[dict[str, str], np.ndarray]:
    """Inverse of :func:`matrix_csv`: (header fields, matrix)."""
    head, _, body = text.partition("\n")
    meta = dict(item.split("=", 1) for item in head.split(";"))
    rows = [[ctx.parse(cell) for cell in row] for row in csv.reader(io.StringIO(body)) if row]
    return meta, la.asmat(rows)


@dataclass(frozen=True)
class GelfandModel:
    ctx: FieldCtx
    alpha: int
    blocks: tuple[HeckeRep, ...]

    @property
    def dim(self) -> int:
        """Number of standard tableaux of size n (the involutions of S_n)."""
        return sum(b.dim for b in self.blocks)

    @property
    def regular_dim(self) -> int:
        """Sum of squared block dimensions; equals n! by semisimplicity."""
        return sum(b.dim**2 for b in self.blocks)


def gelfand_model(ctx: FieldCtx, n: int, alpha: int) -> GelfandModel:
    return GelfandModel(ctx, alpha, tuple(HeckeRep(ctx, lam, alpha) for lam in partitions_of(n)))


# -- forms ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class PairingSpec:
    """Gram data of an invariant form.

    ``kind`` is ``bilinear-self`` (on V_shape, shape self-conjugate),
    ``bilinear-pair`` (on V_shape + V_shape'; ``gram`` holds the off-diagonal
    block from V_shape to V_shape') or ``hermitian``.
    """

    kind: str
    shape: Partition
    gram: np.ndarray
    lower: np.ndarray | None = None  # the V_shape' x V_shape block for pairs
    nu: int = 1

    def full(self) -> np.ndarray:
        if self.kind != "bilinear-pair":
            return self.gram
        a, b = self.gram.shape
        out = np.zeros((a + b, a + b), dtype=np.int64)
        out[:a, a:] = self.gram
        out[a:, :a] = self.lower
        return out

    @property
    def symmetry(self) -> str:
        if self.kind == "hermitian":
            return "hermitian"
        return "symmetric" if self.nu == 1 else "alternating"


def _pair_block(ctx: FieldCtx, src: Partition, dst: Partition) -> np.ndarray:
    """B[a, b] = w(T_a) when U_b is the transpose of T_a."""
    tabs = standard_tableaux(src)
    index = tableau_index(dst)
    out = np.zeros((len(tabs), len(standard_tableaux(dst))), dtype=np.int64)
    for a, t in enumerate(tabs):
        out[a, index[t.transpose()]] = ctx.from_int(w_sign(t))
    return out


def bilinear_pairing(ctx: FieldCtx, shape: Partition, alpha: int | None = None) -> PairingSpec:
    """The form (T1 | T2) = w(T1) [T2 = T1'] on V_shape or V_shape + V_shape'."""
    shape = partition(shape)
    conj_shape = transpose(shape)
    nu = diag_and_nu(shape)[1]
    if shape == conj_shape:
        return PairingSpec("bilinear-self", shape, _pair_block(ctx, shape, shape), nu=nu)
    return PairingSpec(
        "bilinear-pair",
        shape,
        _pair_block(ctx, shape, conj_shape),
        lower=_pair_block(ctx, conj_shape, shape),
        nu=nu,
    )


def hermitian_pairing(ctx: FieldCtx, shape: Partition, alpha: int) -> PairingSpec:
    """Diagonal hermitian form with weights d(T)."""
    conj(ctx, alpha)  # raises ConjUndefined for odd degree
    tabs = standard_tableaux(partition(shape))
    gram = np.diag([hermitian_weight(ctx, t, alpha) for t in tabs]).astype(np.int64)
    return PairingSpec("hermitian", partition(shape), gram)


def pair_generators(ctx: FieldCtx, shape: Partition, alpha: int) -> list[np.ndarray]:
    """Generator matrices on V_shape + V_shape' (block diagonal)."""
    a = HeckeRep(ctx, shape, alpha)
    b = HeckeRep(ctx, transpose(partition(shape)), alpha)
    return [la.block_diag(x, y) for x, y in zip(a.gens, b.gens)]


def form_generators(ctx: FieldCtx, shape: Partition, alpha: int) -> list[np.ndarray]:
    """Generators on the space carrying :func:`bilinear_pairing`."""
    shape = partition(shape)
    if shape == transpose(shape):
        return list(HeckeRep(ctx, shape, alpha).gens)
    return pair_generators(ctx, shape, alpha)


def check_form_equivariance(ctx: FieldCtx, gens, spec: PairingSpec, alpha: int) -> bool:
    """S^t W S == (-alpha) W (bilinear) or conj(S)^t D S == D (hermitian) for all S."""
    gram = spec.full()
    for s in gens:
        s = la.asmat(s)
        if s.shape != gram.shape:
            raise la.DimensionMismatch(f"generator {s.shape} vs form {gram.shape}")
        if spec.kind == "hermitian":
            lhs = la.matprod(ctx, [la.mconj(ctx, s).T, gram, s])
            rhs = gram
        else:
            lhs = la.matprod(ctx, [s.T, gram, s])
            rhs = la.mscale(ctx, ctx.neg(alpha), gram)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def duality_operator(ctx: FieldCtx, shape: Partition, alpha: int | None = None) -> np.ndarray:
    """L : T -> w(T) T' on V_shape + V_shape' (shape's basis first).

    Raises ArithmeticError if L^2 != nu Id, which would indicate a bug.
    """
    shape = partition(shape)
    other = transpose(shape)
    if shape == other:
        raise SelfConjugateShape(f"{shape} is self-conjugate")
    a, b = len(standard_tableaux(shape)), len(standard_tableaux(other))
    mat = np.zeros((a + b, a + b), dtype=np.int64)
    ia, ib = tableau_index(shape), tableau_index(other)
    for t, col in ia.items():
        mat[a + ib[t.transpose()], col] = ctx.from_int(w_sign(t))
    for u, col in ib.items():
        mat[ia[u.transpose()], a + col] = ctx.from_int(w_sign(u))
    nu = diag_and_nu(shape)[1]
    if not np.array_equal(la.matmul(ctx, mat, mat), la.scalar(ctx, ctx.from_int(nu), a + b)):
        raise ArithmeticError("L^2 != nu Id")
    return mat


def duality_conjugation_holds(ctx: FieldCtx, shape: Partition, alpha: int, nu_factor: bool = False) -> bool:
    """Check L S L^-1 == c * (S^t)^-1 for every generator S of V_shape + V_shape'.

    The factor is c = -alpha. With ``nu_factor`` the factor is -alpha * nu,
    which only agrees when nu = +1: conjugating by L contributes
    w(T) w(T') = nu once more, so the two signs cancel.
    """
    L = duality_operator(ctx, shape, alpha)
    L_inv = la.inv(ctx, L)
    c = ctx.neg(alpha)
    if nu_factor:
        c = ctx.mul(c, ctx.from_int(diag_and_nu(partition(shape))[1]))
    for s in pair_generators(ctx, shape, alpha):
        lhs = la.matprod(ctx, [L, s, L_inv])
        if not np.array_equal(lhs, la.mscale(ctx, c, la.inv(ctx, s).T)):
            return False
    return True


# -- hooks and exterior powers -------------------------------------------------


def wedge_power(ctx: FieldCtx, mat: np.ndarray, r: int, subsets) -> np.ndarray:
    """Matrix of Lambda^r on the basis u_I (I running over ``subsets``, coordinate
    positions into ``mat``): entry (J, I) is the minor with rows J, columns I."""
    subsets = list(subsets)
    out = np.zeros((len(subsets), len(subsets)), dtype=np.int64)
    for ci, cols in enumerate(subsets):
        for ri, rows in enumerate(subsets):
            out[ri, ci] = la.det(ctx, mat[np.ix_(rows, cols)])
    return out


def exterior_power_rep(ctx: FieldCtx, n: int, r: int, alpha: int) -> list[np.ndarray]:
    """Lambda^r R_[n-1,1] written in the basis u_I ordered like the tableaux of
    [n-r, 1^r] via v_I <-> u_I."""
    std = HeckeRep(ctx, hook_shape(n, 1), alpha)
    # coordinate of v_i in the basis of V_[n-1,1]
    pos = {hook_subset(t)[0]: k for k, t in enumerate(std.tableaux)}
    target = standard_tableaux(hook_shape(n, r))
    subsets = [tuple(pos[i] for i in hook_subset(t)) for t in target]
    return [wedge_power(ctx, g, r, subsets) for g in std.gens]


def exterior_power_compare(ctx: FieldCtx, n: int, r: int, alpha: int) -> bool:
    """Lambda^r R_[n-1,1](s_k) == alpha^(r-1) R_[n-r,1^r](s_k) for every k."""
    if not 1 <= r <= n - 2:
        raise ValueError(f"need 1 <= r <= n - 2, got r={r}, n={n}")
    hook = HeckeRep(ctx, hook_shape(n, r), alpha)
    wedge = exterior_power_rep(ctx, n, r, alpha)
    factor = ctx.pow(alpha, r - 1)
    return all(np.array_equal(w, la.mscale(ctx, factor, h)) for w, h in zip(wedge, hook.gens))


def character_twist(ctx: FieldCtx, r1, r2, n: int) -> list[int]:
    """Scalars eta(s_i) with R2(s_i) = eta(s_i) R1(s_i).

    ``r1`` and ``r2`` are the generator matrices of two representations of B_n.
    They must agree on the Gorin-Lin generators of the commutator subgroup, and
    the restriction of ``r2`` must be absolutely irreducible.
    """
    from .braid import gorin_lin_generators
    from .classify import burnside_span_dim

    r1 = [la.asmat(g) for g in r1]
    r2 = [la.asmat(g) for g in r2]
    dim = r1[0].shape[0]
    inv1 = [la.inv(ctx, g) for g in r1]
    inv2 = [la.inv(ctx, g) for g in r2]
    images = []
    for name, word in gorin_lin_generators(n).items():
        a = evaluate_word(ctx, r1, inv1, word, dim)
        b = evaluate_word(ctx, r2, inv2, word, dim)
        if not np.array_equal(a, b):
            raise NotAgreeingOnCommutators(f"representations differ on {name}")
        images.append(b)
    if burnside_span_dim(ctx, images) != dim * dim:
        raise NotScalar("restriction of R2 to the commutator subgroup is not absolutely irreducible")
    etas = []
    for g2, g1inv in zip(r2, inv1):
        eta = la.matmul(ctx, g2, g1inv)
        c = int(eta[0, 0])
        if not np.array_equal(eta, la.scalar(ctx, c, dim)):
            raise NotScalar("R2(s) R1(s)^-1 is not scalar")
        etas.append(c)
    return etas
