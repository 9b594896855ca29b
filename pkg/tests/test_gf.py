import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import PolyField, irreducible_brute

from hecke_braid import gf
from hecke_braid.gf import (
    ConjUndefined,
    DegreeMismatch,
    NoSuchOrder,
    NotPrime,
    ReducibleModulus,
    ZeroElement,
    conj,
    element_order,
    find_element_of_order,
    frobenius,
    make_field,
    norm_solutions,
    parse_field_spec,
    subfield_degree_of,
    subfield_elements,
)

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (7, 2), (3, 3)]


@pytest.mark.parametrize("p,k", FIELDS)
def test_tables_match_polynomial_oracle(p, k):
    ctx = make_field(p, k)
    ref = PolyField(p, ctx.modulus)
    xs = np.arange(ctx.q)
    add = ctx.add(xs[:, None], xs[None, :])
    mul = ctx.mul(xs[:, None], xs[None, :])
    for x in range(ctx.q):
        for y in range(ctx.q):
            assert add[x, y] == ref.add(x, y)
            assert mul[x, y] == ref.mul(x, y)


@pytest.mark.parametrize("p,k", FIELDS)
def test_auto_modulus_is_smallest_irreducible(p, k):
    """AUTO picks the first irreducible monic in the coefficient order (high degree most significant)."""
    mod = make_field(p, k).modulus
    assert irreducible_brute(p, mod)

    def key(m):
        return sum(c * p**i for i, c in enumerate(m[:-1]))

    for code in range(key(mod)):
        cand = [(code // p**i) % p for i in range(k)] + [1]
        assert not irreducible_brute(p, cand)


def test_known_moduli():
    assert make_field(2, 3, "AUTO").modulus == (1, 1, 0, 1)  # x^3 + x + 1
    assert make_field(7, 2, "AUTO").modulus == (1, 0, 1)  # x^2 + 1
    assert make_field(3, 2, "AUTO").modulus == (1, 0, 1)


def test_explicit_modulus_and_errors():
    ctx = make_field(2, 3, [1, 1, 0, 1])
    assert ctx.q == 8
    with pytest.raises(NotPrime):
        make_field(6, 1, "AUTO")
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 0, 1])  # (x+1)^2
    with pytest.raises(DegreeMismatch):
        make_field(2, 3, [1, 1, 1])
    with pytest.raises(DegreeMismatch):
        make_field(2, 2, [1, 1, 2])  # not monic once reduced mod 2


@pytest.mark.parametrize("p,k", [(2, 3), (7, 2), (3, 2), (5, 2), (2, 4)])
def test_element_order_brute(p, k):
    ctx = make_field(p, k)
    ref = PolyField(p, ctx.modulus)
    for x in range(1, ctx.q):
        assert element_order(ctx, x) == ref.order(x)
    with pytest.raises(ZeroElement):
        element_order(ctx, 0)


def test_element_order_examples(F8, F49):
    assert element_order(F8, 2) == 7  # class of X
    assert find_element_of_order(F8, 7) == 2
    assert element_order(F8, 1) == 1
    with pytest.raises(NoSuchOrder):
        find_element_of_order(F8, 6)
    g = F49.primitive
    assert element_order(F49, g) == 48
    a = find_element_of_order(F49, 8)
    assert F49.pow(a, 8) == 1 and F49.pow(a, 4) != 1
    assert a == 16  # frozen: smallest order-8 element under the integer order


@pytest.mark.parametrize("p,k", [(2, 3), (7, 2), (3, 2), (2, 4)])
def test_find_element_of_order_is_smallest(p, k):
    ctx = make_field(p, k)
    ref = PolyField(p, ctx.modulus)
    for m in gf.divisors(ctx.q - 1):
        x = find_element_of_order(ctx, m)
        assert ref.order(x) == m
        assert all(ref.order(y) != m for y in range(1, x))


def test_conj_and_subfields(F8, F49):
    a = find_element_of_order(F49, 8)
    assert conj(F49, a) == F49.inv(a)
    for x in range(7):  # the prime field
        assert conj(F49, x) == x
    with pytest.raises(ConjUndefined):
        conj(F8, 2)
    assert subfield_degree_of(F49, [0, 1]) == 1
    assert subfield_degree_of(F49, [F49.add(a, F49.inv(a))]) == 1
    b = find_element_of_order(F8, 7)
    assert subfield_degree_of(F8, [F8.add(b, F8.inv(b))]) == 3
    assert list(subfield_elements(F49, 1)) == list(range(7))


def test_norm_solutions_exhaustive(F49):
    for c in range(1, 7):
        sols = norm_solutions(F49, c)
        assert len(sols) == 8  # the norm map F_49^* -> F_7^* is onto with kernel of size 8
        assert all(F49.mul(y, conj(F49, y)) == c for y in sols)
    assert norm_solutions(F49, 10) == []  # 10 is not in F_7


def test_parse_and_format(F49):
    ctx = parse_field_spec("p=7,k=2,mod=AUTO")
    assert ctx == F49
    assert parse_field_spec(ctx.spec_string()) == ctx
    assert parse_field_spec("p=2,k=3,mod=1,1,0,1").modulus == (1, 1, 0, 1)
    assert F49.format(16) == "2,2"
    assert F49.parse("2,2") == 16
    for x in range(F49.q):
        assert F49.parse(F49.format(x)) == x
    with pytest.raises(gf.FieldError):
        parse_field_spec("k=2,mod=AUTO")


def test_context_check(F8):
    F8.check(np.arange(8))
    with pytest.raises(gf.ContextMismatch):
        F8.check([8])


def test_vector_sum_matches_fold(F49, F8, F9):
    rng = np.random.default_rng(1)
    for ctx in (F49, F8, F9):
        a = rng.integers(0, ctx.q, (5, 7))
        for axis in (0, 1):
            got = ctx.sum(a, axis=axis)
            ref = np.zeros(a.shape[1 - axis], dtype=np.int64)
            for row in np.moveaxis(a, axis, 0):
                ref = ctx.add(ref, row)
            assert np.array_equal(got, ref)


field_and_elems = st.sampled_from([(2, 3), (7, 2), (3, 2), (5, 1), (2, 4)]).flatmap(
    lambda pk: st.tuples(
        st.just(pk),
        *[st.integers(0, pk[0] ** pk[1] - 1) for _ in range(3)],
    )
)


@settings(max_examples=200, deadline=None)
@given(field_and_elems)
def test_field_axioms(data):
    (p, k), x, y, z = data
    ctx = make_field(p, k)
    assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
    assert ctx.add(x, ctx.neg(x)) == 0
    assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
    if x:
        assert ctx.mul(x, ctx.inv(x)) == 1
        assert ctx.pow(x, ctx.q - 1) == 1
        o = element_order(ctx, x)
        assert ctx.pow(x, o) == 1 and all(ctx.pow(x, d) != 1 for d in range(1, o))


@settings(max_examples=100, deadline=None)
@given(field_and_elems, st.integers(0, 5))
def test_frobenius_is_ring_map(data, i):
    (p, k), x, y, _ = data
    ctx = make_field(p, k)
    f = lambda v: frobenius(ctx, v, i)  # noqa: E731
    assert f(ctx.add(x, y)) == ctx.add(f(x), f(y))
    assert f(ctx.mul(x, y)) == ctx.mul(f(x), f(y))
    assert frobenius(ctx, x, k) == x
    if k % 2 == 0:
        assert conj(ctx, conj(ctx, x)) == x
        assert subfield_degree_of(ctx, [ctx.mul(x, conj(ctx, x))]) <= k // 2
