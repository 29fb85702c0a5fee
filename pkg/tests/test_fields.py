"""Field tower arithmetic: axioms, embeddings, traces and norms."""

import pytest
from hypothesis import given, settings, strategies as st

from ffverify import FieldError, build_tower
from ffverify.fields import (ArtinSchreierExtension, is_prime,
                             least_irreducible, poly_mod, poly_powmod,
                             prime_factors)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23}
    for n in range(25):
        assert is_prime(n) == (n in primes)


def test_prime_factors():
    assert prime_factors(12) == [2, 3]
    assert prime_factors(1) == []
    assert prime_factors(30) == [2, 3, 5]


@pytest.mark.parametrize("p,d", [(2, 1), (2, 2), (2, 4), (3, 2), (3, 3),
                                 (5, 2), (7, 2), (3, 6)])
def test_least_irreducible_is_irreducible(p, d):
    f = least_irreducible(p, d)
    assert len(f) == d + 1 and f[-1] == 1
    # x^(p^d) == x mod f, and x^(p^(d/t)) != x for prime divisors t
    x = (0, 1)
    assert poly_mod(poly_powmod(x, p ** d, f, p), f, p) == poly_mod(x, f, p)
    for t in prime_factors(d):
        sub = poly_powmod(x, p ** (d // t), f, p)
        assert sub != poly_mod(x, f, p)


def test_tower_rejects_bad_parameters():
    with pytest.raises(FieldError):
        build_tower(4, 1)
    with pytest.raises(FieldError):
        build_tower(2, 0)
    with pytest.raises(FieldError):
        build_tower(5, 2)  # q = 25 > 16


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
def test_field_axioms_exhaustive(p, e):
    ctx = build_tower(p, e)
    for key in (1, 2):
        elems = ctx.enumerate_level(key)
        one, zero = ctx.one(key), ctx.zero(key)
        for a in elems:
            assert a + zero == a and a * one == a
            assert a - a == zero
            if not a.is_zero():
                assert a * (one / a) == one
        for a in elems:
            for b in elems:
                assert a + b == b + a
                assert a * b == b * a
                for c in elems:
                    assert (a + b) * c == a * c + b * c


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 80), st.integers(0, 80), st.integers(0, 80))
def test_field_axioms_randomized_q9(i, j, k):
    ctx = build_tower(3, 2)
    a = ctx.from_encoding(2, i % ctx.levels[2].size)
    b = ctx.from_encoding(2, j % ctx.levels[2].size)
    c = ctx.from_encoding(2, k % ctx.levels[2].size)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1)]), st.integers(0, 10 ** 6))
def test_encoding_roundtrip(pe, k):
    ctx = build_tower(*pe)
    for key in (1, 2, 4):
        n = k % ctx.levels[key].size
        assert ctx.from_encoding(key, n).encoding() == n


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1)])
def test_embedding_is_ring_homomorphism(p, e):
    ctx = build_tower(p, e)
    elems = ctx.enumerate_level(1)
    for a in elems:
        for b in elems:
            for key in (2, 4):
                assert ctx.embed(a + b, key) == ctx.embed(a, key) + ctx.embed(b, key)
                assert ctx.embed(a * b, key) == ctx.embed(a, key) * ctx.embed(b, key)


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_embedding_commutes_through_middle_level(p, e):
    ctx = build_tower(p, e)
    for a in ctx.enumerate_level(1):
        via_mid = ctx.embed(ctx.embed(a, 2), 4)
        assert ctx.embed(a, 4) == via_mid
        # project inverts embed
        assert ctx.project(via_mid, 1) == a


def test_project_rejects_outsiders():
    ctx = build_tower(3, 1)
    g = ctx.levels[2]
    outsider = None
    level_one_images = {ctx.embed(a, 2) for a in ctx.enumerate_level(1)}
    for k in range(g.size):
        cand = ctx.from_encoding(2, k)
        if cand not in level_one_images:
            outsider = cand
            break
    with pytest.raises(FieldError):
        ctx.project(outsider, 1)


@pytest.mark.parametrize("p,e", [(3, 1), (2, 2), (5, 1)])
def test_frobenius_properties(p, e):
    ctx = build_tower(p, e)
    for a in ctx.enumerate_level(2):
        fa = ctx.frobenius_q(a)
        # order 2 on the quadratic level
        assert ctx.frobenius_q(fa) == a
        for b in ctx.enumerate_level(2)[:5]:
            assert ctx.frobenius_q(a + b) == fa + ctx.frobenius_q(b)
            assert ctx.frobenius_q(a * b) == fa * ctx.frobenius_q(b)
    for a in ctx.enumerate_level(1):
        assert ctx.frobenius_q(a) == a


@pytest.mark.parametrize("p,e", [(3, 1), (2, 2), (5, 1)])
def test_norm_and_relative_trace_land_downstairs(p, e):
    ctx = build_tower(p, e)
    q = ctx.q
    for a in ctx.enumerate_level(2):
        n = ctx.norm_map(a)
        t = ctx.relative_trace(a)
        assert n.key == 1 and t.key == 1
        assert ctx.embed(n, 2) == a * ctx.frobenius_q(a)
        assert ctx.embed(t, 2) == a + ctx.frobenius_q(a)
    # the norm is surjective onto F_q with fibers of size q + 1
    from collections import Counter
    fibers = Counter(ctx.norm_map(a).encoding() for a in ctx.enumerate_level(2)
                     if not a.is_zero())
    assert all(v == q + 1 for v in fibers.values())
    assert len(fibers) == q - 1


def test_trace_to_prime_additive():
    ctx = build_tower(3, 1)
    for a in ctx.enumerate_level(2):
        for b in ctx.enumerate_level(2):
            ta, tb = ctx.trace_to_prime(a), ctx.trace_to_prime(b)
            assert ctx.trace_to_prime(a + b) == (ta + tb) % 3


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1)])
def test_mu_enumeration_and_discrete_log(p, e):
    ctx = build_tower(p, e)
    q = ctx.q
    mu = ctx.enumerate_mu(q + 1)
    assert len(mu) == q + 1
    assert len(set(z.encoding() for z in mu)) == q + 1
    one = ctx.one(2)
    for z in mu:
        assert z ** (q + 1) == one
    g = ctx.mu_generator(q + 1)
    seen = set()
    for z in mu:
        k = ctx.discrete_log_mu(z, q + 1)
        assert g ** k == z
        seen.add(k)
    assert seen == set(range(q + 1))


@pytest.mark.parametrize("p,e", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_epsilon_sets_partition_sizes(p, e):
    ctx = build_tower(p, e)
    q = ctx.q
    plus = ctx.f_q_epsilon_set(1)    # a + a^q = 0
    minus = ctx.f_q_epsilon_set(-1)  # a - a^q = 0, i.e. F_q itself
    assert len(plus) == q and len(minus) == q
    for a in minus:
        assert ctx.frobenius_q(a) == a
    for a in plus:
        assert ctx.frobenius_q(a) == -a
    # they meet exactly in zero for odd p
    overlap = {a.encoding() for a in plus} & {a.encoding() for a in minus}
    assert overlap == {0}


@pytest.mark.parametrize("p,e", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_legendre_symbol(p, e):
    ctx = build_tower(p, e)
    q = ctx.q
    elems = [a for a in ctx.enumerate_level(1) if not a.is_zero()]
    squares = {(a * a).encoding() for a in elems}
    count = {1: 0, -1: 0}
    for a in elems:
        s = ctx.legendre(a)
        assert s == (1 if a.encoding() in squares else -1)
        count[s] += 1
        for b in elems:
            assert ctx.legendre(a * b) == s * ctx.legendre(b)
    assert count[1] == count[-1] == (q - 1) // 2
    with pytest.raises(FieldError):
        ctx.legendre(ctx.zero(1))


def test_legendre_rejected_in_characteristic_two():
    ctx = build_tower(2, 1)
    with pytest.raises(FieldError):
        ctx.legendre(ctx.one(1))


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (5, 1)])
def test_artin_schreier_extension_structure(p, e):
    ctx = build_tower(p, e)
    K = ArtinSchreierExtension(ctx)
    t = K.t()
    # t^p - t = c by construction
    c_el = (K.c,) + tuple(K.base.zero for _ in range(p - 1))
    assert K.sub(K.pow(t, p), t) == c_el
    # ring sanity on a few elements
    a, b = t, K.mul(t, t)
    assert K.mul(a, b) == K.mul(b, a)
    assert K.add(a, K.neg(a)) == K.zero
    assert K.mul(a, K.one) == a
    # flatten/unflatten roundtrip
    assert K.unflatten(K.flatten(a)) == a


@pytest.mark.parametrize("p,e", [(3, 1), (2, 2), (5, 1)])
def test_artin_schreier_solve_affine(p, e):
    ctx = build_tower(p, e)
    K = ArtinSchreierExtension(ctx)
    q = ctx.q

    def art(x):
        return K.sub(K.pow(x, q), x)

    # the map x -> x^q - x is F_p-linear with kernel F_q
    sols = K.solve_affine(art, K.zero)
    assert len(sols) == q
    probe = K.from_base(ctx.element(2, 3))
    rhs = art(probe)
    sols = K.solve_affine(art, rhs)
    assert probe in sols
    assert len(sols) == q
    for s in sols:
        assert art(s) == rhs
