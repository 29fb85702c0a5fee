"""Surface fixed points: structured solver, closed forms, blind scan."""

import pytest

from ffverify import (FieldError, blind_fixed_point_count,
                      build_tower, closed_form_fixed_count,
                      differential_vanishes, fixed_points_surface, nu_sign)
from ffverify.fixed_points import (_apply_endo, _projectively_equal,
                                   _surface_holds, coordinate_extension)


def test_report_is_internally_consistent():
    ctx = build_tower(3, 1)
    for with_u in (True, False):
        for zeta in ctx.enumerate_mu(4):
            for eta in ctx.enumerate_level(1):
                rep = fixed_points_surface(ctx, eta, zeta, with_u)
                assert rep.total == sum(rep.sigma_counts.values())
                assert rep.total == len(rep.points)
                assert rep.field_degree == 2 * ctx.e * ctx.p


def test_every_point_satisfies_all_equations():
    ctx = build_tower(3, 1)
    K = coordinate_extension(ctx)
    q = ctx.q
    for with_u in (True, False):
        for zeta in ctx.enumerate_mu(4):
            for eta in ctx.enumerate_level(1):
                zk = K.from_base(ctx.embed(zeta, 2))
                ek = K.from_base(ctx.embed(eta, 2))
                rep = fixed_points_surface(ctx, eta, zeta, with_u)
                for P in rep.points:
                    assert _surface_holds(K, q, P)
                    Q = _apply_endo(K, q, zk, ek, with_u, P)
                    assert _projectively_equal(K, P, Q)


def test_no_duplicate_points():
    ctx = build_tower(3, 1)
    K = coordinate_extension(ctx)
    for with_u in (True, False):
        for zeta in ctx.enumerate_mu(4):
            for eta in ctx.enumerate_level(1):
                rep = fixed_points_surface(ctx, eta, zeta, with_u)
                for i, P in enumerate(rep.points):
                    for Q in rep.points[i + 1:]:
                        assert not _projectively_equal(K, P, Q)


@pytest.mark.parametrize("p,e", [(3, 1), (5, 1)])
def test_grid_matches_closed_form(p, e):
    ctx = build_tower(p, e)
    q = ctx.q
    for with_u in (True, False):
        for zeta in ctx.enumerate_mu(q + 1):
            for eta in ctx.enumerate_level(1):
                rep = fixed_points_surface(ctx, eta, zeta, with_u)
                assert rep.total == closed_form_fixed_count(ctx, eta, zeta, with_u)


def test_stratum_emptiness_pattern():
    # the big affine stratum is empty exactly when the solvability sign
    # is negative (twisted case) or eta is nonzero (untwisted case)
    ctx = build_tower(3, 1)
    for zeta in ctx.enumerate_mu(4):
        for eta in ctx.enumerate_level(1):
            rep = fixed_points_surface(ctx, eta, zeta, True)
            s1 = rep.sigma_counts.get("sigma1", 0)
            if eta.is_zero():
                continue
            solvable = nu_sign(ctx, zeta) * ctx.legendre(-eta) == 1
            assert (s1 > 0) == solvable


def test_closed_form_values():
    ctx = build_tower(3, 1)
    q = 3
    totals = set()
    for zeta in ctx.enumerate_mu(4):
        for eta in ctx.enumerate_level(1):
            totals.add(closed_form_fixed_count(ctx, eta, zeta, True))
            totals.add(closed_form_fixed_count(ctx, eta, zeta, False))
    assert totals == {2 * q * q + q + 1, q + 1, q * q + q + 1,
                      (q + 1) * (q * q + 1)}


def test_closed_form_needs_odd_p_for_twisted_nonzero_eta():
    ctx = build_tower(2, 1)
    zeta = ctx.enumerate_mu(3)[0]
    with pytest.raises(FieldError):
        closed_form_fixed_count(ctx, ctx.one(1), zeta, True)
    # the untwisted closed form works in characteristic 2
    assert closed_form_fixed_count(ctx, ctx.one(1), zeta, False) == 7


def test_zeta_outside_mu_is_rejected():
    ctx = build_tower(3, 1)
    bad = None
    one = ctx.one(2)
    for cand in ctx.enumerate_level(2):
        if not cand.is_zero() and cand ** 4 != one:
            bad = cand
            break
    with pytest.raises(FieldError):
        fixed_points_surface(ctx, ctx.zero(1), bad, True)


def test_blind_scan_agrees_with_structured_solver():
    ctx = build_tower(3, 1)
    for with_u in (True, False):
        for zeta in ctx.enumerate_mu(4):
            for eta in ctx.enumerate_level(1):
                blind = blind_fixed_point_count(ctx, eta, zeta, with_u)
                rep = fixed_points_surface(ctx, eta, zeta, with_u)
                assert blind == rep.total


def test_blind_scan_budget():
    from ffverify import BudgetExceededError
    ctx = build_tower(7, 1)
    zeta = ctx.enumerate_mu(8)[0]
    with pytest.raises(BudgetExceededError):
        blind_fixed_point_count(ctx, ctx.one(1), zeta, True)


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2),
                                 (3, 2)])
def test_differential_of_displacement_is_invertible(p, e):
    ctx = build_tower(p, e)
    assert differential_vanishes(ctx, True)
    assert differential_vanishes(ctx, False)
