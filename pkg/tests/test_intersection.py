import random
from fractions import Fraction

import pytest

from siegel_chow.bundles import hodge_bundle, tangent_bundle, top_chern_class
from siegel_chow.chowring import build_presentation, full_space, lam, levi_space, pullback, siegel_space
from siegel_chow.intersection import (
    PreconditionError,
    chern_vanishing,
    euler_characteristic,
    generic_point,
    integrate,
    integrate_poly,
    pairing_matrix,
    point_class,
    pushforward_unit,
    self_intersection_check,
    theorem_report,
    verify_theorem,
)
from siegel_chow.polycore import Poly
from siegel_chow.rootsystem import parabolic_positive_roots
from siegel_chow.weyl import act_on_poly, enumerate_subgroup

from conftest import random_poly


def _sym(P, f):
    return sum((act_on_poly(w, f) for w in enumerate_subgroup(P.g, P.K_par)), Poly.zero(P.g))


def _localization(P, f, t=(2, 7, 19, 41, 83)):
    """Atiyah-Bott style oracle: (1/|W_par|) * sum_{w in W_grp} (f / e)(w t),
    e the product of the tangent weights."""
    g = P.g
    t = t[:g]
    par = set(parabolic_positive_roots(g, P.K_par))
    tangent = [a for a in parabolic_positive_roots(g, P.K_grp) if a not in par]
    total = Fraction(0)
    for w in enumerate_subgroup(g, P.K_grp):
        pt = w.act_on_point(t)
        e = 1
        for a in tangent:
            e *= sum(c * x for c, x in zip(a.coords, pt))
        total += Fraction(f.evaluate(pt)) / e
    return total / len(enumerate_subgroup(g, P.K_par))


def test_point_class_examples():
    P1 = full_space(1)
    assert point_class(P1).to_poly() == Poly.var(1, 1)
    assert integrate(siegel_space(1), lam(siegel_space(1), 1)) == 1
    # G/B for g=2: product of positive roots over |W| = 8
    F = full_space(2)
    e1, e2 = Poly.var(2, 1), Poly.var(2, 2)
    prod = (e1 - e2) * (e1 + e2) * (2 * e1) * (2 * e2)
    assert point_class(F) == F.normal_form(prod / 8)
    assert integrate(F, point_class(F)) == 1
    L1 = levi_space(1)
    assert point_class(L1) == L1.one()


@pytest.mark.parametrize("g", range(1, 5))
def test_euler_characteristic(g):
    assert euler_characteristic(g) == 2**g


def test_non_top_degree_integrates_to_zero():
    P = siegel_space(3)
    assert integrate(P, lam(P, 1) * lam(P, 2)) == 0
    assert integrate(P, P.one()) == 0


@pytest.mark.parametrize("g", range(1, 4))
def test_integral_independent_of_representative(g):
    P = siegel_space(g)
    rng = random.Random(g)
    for _ in range(3):
        f = _sym(P, random_poly(rng, g, P.top_degree, 3))
        junk = _sym(P, random_poly(rng, g, max(P.top_degree - 2, 0), 2))
        rel = P.relation_polys[0] if P.relation_polys[0].degree() == 2 else P.relation_polys[1]
        g2 = f + rel * junk
        assert integrate(P, P.normal_form(f)) == integrate(P, P.normal_form(g2))
        assert integrate_poly(P, f) == integrate_poly(P, g2) == integrate(P, P.normal_form(f))


@pytest.mark.parametrize("maker,g", [(siegel_space, 2), (siegel_space, 3), (siegel_space, 4),
                                     (levi_space, 3), (full_space, 2)])
def test_lift_rule_matches_localization(maker, g):
    P = maker(g)
    rng = random.Random(11 * g)
    for _ in range(3):
        f = _sym(P, random_poly(rng, g, P.top_degree, 3))
        assert integrate_poly(P, f) == _localization(P, f)


def test_generic_point_avoids_root_hyperplanes():
    for g in range(1, 8):
        t = generic_point(g)
        assert len(set(t)) == g and min(t) > 0


@pytest.mark.parametrize("g", range(1, 5))
def test_pairing_nondegenerate(g):
    P = siegel_space(g)
    for d in range(P.top_degree + 1):
        assert pairing_matrix(P, d).is_nondegenerate()


def test_pairing_g2():
    P = siegel_space(2)
    assert [list(r) for r in pairing_matrix(P, 1).matrix] == [[integrate(P, lam(P, 1) * lam(P, 2))]]
    assert integrate(P, lam(P, 1) ** 3) == 2


@pytest.mark.parametrize("g", [2, 3])
def test_pushforward(g):
    amb, sub = siegel_space(g), levi_space(g)
    res = pushforward_unit(amb, sub)
    assert res.proportional
    assert res.a == 1
    assert res.pushforward == lam(amb, g)
    assert res.a_hodge == (-1) ** g
    assert res.sign_ok
    assert amb.normal_form(top_chern_class(hodge_bundle(g))) * res.a_hodge == res.pushforward


@pytest.mark.parametrize("g", [2, 3, 4])
def test_projection_formula(g):
    amb, sub = siegel_space(g), levi_space(g)
    x = pushforward_unit(amb, sub).pushforward
    rng = random.Random(g)
    for d in range(amb.top_degree + 1):
        basis = amb.basis_polys(d)
        for _ in range(2):
            y = amb.element(sum((b * rng.randint(-5, 5) for b in basis), amb.gen_poly()))
            assert integrate(amb, x * y) == integrate(sub, pullback(amb, sub, y))


@pytest.mark.parametrize("g", [2, 3, 4])
def test_self_intersection(g):
    assert self_intersection_check(siegel_space(g), levi_space(g))


def test_g1_is_excluded():
    with pytest.raises(PreconditionError):
        verify_theorem(1)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_verify_theorem(g):
    res = verify_theorem(g)
    rep = theorem_report(res)
    assert rep["a_lambda"] == "1"
    assert rep["a_JG"] == ("1" if g % 2 == 0 else "-1")
    assert rep["sign_check"] == "pass"
    assert rep["dim_G/P_I"] == g * (g + 1) // 2
    assert rep["codimension"] == g
    assert rep["c_g(N)_trace"]["normal_form"] == "0"
    assert "wall_time_s" not in rep
    assert "wall_time_s" in theorem_report(res, timing=True)


def test_chern_vanishing_trace():
    ok, trace = chern_vanishing(2)
    assert ok
    assert trace["weights"] == ["2e1", "e1+e2"]
    assert trace["c_top"] == "2*e1^2 + 2*e1*e2"
    assert trace["normal_form"] == "0"


def test_tangent_top_chern_is_euler_times_point():
    for g in range(1, 4):
        P = siegel_space(g)
        assert P.normal_form(top_chern_class(tangent_bundle(g))) == point_class(P) * 2**g


def test_other_parabolic_pair():
    # full flag variety for g=2: Euler characteristic |W| = 8
    F = full_space(2)
    B = build_presentation(2, {1, 2}, set())
    assert F is B
    assert integrate(F, F.normal_form(top_chern_class(tangent_bundle(2, set())))) == 8
