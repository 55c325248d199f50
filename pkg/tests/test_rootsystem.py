import pytest

from siegel_chow.rootsystem import (
    RootSystemError,
    Weight,
    format_weight,
    full_subset,
    normal_bundle_roots,
    parabolic_positive_roots,
    parse_weight,
    positive_roots,
    simple_coordinates,
    simple_roots,
    siegel_I,
    siegel_J,
)


def W(text, g):
    return parse_weight(text, g)


def names(ws):
    return {format_weight(w) for w in ws}


def test_simple_roots():
    assert names(simple_roots(1)) == {"2e1"}
    assert [format_weight(w) for w in simple_roots(2)] == ["e1-e2", "2e2"]
    assert [format_weight(w) for w in simple_roots(3)] == ["e1-e2", "e2-e3", "2e3"]
    with pytest.raises(RootSystemError):
        simple_roots(0)


def _closure_oracle(g):
    """Positive roots as the non-negative integer combinations of simple roots
    that have the C_g shape (norm^2 2 or 4, entries in {-2..2})."""
    simple = simple_roots(g)
    found = set(simple)
    frontier = set(simple)
    while frontier:
        new = set()
        for a in frontier:
            for s in simple:
                b = a + s
                sq = sum(x * x for x in b.coords)
                if b not in found and sq in (2, 4) and all(abs(x) <= 2 for x in b.coords):
                    if sq == 4 and sorted(map(abs, b.coords))[-1] != 2 and sum(map(abs, b.coords)) != 2:
                        continue
                    if sq == 4 and sum(1 for x in b.coords if x) != 1:
                        continue
                    new.add(b)
        found |= new
        frontier = new
    return found


@pytest.mark.parametrize("g", range(1, 6))
def test_positive_roots(g):
    roots = positive_roots(g)
    assert len(roots) == g * g == len(set(roots))
    assert set(roots) == _closure_oracle(g)


def test_positive_roots_small():
    assert names(positive_roots(1)) == {"2e1"}
    assert names(positive_roots(2)) == {"e1-e2", "e1+e2", "2e1", "2e2"}


def test_parabolic_positive_roots_examples():
    assert names(parabolic_positive_roots(2, siegel_I(2))) == {"e1-e2"}
    assert names(parabolic_positive_roots(3, siegel_J(3))) == {"e2-e3", "e2+e3", "2e2", "2e3"}
    assert parabolic_positive_roots(2, set()) == []
    with pytest.raises(RootSystemError):
        parabolic_positive_roots(2, {3})


def test_normal_bundle_roots_examples():
    assert names(normal_bundle_roots(2, siegel_I(2), siegel_J(2))) == {"2e1", "e1+e2"}
    assert names(normal_bundle_roots(3, siegel_I(3), siegel_J(3))) == {"2e1", "e1+e2", "e1+e3"}
    assert names(normal_bundle_roots(1, siegel_I(1), siegel_J(1))) == {"2e1"}


@pytest.mark.parametrize("g", range(1, 7))
def test_cardinalities(g):
    I, J = siegel_I(g), siegel_J(g)
    PI, PJ = parabolic_positive_roots(g, I), parabolic_positive_roots(g, J)
    assert len(PI) == g * (g - 1) // 2
    assert len(PJ) == (g - 1) ** 2
    N = normal_bundle_roots(g, I, J)
    assert len(N) == g
    assert set(N) == {Weight.basis(g, 1) + Weight.basis(g, i) for i in range(1, g + 1)}
    dim_amb = g * g - len(PI)
    dim_sub = len(PJ) - len(parabolic_positive_roots(g, I & J))
    assert dim_amb == g * (g + 1) // 2
    assert dim_sub == g * (g - 1) // 2
    assert dim_amb - dim_sub == len(N)


@pytest.mark.parametrize("g", range(1, 6))
def test_parabolic_roots_are_nonnegative_combinations(g):
    for K in (siegel_I(g), siegel_J(g), full_subset(g), frozenset({1}) & full_subset(g)):
        for a in parabolic_positive_roots(g, K):
            coords = simple_coordinates(a)
            assert all(c >= 0 and c.denominator == 1 for c in coords)
            assert {k for k, c in enumerate(coords, 1) if c} <= K


def test_weight_text():
    assert format_weight(W("e1-e2", 3)) == "e1-e2"
    assert W("2e3", 3).coords == (0, 0, 2)
    assert W("-e1+e2", 2).coords == (-1, 1)
    assert format_weight(Weight((0, 0))) == "0"
    with pytest.raises(RootSystemError):
        parse_weight("e4", 3)
    assert W("e1+e2", 2).to_poly().evaluate([2, 5]) == 7
