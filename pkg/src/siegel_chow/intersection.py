"""Degree maps, Poincare pairing and the class of L_J/(L_J n P_I) in G/P_I.

Integration uses the lift rule

    int_{G/P_K} f = 1/|W_K| * int_{G/B} f * prod_{a in Phi_K^+} a,
    int_{G/B} h   = sum_w det(w) h(w.t) / prod_{a in Phi^+} a(t),

where the second line is the antisymmetrisation formula evaluated exactly at
a generic rational point t.  It is normalised so that a point has degree +1
when the tangent bundle carries the positive roots.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bundles import chern_class, hodge_bundle, normal_bundle, tangent_bundle, top_chern_class
from .chowring import (
    ChowClass,
    FlagPresentation,
    PresentationError,
    lam,
    levi_space,
    pullback,
    siegel_space,
)
from .linalg import Echelon, solve
from .polycore import Poly, format_rational
from .rootsystem import parabolic_positive_roots
from .weyl import enumerate_subgroup


class PreconditionError(ValueError):
    pass


class TheoremCheckError(AssertionError):
    pass


_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def generic_point(g: int) -> tuple[int, ...]:
    # distinct positive entries: no root t_i +- t_j or 2 t_i vanishes
    if g <= len(_PRIMES):
        return _PRIMES[:g]
    return tuple(2 * i + 1 for i in range(1, g + 1))


def _antisymmetrize(P: FlagPresentation, evaluate, t: Sequence[int]) -> Fraction:
    roots_grp = parabolic_positive_roots(P.g, P.K_grp)
    roots_par = parabolic_positive_roots(P.g, P.K_par)
    denom = 1
    for a in roots_grp:
        denom *= sum(c * x for c, x in zip(a.coords, t))
    total = Fraction(0)
    for w in enumerate_subgroup(P.g, P.K_grp):
        pt = w.act_on_point(t)
        lift = 1
        for a in roots_par:
            lift *= sum(c * x for c, x in zip(a.coords, pt))
        total += w.determinant() * evaluate(pt) * lift
    return total / (denom * len(enumerate_subgroup(P.g, P.K_par)))


def integrate_poly(P: FlagPresentation, f: Poly) -> Fraction:
    """Degree of a W_par-invariant polynomial, by the lift rule directly."""
    top = f.homogeneous_component(P.top_degree)
    return _antisymmetrize(P, top.evaluate, generic_point(P.g))


def integrate_gens(P: FlagPresentation, h: Poly) -> Fraction:
    """Degree of any (not necessarily reduced) polynomial in P's generators."""
    top = P.gen_poly({m: c for m, c in h.terms.items() if P.weighted_degree(m) == P.top_degree})
    if top.is_zero():
        return Fraction(0)

    def evaluate(pt):
        values = [x.poly.evaluate(pt) for x in P.generators]
        return top.evaluate([_as_int(v) for v in values])

    return _antisymmetrize(P, evaluate, generic_point(P.g))


def _as_int(v: Fraction):
    return v.numerator if v.denominator == 1 else v


_top_cache: dict[int, tuple] = {}


def _top_data(P: FlagPresentation) -> tuple[tuple[int, ...], Fraction]:
    hit = _top_cache.get(id(P))
    if hit is None:
        basis = P.basis(P.top_degree)
        if len(basis) != 1:
            raise PresentationError(
                f"top graded piece has dimension {len(basis)}, expected 1"
            )
        m = basis[0]
        hit = (m, integrate_gens(P, P.gen_poly({m: 1})))
        if not hit[1]:
            raise PresentationError("top standard monomial integrates to zero")
        _top_cache[id(P)] = hit
    return hit


def integrate(P: FlagPresentation, x: ChowClass) -> Fraction:
    """Linear functional A^top -> Q; classes of other degrees give 0."""
    if not P.compatible(x.presentation):
        raise PresentationError("class does not belong to this presentation")
    m, value = _top_data(P)
    return x.coords.coeff(m) * value


def point_class(P: FlagPresentation) -> ChowClass:
    m, value = _top_data(P)
    return ChowClass(P, P.gen_poly({m: 1 / value}))


@dataclass(frozen=True)
class PairingMatrix:
    presentation: FlagPresentation
    degrees: tuple[int, int]
    matrix: tuple[tuple[Fraction, ...], ...]

    def is_nondegenerate(self) -> bool:
        n = len(self.matrix)
        if any(len(r) != n for r in self.matrix):
            return False
        ech = Echelon({j: x for j, x in enumerate(r) if x} for r in self.matrix)
        return ech.rank == n


def pairing_matrix(P: FlagPresentation, d: int) -> PairingMatrix:
    left = P.basis_polys(d)
    right = P.basis_polys(P.top_degree - d)
    rows = []
    for b in left:
        xb = P.element(b)
        rows.append(tuple(integrate(P, xb * P.element(c)) for c in right))
    return PairingMatrix(P, (d, P.top_degree - d), tuple(rows))


@dataclass
class PushforwardResult:
    """iota_*(1) = a * lambda_g = a_JG * c_g(V(rho_Hdg))."""

    g: int
    pushforward: ChowClass
    a: Fraction | None
    a_hodge: Fraction | None
    proportional: bool
    details: dict = field(default_factory=dict)

    @property
    def sign_ok(self) -> bool:
        return self.a_hodge is not None and (-1) ** self.g * self.a_hodge > 0


def _ratio(x: ChowClass, y: ChowClass) -> Fraction | None:
    """The scalar r with x == r * y, or None."""
    if y.is_zero():
        return None
    m, c = next(iter(y.coords.terms.items()))
    r = x.coords.coeff(m) / c
    return r if x == y * r else None


def pushforward_unit(amb: FlagPresentation, sub: FlagPresentation) -> PushforwardResult:
    """Solve int_amb x.y = int_sub pullback(y) for y over a basis of A^{top-c}."""
    if amb.g != sub.g:
        raise PresentationError("rank mismatch")
    g = amb.g
    codim = amb.top_degree - sub.top_degree
    pm = pairing_matrix(amb, codim)
    if not pm.is_nondegenerate():
        raise PresentationError(f"Poincare pairing in degree {codim} is singular")
    rhs = []
    for c in amb.basis_polys(amb.top_degree - codim):
        rhs.append(integrate(sub, pullback(amb, sub, amb.element(c))))
    transpose = [list(col) for col in zip(*pm.matrix)] if pm.matrix else []
    sol = solve(transpose, rhs) if transpose else []
    x = amb.from_coordinates(codim, dict(enumerate(sol)))
    lam_g = lam(amb, g)
    a = _ratio(x, lam_g)
    hodge_top = amb.normal_form(top_chern_class(hodge_bundle(g)))
    a_hodge = _ratio(x, hodge_top)
    return PushforwardResult(
        g=g,
        pushforward=x,
        a=a,
        a_hodge=a_hodge,
        proportional=a is not None,
        details={"codimension": codim, "pairing": pm},
    )


def self_intersection_check(amb: FlagPresentation, sub: FlagPresentation, result: PushforwardResult | None = None) -> bool:
    """pullback(iota_*(1)) == 0 == c_g(N) in the sub presentation."""
    if result is None:
        result = pushforward_unit(amb, sub)
    restricted = pullback(amb, sub, result.pushforward)
    cN = sub.normal_form(top_chern_class(normal_bundle(amb.g)))
    return restricted.is_zero() and cN.is_zero()


def chern_vanishing(g: int) -> tuple[bool, dict]:
    """Reduce c_g(N) in A(L_J/(L_J n P_I)); returns (vanishes, trace)."""
    sub = levi_space(g)
    N = normal_bundle(g)
    cN = top_chern_class(N)
    coords = sub.to_gens(cN)
    red = sub.reduce(coords)
    trace = {
        "weights": [str(w) for w in N.weights],
        "c_top": str(cN),
        "in_generators": str(coords),
        "normal_form": str(red),
    }
    return red.is_zero(), trace


def euler_characteristic(g: int) -> Fraction:
    P = siegel_space(g)
    return integrate(P, P.normal_form(top_chern_class(tangent_bundle(g))))


def verify_theorem(g: int) -> PushforwardResult:
    """Full pipeline for rank g; raises TheoremCheckError on any failed claim."""
    if not isinstance(g, int) or g < 2:
        raise PreconditionError(
            "theorem needs g >= 2: for g = 1 the simple roots are {2e_1} and "
            "J = Delta minus {e_1 - e_2} is undefined"
        )
    t0 = time.perf_counter()
    amb = siegel_space(g)
    sub = levi_space(g)
    result = pushforward_unit(amb, sub)
    vanishes, trace = chern_vanishing(g)
    restricted = pullback(amb, sub, result.pushforward)
    result.details.update(
        {
            "dim_G/P_I": amb.top_degree,
            "dim_L_J/L_J^P_I": sub.top_degree,
            "graded_dimensions": amb.graded_dimensions(),
            "levi_graded_dimensions": sub.graded_dimensions(),
            "c_g(N)": trace,
            "restriction_of_pushforward": str(restricted),
            "hodge_top_chern": str(amb.normal_form(top_chern_class(hodge_bundle(g)))),
            "wall_time_s": time.perf_counter() - t0,
        }
    )
    problems = []
    if not result.proportional:
        problems.append(f"iota_*(1) = {result.pushforward} is not a multiple of lambda_{g}")
    if result.a == 0:
        problems.append("a = 0")
    if not result.sign_ok:
        problems.append(f"sign check failed: a_JG = {result.a_hodge}")
    if not vanishes:
        problems.append(f"c_g(N) reduces to {trace['normal_form']}, not 0")
    if not restricted.is_zero():
        problems.append(f"pullback of iota_*(1) is {restricted}, not 0")
    if problems:
        raise TheoremCheckError(f"g={g}: " + "; ".join(problems))
    return result


def theorem_report(result: PushforwardResult, timing: bool = False) -> dict:
    d = result.details
    out = {
        "g": result.g,
        "dim_G/P_I": d["dim_G/P_I"],
        "codimension": d["codimension"],
        "graded_dimensions": d["graded_dimensions"],
        "pushforward_unit": str(result.pushforward),
        "a_lambda": format_rational(result.a),
        "a_JG": format_rational(result.a_hodge),
        "hodge_top_chern": d["hodge_top_chern"],
        "c_g(N)_trace": d["c_g(N)"],
        "restriction_of_pushforward": d["restriction_of_pushforward"],
        "sign_check": "pass" if result.sign_ok else "fail",
    }
    if timing:
        out["wall_time_s"] = round(d["wall_time_s"], 3)
    return out
