"""Homogeneous bundles recorded by their T-weights, and their Chern classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .polycore import Poly
from .rootsystem import (
    Weight,
    coroot_pairing,
    normal_bundle_roots,
    parabolic_positive_roots,
    positive_roots,
    siegel_I,
    siegel_J,
)


class BundleError(ValueError):
    pass


@dataclass(frozen=True)
class HomogeneousBundle:
    g: int
    weights: tuple[Weight, ...]
    name: str = ""

    @property
    def rank(self) -> int:
        return len(self.weights)

    def determinant_weight(self) -> Weight:
        total = Weight((0,) * self.g)
        for w in self.weights:
            total = total + w
        return total

    def report(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "weights": [str(w) for w in self.weights],
            "weight_vectors": [list(w.coords) for w in self.weights],
            "chern_classes": [str(c) for c in chern_polynomial(self)],
        }


def tangent_bundle(g: int, I: Iterable[int] | None = None) -> HomogeneousBundle:
    """T_{G/P_I}: weights Phi^+ minus Phi_I^+."""
    I = siegel_I(g) if I is None else frozenset(I)
    par = set(parabolic_positive_roots(g, I))
    return HomogeneousBundle(g, tuple(a for a in positive_roots(g) if a not in par), "tangent")


def levi_tangent_bundle(g: int, I: Iterable[int] | None = None, J: Iterable[int] | None = None) -> HomogeneousBundle:
    """T_{L_J/(L_J n P_I)}: weights Phi_J^+ minus Phi_{I n J}^+."""
    I = siegel_I(g) if I is None else frozenset(I)
    J = siegel_J(g) if J is None else frozenset(J)
    par = set(parabolic_positive_roots(g, I & J))
    ws = tuple(a for a in parabolic_positive_roots(g, J) if a not in par)
    return HomogeneousBundle(g, ws, "levi_tangent")


def normal_bundle(g: int, I: Iterable[int] | None = None, J: Iterable[int] | None = None) -> HomogeneousBundle:
    I = siegel_I(g) if I is None else frozenset(I)
    J = siegel_J(g) if J is None else frozenset(J)
    return HomogeneousBundle(g, tuple(normal_bundle_roots(g, I, J)), "normal")


def hodge_bundle(g: int) -> HomogeneousBundle:
    """V(rho_Hdg), rho_Hdg the P_I-stable subspace of std^vee.

    With the lower-triangular Borel, P_I stabilises the Lagrangian spanned by
    the last g basis vectors (weights -e_i up to the similitude character),
    so its annihilator in std^vee carries the weights -e_1..-e_g.  Its
    determinant -(e_1+..+e_g) is antidominant, i.e. the line bundle is
    anti-ample.  Consequently c_i = (-1)^i lambda_i.
    """
    ws = tuple(-Weight.basis(g, i) for i in range(1, g + 1))
    return HomogeneousBundle(g, ws, "hodge")


def bundle(g: int, name: str) -> HomogeneousBundle:
    makers = {
        "tangent": tangent_bundle,
        "normal": normal_bundle,
        "hodge": hodge_bundle,
        "levi_tangent": levi_tangent_bundle,
    }
    if name not in makers:
        raise BundleError(f"unknown bundle {name!r}; expected one of {sorted(makers)}")
    return makers[name](g)


def chern_polynomial(B: HomogeneousBundle) -> list[Poly]:
    """[c_0, ..., c_r] with c_t = prod (1 + [w] t)."""
    coeffs = [Poly.one(B.g)]
    for w in B.weights:
        lin = w.to_poly()
        nxt = coeffs + [Poly.zero(B.g)]
        for k in range(len(coeffs)):
            nxt[k + 1] = nxt[k + 1] + coeffs[k] * lin
        coeffs = nxt
    return coeffs


def chern_class(B: HomogeneousBundle, k: int) -> Poly:
    if not 0 <= k <= B.rank:
        raise BundleError(f"Chern class index {k} out of range 0..{B.rank}")
    return chern_polynomial(B)[k]


def top_chern_class(B: HomogeneousBundle) -> Poly:
    return chern_class(B, B.rank)


def _convolve(a: list[Poly], b: list[Poly]) -> list[Poly]:
    g = a[0].nvars
    out = [Poly.zero(g) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def whitney_check(g: int, I: Iterable[int] | None = None, J: Iterable[int] | None = None) -> bool:
    """c_t(T_{G/P_I}) == c_t(N) * c_t(T_{L_J/(L_J n P_I)}) in S[t]."""
    lhs = chern_polynomial(tangent_bundle(g, I))
    rhs = _convolve(chern_polynomial(normal_bundle(g, I, J)), chern_polynomial(levi_tangent_bundle(g, I, J)))
    while len(rhs) > len(lhs) and rhs[-1].is_zero():
        rhs.pop()
    return lhs == rhs


def is_anti_ample_on_siegel(w: Weight) -> bool:
    """A character of P_I gives an anti-ample line bundle on G/P_I.

    Ample corresponds to dominant and regular off I, so here: orthogonal to
    the coroots in I and strictly negative on the coroot of 2e_g.
    """
    g = w.rank
    return all(coroot_pairing(w, k) == 0 for k in siegel_I(g)) and coroot_pairing(w, g) < 0
