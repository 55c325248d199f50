"""Type C_g root data in the basis e_1..e_g of the character lattice.

Simple roots are indexed 1..g: index k < g is e_k - e_{k+1}, index g is 2e_g.
A parabolic subset is a frozenset of such indices.

The Siegel pair is I = all indices but g (drop 2e_g) and J = all indices but 1
(drop the first simple root).  For g = 1 the first simple root *is* 2e_1, so
J is empty and L_J/(L_J n P_I) is a point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .polycore import Poly


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Weight:
    coords: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.coords)

    @classmethod
    def basis(cls, g: int, i: int) -> "Weight":
        c = [0] * g
        c[i - 1] = 1
        return cls(tuple(c))

    def __add__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    def to_poly(self) -> Poly:
        """The linear form [alpha] in S = Q[e_1..e_g]."""
        return Poly.linear(self.coords)

    def __str__(self) -> str:
        return format_weight(self)


def _check_rank(a: Weight, b: Weight) -> None:
    if a.rank != b.rank:
        raise RootSystemError(f"rank mismatch: {a.rank} vs {b.rank}")


def format_weight(w: Weight) -> str:
    """Human form: ``e1-e2``, ``2e3``, ``e1+e2``, ``-e1``."""
    parts = []
    for i, c in enumerate(w.coords, start=1):
        if not c:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(f"{sign}{mag}e{i}")
    return "".join(parts) or "0"


_WEIGHT_TERM = re.compile(r"([+-]?)(\d*)e(\d+)")


def parse_weight(text: str, g: int) -> Weight:
    s = text.replace(" ", "")
    if s == "0":
        return Weight((0,) * g)
    coords = [0] * g
    pos = 0
    for m in _WEIGHT_TERM.finditer(s):
        if m.start() != pos:
            raise RootSystemError(f"cannot parse weight {text!r}")
        pos = m.end()
        i = int(m.group(3))
        if not 1 <= i <= g:
            raise RootSystemError(f"e{i} out of range for rank {g}")
        k = int(m.group(2)) if m.group(2) else 1
        coords[i - 1] += -k if m.group(1) == "-" else k
    if pos != len(s):
        raise RootSystemError(f"cannot parse weight {text!r}")
    return Weight(tuple(coords))


def _check_g(g: int) -> None:
    if not isinstance(g, int) or g < 1:
        raise RootSystemError(f"rank must be a positive integer, got {g!r}")


def full_subset(g: int) -> frozenset[int]:
    _check_g(g)
    return frozenset(range(1, g + 1))


def siegel_I(g: int) -> frozenset[int]:
    return full_subset(g) - {g}


def siegel_J(g: int) -> frozenset[int]:
    return full_subset(g) - {1}


def check_subset(g: int, K: Iterable[int]) -> frozenset[int]:
    _check_g(g)
    K = frozenset(K)
    bad = [k for k in K if not (isinstance(k, int) and 1 <= k <= g)]
    if bad:
        raise RootSystemError(f"invalid simple-root indices {sorted(bad)} for rank {g}")
    return K


def simple_root(g: int, k: int) -> Weight:
    check_subset(g, [k])
    c = [0] * g
    if k < g:
        c[k - 1], c[k] = 1, -1
    else:
        c[g - 1] = 2
    return Weight(tuple(c))


def simple_roots(g: int) -> list[Weight]:
    _check_g(g)
    return [simple_root(g, k) for k in range(1, g + 1)]


def positive_roots(g: int) -> list[Weight]:
    """e_i - e_j (i<j) and e_i + e_j (i<=j), in a fixed order."""
    _check_g(g)
    roots = []
    for i in range(1, g + 1):
        for j in range(i + 1, g + 1):
            roots.append(Weight.basis(g, i) - Weight.basis(g, j))
        for j in range(i, g + 1):
            roots.append(Weight.basis(g, i) + Weight.basis(g, j))
    return roots


def simple_coordinates(w: Weight) -> tuple[Fraction, ...]:
    """Coefficients of ``w`` in the simple-root basis."""
    g = w.rank
    out = []
    run = 0
    for k in range(1, g):
        run += w.coords[k - 1]
        out.append(Fraction(run))
    out.append(Fraction(run + w.coords[g - 1], 2))
    return tuple(out)


def parabolic_positive_roots(g: int, K: Iterable[int]) -> list[Weight]:
    K = check_subset(g, K)
    out = []
    for a in positive_roots(g):
        support = {k for k, c in enumerate(simple_coordinates(a), start=1) if c}
        if support <= K:
            out.append(a)
    return out


def normal_bundle_roots(g: int, I: Iterable[int], J: Iterable[int]) -> list[Weight]:
    """Positive roots outside Phi_I^+ union Phi_J^+."""
    excluded = set(parabolic_positive_roots(g, I)) | set(parabolic_positive_roots(g, J))
    return [a for a in positive_roots(g) if a not in excluded]


def coroot_pairing(w: Weight, k: int) -> int:
    """<w, alpha_k^vee> for the simple root with index k."""
    g = w.rank
    if k < g:
        return w.coords[k - 1] - w.coords[k]
    return w.coords[g - 1]


def is_dominant(w: Weight, K: Iterable[int] | None = None) -> bool:
    ks = range(1, w.rank + 1) if K is None else K
    return all(coroot_pairing(w, k) >= 0 for k in ks)
