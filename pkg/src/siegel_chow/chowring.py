"""Borel presentations S^{W_par} / (S_+^{W_grp}) and the pullback between them.

Every presented ring is a quotient of the invariant ring S^{W_par}, which is
a free polynomial ring on explicit generators (elementary symmetric
functions per type-A block, symmetric functions of squares for the type-C
block, bare variables elsewhere).  Classes are stored as polynomials in
those generators; reduction is exact linear algebra, degree by degree,
against the span of the relation ideal.

Columns in each degree are generator monomials in decreasing lex order, so
the largest monomials become pivots and the normal form is written in the
smallest (standard) monomials.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import Echelon, nullspace, same_span
from .polycore import Poly, elementary_symmetric, format_rational
from .rootsystem import (
    check_subset,
    full_subset,
    parabolic_positive_roots,
    siegel_I,
    siegel_J,
)
from .weyl import enumerate_subgroup, is_invariant


class PresentationError(ValueError):
    pass


class NotInvariantError(PresentationError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    poly: Poly
    degree: int
    kind: str  # "A", "C" or "free"
    variables: tuple[int, ...]
    k: int


def _blocks(g: int, K: frozenset[int]) -> list[tuple[str, tuple[int, ...]]]:
    """Dynkin components of K as (kind, variables), plus untouched variables."""
    out = []
    covered: set[int] = set()
    runs: list[list[int]] = []
    for k in sorted(K):
        if runs and runs[-1][-1] == k - 1:
            runs[-1].append(k)
        else:
            runs.append([k])
    for run in runs:
        a, b = run[0], run[-1]
        if b == g:
            vs = tuple(range(a, g + 1))
            out.append(("C", vs))
        else:
            vs = tuple(range(a, b + 2))
            out.append(("A", vs))
        covered.update(vs)
    for i in range(1, g + 1):
        if i not in covered:
            out.append(("free", (i,)))
    out.sort(key=lambda kv: kv[1][0])
    return out


def _default_name(g: int, kind: str, vs: tuple[int, ...], k: int) -> str:
    if kind == "free":
        return f"e{vs[0]}"
    if kind == "A":
        if vs == tuple(range(1, g + 1)):
            return f"lam{k}"
        if vs == tuple(range(2, g + 1)):
            return f"lamt{k}"
        return f"s{vs[0]}x{vs[-1]}_{k}"
    return f"q{vs[0]}_{k}"


def invariant_generators(g: int, K: Iterable[int], names: Sequence[str] | None = None) -> list[Generator]:
    """Algebra generators of S^{W_K}, block by block from e_1 to e_g."""
    K = check_subset(g, K)
    gens = []
    for kind, vs in _blocks(g, K):
        if kind == "free":
            p = Poly.var(g, vs[0])
            gens.append(Generator("", p, 1, kind, vs, 1))
        elif kind == "A":
            for k in range(1, len(vs) + 1):
                gens.append(Generator("", elementary_symmetric(k, vs, g), k, kind, vs, k))
        else:
            squares = [Poly.var(g, v) ** 2 for v in vs]
            for k in range(1, len(vs) + 1):
                sig = elementary_symmetric(k, range(1, len(vs) + 1), len(vs))
                gens.append(Generator("", sig.substitute(squares), 2 * k, kind, vs, k))
    if names is None:
        names = [_default_name(g, x.kind, x.variables, x.k) for x in gens]
    if len(names) != len(gens):
        raise PresentationError(f"expected {len(gens)} generator names")
    return [
        Generator(n, x.poly, x.degree, x.kind, x.variables, x.k) for n, x in zip(names, gens)
    ]


def _weighted_monomials(weights: Sequence[int], d: int) -> list[tuple[int, ...]]:
    """Exponent vectors m with sum(weights[i] * m[i]) == d."""
    n = len(weights)
    out: list[tuple[int, ...]] = []

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                out.append(tuple(acc))
            return
        w = weights[i]
        for m in range(left // w + 1):
            acc.append(m)
            rec(i + 1, left - m * w, acc)
            acc.pop()

    rec(0, d, [])
    return out


class FlagPresentation:
    """The graded ring S^{W_par}/(S_+^{W_grp}) for K_par within K_grp."""

    def __init__(
        self,
        g: int,
        K_grp: Iterable[int],
        K_par: Iterable[int],
        names: Sequence[str] | None = None,
        label: str | None = None,
        relation_source: str = "invariants",
    ):
        K_grp = check_subset(g, K_grp)
        K_par = check_subset(g, K_par)
        if not K_par <= K_grp:
            raise PresentationError(f"parabolic subset {sorted(K_par)} not inside {sorted(K_grp)}")
        self.g = g
        self.K_grp = K_grp
        self.K_par = K_par
        self.label = label or f"K_grp={sorted(K_grp)},K_par={sorted(K_par)}"
        self.generators = invariant_generators(g, K_par, names)
        self.names = tuple(x.name for x in self.generators)
        self.weights = tuple(x.degree for x in self.generators)
        self.top_degree = len(parabolic_positive_roots(g, K_grp)) - len(
            parabolic_positive_roots(g, K_par)
        )
        self._lock = threading.RLock()
        self._expansions: dict[tuple[int, ...], Poly] = {}
        self._degrees: dict[int, tuple] = {}
        self.relation_source = relation_source
        if relation_source == "invariants":
            self.relation_polys = [x.poly for x in invariant_generators(g, K_grp)]
            self.relations = [self.to_gens(p) for p in self.relation_polys]
        elif relation_source == "master":
            self.relations = master_relations(self)
            self.relation_polys = [self.expand(r) for r in self.relations]
        else:
            raise PresentationError(f"unknown relation source {relation_source!r}")

    def __repr__(self):
        return f"FlagPresentation(g={self.g}, {self.label})"

    # -- generator coordinates ---------------------------------------------

    def gen_poly(self, terms=()) -> Poly:
        return Poly(len(self.generators), terms, self.names)

    def gen(self, name_or_index) -> Poly:
        i = self.names.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return Poly.var(len(self.generators), i + 1, self.names)

    def weighted_degree(self, m: Sequence[int]) -> int:
        return sum(w * x for w, x in zip(self.weights, m))

    def expand_monomial(self, m: tuple[int, ...]) -> Poly:
        with self._lock:
            hit = self._expansions.get(m)
        if hit is not None:
            return hit
        if not any(m):
            out = Poly.one(self.g)
        else:
            i = max(j for j, x in enumerate(m) if x)
            prev = list(m)
            prev[i] -= 1
            out = self.expand_monomial(tuple(prev)) * self.generators[i].poly
        with self._lock:
            self._expansions[m] = out
        return out

    def expand(self, h: Poly) -> Poly:
        """Polynomial in generators -> polynomial in e_1..e_g."""
        out = Poly.zero(self.g)
        for m, c in h.terms.items():
            out = out + self.expand_monomial(m) * c
        return out

    def _lead_to_exponents(self, lead: tuple[int, ...]) -> tuple[int, ...]:
        m = []
        for x in self.generators:
            vs = x.variables
            if x.kind == "free":
                m.append(lead[vs[0] - 1])
                continue
            pos = x.k - 1
            hi = lead[vs[pos] - 1]
            lo = lead[vs[pos + 1] - 1] if pos + 1 < len(vs) else 0
            diff = hi - lo
            if x.kind == "C":
                if diff % 2:
                    raise NotInvariantError("odd exponent in a type C block")
                diff //= 2
            if diff < 0:
                raise NotInvariantError("leading exponents not dominant")
            m.append(diff)
        return tuple(m)

    def to_gens(self, f: Poly) -> Poly:
        """Write a W_par-invariant polynomial in the generators.

        Classical leading-term elimination in lex order: the lex-leading
        monomial of a product of generators is the product of their leading
        monomials, each with coefficient 1.
        """
        if f.nvars != self.g:
            raise PresentationError("polynomial has wrong number of variables")
        work = f
        out: dict[tuple[int, ...], Fraction] = {}
        while work:
            lead, c = work.leading_term(key=lambda e: e)
            try:
                m = self._lead_to_exponents(lead)
            except NotInvariantError:
                raise NotInvariantError(f"{f} is not invariant under W_{sorted(self.K_par)}") from None
            exp = self.expand_monomial(m)
            if exp.coeff(lead) != 1:
                raise NotInvariantError(f"{f} is not invariant under W_{sorted(self.K_par)}")
            out[m] = out.get(m, 0) + c
            work = work - exp * c
        return self.gen_poly(out)

    # -- degreewise linear algebra -----------------------------------------

    def _degree(self, d: int):
        with self._lock:
            hit = self._degrees.get(d)
            if hit is not None:
                return hit
            if d < 0:
                data = ([], {}, Echelon())
                self._degrees[d] = data
                return data
            cols = sorted(_weighted_monomials(self.weights, d), reverse=True)
            index = {m: i for i, m in enumerate(cols)}
            ech = Echelon()
            # I_d = sum_i gen_i * I_{d - deg gen_i} + span of degree-d relations
            for i, w in enumerate(self.weights):
                if d - w < 0:
                    continue
                lower_cols, _, lower = self._degree(d - w)
                for row in lower.rows():
                    shifted = {}
                    for c, x in row.items():
                        m = list(lower_cols[c])
                        m[i] += 1
                        shifted[index[tuple(m)]] = x
                    ech.add(shifted)
            for r in self.relations:
                comp = {m: c for m, c in r.terms.items() if self.weighted_degree(m) == d}
                if comp:
                    ech.add({index[m]: c for m, c in comp.items()})
            data = (cols, index, ech)
            self._degrees[d] = data
            return data

    def build(self, max_degree: int | None = None) -> "FlagPresentation":
        top = self.top_degree if max_degree is None else max_degree
        for d in range(top + 1):
            self._degree(d)
        return self

    def basis(self, d: int) -> list[tuple[int, ...]]:
        """Standard monomials spanning A^d, largest first."""
        cols, _, ech = self._degree(d)
        return [m for i, m in enumerate(cols) if i not in ech.pivots]

    def basis_polys(self, d: int) -> list[Poly]:
        return [self.gen_poly({m: 1}) for m in self.basis(d)]

    def graded_dimension(self, d: int) -> int:
        if d < 0:
            return 0
        cols, _, ech = self._degree(d)
        return len(cols) - ech.rank

    def graded_dimensions(self) -> list[int]:
        return [self.graded_dimension(d) for d in range(self.top_degree + 1)]

    def total_dimension(self) -> int:
        return sum(self.graded_dimensions())

    def reduce(self, h: Poly) -> Poly:
        """Normal form of a polynomial in the generators."""
        if h.nvars != len(self.generators):
            raise PresentationError("polynomial is not in this presentation's generators")
        by_degree: dict[int, dict[tuple[int, ...], Fraction]] = {}
        for m, c in h.terms.items():
            by_degree.setdefault(self.weighted_degree(m), {})[m] = c
        out = {}
        for d, comp in by_degree.items():
            cols, index, ech = self._degree(d)
            red = ech.reduce({index[m]: c for m, c in comp.items()})
            for i, c in red.items():
                out[cols[i]] = c
        return self.gen_poly(out)

    def coordinates(self, x: "ChowClass", d: int) -> dict[int, Fraction]:
        """Sparse coordinates of the degree-d part of x in basis(d)."""
        pos = {m: i for i, m in enumerate(self.basis(d))}
        return {pos[m]: c for m, c in x.coords.terms.items() if self.weighted_degree(m) == d}

    def from_coordinates(self, d: int, vec) -> "ChowClass":
        b = self.basis(d)
        items = vec.items() if isinstance(vec, dict) else enumerate(vec)
        return ChowClass(self, self.gen_poly({b[i]: c for i, c in items if c}))

    # -- classes -----------------------------------------------------------

    def element(self, h: Poly) -> "ChowClass":
        return ChowClass(self, self.reduce(h))

    def one(self) -> "ChowClass":
        return self.element(self.gen_poly({(0,) * len(self.generators): 1}))

    def zero(self) -> "ChowClass":
        return ChowClass(self, self.gen_poly())

    def normal_form(self, f: Poly) -> "ChowClass":
        """F_0: a W_par-invariant polynomial in e_1..e_g to its class."""
        if not is_invariant(f, self.g, self.K_par):
            raise NotInvariantError(f"{f} is not invariant under W_{sorted(self.K_par)}")
        return self.element(self.to_gens(f))

    def compatible(self, other: "FlagPresentation") -> bool:
        return (
            self.g == other.g
            and self.K_grp == other.K_grp
            and self.K_par == other.K_par
            and self.names == other.names
        )

    def report(self) -> dict:
        return {
            "g": self.g,
            "space": self.label,
            "group_subset": sorted(self.K_grp),
            "parabolic_subset": sorted(self.K_par),
            "generators": [
                {"name": x.name, "degree": x.degree, "poly": str(x.poly)} for x in self.generators
            ],
            "relations": [str(r) for r in self.relations],
            "dimension": self.top_degree,
            "graded_dimensions": self.graded_dimensions(),
            "basis": {
                str(d): [str(p) for p in self.basis_polys(d)] for d in range(self.top_degree + 1)
            },
        }


@dataclass(frozen=True, eq=False)
class ChowClass:
    presentation: FlagPresentation
    coords: Poly

    def _check(self, other: "ChowClass") -> None:
        if not self.presentation.compatible(other.presentation):
            raise PresentationError("classes live in different presentations")

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        return ChowClass(self.presentation, self.coords + other.coords)

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        return ChowClass(self.presentation, self.coords - other.coords)

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.presentation, -self.coords)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.presentation, self.coords * other)
        self._check(other)
        return self.presentation.element(self.coords * other.coords)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ChowClass":
        out = self.presentation.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.presentation.compatible(other.presentation) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return self.coords.is_zero()

    @property
    def degree(self) -> int | None:
        """Degree if homogeneous (None for zero or mixed classes)."""
        ds = {self.presentation.weighted_degree(m) for m in self.coords.terms}
        return ds.pop() if len(ds) == 1 else None

    def component(self, d: int) -> "ChowClass":
        P = self.presentation
        return ChowClass(
            P, P.gen_poly({m: c for m, c in self.coords.terms.items() if P.weighted_degree(m) == d})
        )

    def to_poly(self) -> Poly:
        return self.presentation.expand(self.coords)

    def __str__(self):
        return str(self.coords)

    def __repr__(self):
        return f"ChowClass({self.coords}, {self.presentation!r})"


# -- named spaces --------------------------------------------------------------

_space_cache: dict[tuple, FlagPresentation] = {}
_space_lock = threading.Lock()


def build_presentation(
    g: int,
    K_grp: Iterable[int],
    K_par: Iterable[int],
    names: Sequence[str] | None = None,
    label: str | None = None,
    relation_source: str = "invariants",
) -> FlagPresentation:
    """Cached constructor; repeated calls share one presentation object."""
    key = (g, frozenset(K_grp), frozenset(K_par), tuple(names) if names else None, relation_source)
    with _space_lock:
        hit = _space_cache.get(key)
    if hit is not None:
        return hit
    P = FlagPresentation(g, K_grp, K_par, names, label, relation_source)
    with _space_lock:
        return _space_cache.setdefault(key, P)


def siegel_space(g: int, relation_source: str = "invariants") -> FlagPresentation:
    """A(G/P_I): the Lagrangian Grassmannian, generators lam1..lamg."""
    names = [f"lam{k}" for k in range(1, g + 1)]
    return build_presentation(g, full_subset(g), siegel_I(g), names, "siegel", relation_source)


def levi_space(g: int, relation_source: str = "invariants") -> FlagPresentation:
    """A(L_J/L_J n P_I): generators e1 and lamt_k = sigma_k(e_2..e_g)."""
    names = ["e1"] + [f"lamt{k}" for k in range(1, g)]
    J = siegel_J(g)
    return build_presentation(g, J, siegel_I(g) & J, names, "levi", relation_source)


def full_space(g: int) -> FlagPresentation:
    """A(G/B) with generators e1..eg."""
    return build_presentation(g, full_subset(g), frozenset(), None, "full")


def space(g: int, name: str) -> FlagPresentation:
    try:
        return {"siegel": siegel_space, "levi": levi_space, "full": full_space}[name](g)
    except KeyError:
        raise PresentationError(f"unknown space {name!r}; expected siegel, levi or full") from None


def lam(P: FlagPresentation, i: int) -> ChowClass:
    """The class of sigma_i(e_1..e_g) in P."""
    if i == 0:
        return P.one()
    return P.normal_form(elementary_symmetric(i, range(1, P.g + 1), P.g))


def master_relation(n: int, names: Sequence[str], offset: int = 0, total: int | None = None) -> Poly:
    """(1 + x_1 + ... + x_n)(1 - x_1 + ... + (-1)^n x_n) - 1 in variables x."""
    total = n if total is None else total
    one = Poly.one(total, names)
    plus = one
    minus = one
    for k in range(1, n + 1):
        x = Poly.var(total, offset + k, names)
        plus = plus + x
        minus = minus + x * (-1) ** k
    return plus * minus - one


def master_relations(P: FlagPresentation) -> list[Poly]:
    """Relations from the master identity, in P's generators.

    Defined when K_grp = {a..g} and K_par = K_grp minus {g} (the Siegel and
    Levi spaces): bare variables e_1..e_{a-1} are relations on their own and
    the type-A block on e_a..e_g contributes the homogeneous components of
    the master relation.
    """
    g = P.g
    n = len(P.generators)
    if not P.K_grp:
        return [P.gen(i) for i in range(n)]
    a = min(P.K_grp)
    if P.K_grp != frozenset(range(a, g + 1)) or P.K_par != P.K_grp - {g}:
        raise PresentationError("master relation only available for the siegel and levi spaces")
    block = [i for i, x in enumerate(P.generators) if x.variables[0] >= a]
    out = [P.gen(i) for i in range(n) if i not in block]
    rel = master_relation(len(block), P.names, block[0], n)
    for d in range(2, 2 * len(block) + 1, 2):
        out.append(P.gen_poly({m: c for m, c in rel.terms.items() if P.weighted_degree(m) == d}))
    return out


def pullback(amb: FlagPresentation, sub: FlagPresentation, x: ChowClass) -> ChowClass:
    """Restriction along L_J/(L_J n P) -> G/P: re-reduce in the finer quotient."""
    _check_pullback_pair(amb, sub)
    if not amb.compatible(x.presentation):
        raise PresentationError("class does not live in the ambient presentation")
    images = _generator_images(amb, sub)
    return sub.element(x.coords.substitute(images))


pullback_iota = pullback


def _check_pullback_pair(amb: FlagPresentation, sub: FlagPresentation) -> None:
    if amb.g != sub.g:
        raise PresentationError("rank mismatch")
    if not (sub.K_grp <= amb.K_grp and sub.K_par == amb.K_par & sub.K_grp):
        raise PresentationError("presentations do not form an L_J/(L_J n P) -> G/P pair")


def _generator_images(amb: FlagPresentation, sub: FlagPresentation) -> list[Poly]:
    key = (id(amb), id(sub))
    hit = _image_cache.get(key)
    if hit is None:
        hit = [sub.to_gens(x.poly) for x in amb.generators]
        _image_cache[key] = hit
    return hit


_image_cache: dict[tuple[int, int], list[Poly]] = {}


def pullback_matrix(amb: FlagPresentation, sub: FlagPresentation, d: int) -> list[dict[int, Fraction]]:
    """Images of basis(d) of amb as sparse coordinate vectors in sub."""
    cols = []
    for b in amb.basis_polys(d):
        y = pullback(amb, sub, amb.element(b))
        cols.append(sub.coordinates(y, d))
    return cols


def pullback_is_surjective(amb: FlagPresentation, sub: FlagPresentation, d: int) -> bool:
    ech = Echelon(pullback_matrix(amb, sub, d))
    return ech.rank == sub.graded_dimension(d)


def kernel_generator_check(
    amb: FlagPresentation,
    sub: FlagPresentation,
    max_degree: int | None = None,
    generator: Poly | None = None,
) -> bool:
    """Degreewise: ker(pullback) == the ideal generated by ``generator``.

    ``generator`` defaults to lambda_g.
    """
    g = amb.g
    if generator is None:
        generator = elementary_symmetric(g, range(1, g + 1), g)
    gen_class = amb.normal_form(generator)
    gdeg = gen_class.degree
    top = amb.top_degree if max_degree is None else max_degree
    for d in range(top + 1):
        kernel = nullspace(pullback_matrix(amb, sub, d), amb.graded_dimension(d))
        ideal = []
        if gdeg is not None and d >= gdeg:
            for b in amb.basis_polys(d - gdeg):
                ideal.append(amb.coordinates(gen_class * amb.element(b), d))
        if not same_span(kernel, ideal):
            return False
    return True


def elementary_in_squares(g: int, l: int) -> Poly:
    squares = [Poly.var(g, i) ** 2 for i in range(1, g + 1)]
    return elementary_symmetric(l, range(1, g + 1), g).substitute(squares)


def symmetric_identity_sides(g: int, l: int) -> tuple[Poly, Poly]:
    if not 1 <= l < g:
        raise PresentationError(f"need 1 <= l < g, got l={l}, g={g}")
    lhs = elementary_in_squares(g, l) * (-1) ** l
    rhs = Poly.zero(g)
    for i in range(0, 2 * l + 1):
        j = 2 * l - i
        if i > g or j > g:
            continue
        sig = elementary_symmetric(i, range(1, g + 1), g) * elementary_symmetric(j, range(1, g + 1), g)
        rhs = rhs + sig * (-1) ** j
    return lhs, rhs


def verify_symmetric_identity(g: int, l: int) -> bool:
    """(-1)^l sigma_l(x^2) == sum_{i+j=2l} (-1)^j sigma_i sigma_j, exactly."""
    lhs, rhs = symmetric_identity_sides(g, l)
    return lhs == rhs


def relation_sources_agree(P_inv: FlagPresentation, P_master: FlagPresentation) -> bool:
    """Both relation generating sets span the same ideal in every degree."""
    for d in range(P_inv.top_degree + 2 * P_inv.g + 1):
        a = P_inv._degree(d)[2].rows()
        b = P_master._degree(d)[2].rows()
        if not same_span(a, b):
            return False
    return True


def poincare_product(g: int) -> list[int]:
    """Coefficients of prod_{i=1..g} (1 + t^i)."""
    coeffs = [1]
    for i in range(1, g + 1):
        nxt = coeffs + [0] * i
        for k, c in enumerate(coeffs):
            nxt[k + i] += c
        coeffs = nxt
    return coeffs


@lru_cache(maxsize=None)
def weyl_index(g: int, K_grp: frozenset, K_par: frozenset) -> int:
    return len(enumerate_subgroup(g, K_grp)) // len(enumerate_subgroup(g, K_par))


def format_class(x: ChowClass) -> str:
    return str(x.coords)


__all__ = [
    "ChowClass",
    "FlagPresentation",
    "Generator",
    "NotInvariantError",
    "PresentationError",
    "build_presentation",
    "elementary_in_squares",
    "format_class",
    "format_rational",
    "full_space",
    "invariant_generators",
    "kernel_generator_check",
    "lam",
    "levi_space",
    "master_relation",
    "master_relations",
    "poincare_product",
    "pullback",
    "pullback_iota",
    "pullback_is_surjective",
    "pullback_matrix",
    "relation_sources_agree",
    "siegel_space",
    "space",
    "symmetric_identity_sides",
    "verify_symmetric_identity",
    "weyl_index",
]
