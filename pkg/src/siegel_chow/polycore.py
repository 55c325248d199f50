"""
Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` is an immutable map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  Variables default to ``e1..eg``
(the character-lattice basis); other names can be attached for polynomials
in invariant generators.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class PolyError(ValueError):
    pass


def _default_names(nvars: int) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(1, nvars + 1))


def grlex_key(exps: Exponent) -> tuple:
    return (sum(exps), exps)


class Poly:
    """Polynomial in ``nvars`` variables over Q."""

    __slots__ = ("nvars", "names", "_terms", "_hash")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[Exponent, object] | Iterable[tuple[Exponent, object]] = (),
        names: Sequence[str] | None = None,
    ):
        if nvars < 0:
            raise PolyError("nvars must be non-negative")
        self.nvars = nvars
        self.names = tuple(names) if names is not None else _default_names(nvars)
        if len(self.names) != nvars:
            raise PolyError("need one name per variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars or any(x < 0 for x in exps):
                raise PolyError(f"bad exponent vector {exps}")
            c = Fraction(c)
            if c:
                acc[exps] = acc.get(exps, 0) + c
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, nvars, terms, names):
        # trusted path: terms already canonical
        p = cls.__new__(cls)
        p.nvars = nvars
        p.names = names
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int, names=None) -> "Poly":
        return cls(nvars, {}, names)

    @classmethod
    def const(cls, nvars: int, c, names=None) -> "Poly":
        return cls(nvars, {(0,) * nvars: c}, names)

    @classmethod
    def one(cls, nvars: int, names=None) -> "Poly":
        return cls.const(nvars, 1, names)

    @classmethod
    def var(cls, nvars: int, i: int, names=None) -> "Poly":
        """The variable with 1-based index ``i``."""
        if not 1 <= i <= nvars:
            raise PolyError(f"variable index {i} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls(nvars, {tuple(exps): 1}, names)

    @classmethod
    def linear(cls, coeffs: Sequence, names=None) -> "Poly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exps = [0] * n
                exps[i] = 1
                terms[tuple(exps)] = c
        return cls(n, terms, names)

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1, names=None) -> "Poly":
        return cls(len(exps), {tuple(exps): c}, names)

    # -- basic accessors ---------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in graded-lex order, leading term first."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def leading_term(self, key=grlex_key) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise PolyError("zero polynomial has no leading term")
        exps = max(self._terms, key=key)
        return exps, self._terms[exps]

    def homogeneous_component(self, d: int) -> "Poly":
        if d < 0:
            raise PolyError("degree must be non-negative")
        return Poly._raw(
            self.nvars, {e: c for e, c in self._terms.items() if sum(e) == d}, self.names
        )

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return max(
            (sum(w * x for w, x in zip(weights, e)) for e in self._terms), default=-1
        )

    def rename(self, names: Sequence[str]) -> "Poly":
        return Poly._raw(self.nvars, self._terms, tuple(names))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise PolyError(
                    f"ambient mismatch: {self.nvars} vs {other.nvars} variables"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self._terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero(self.nvars, self.names)
            return Poly._raw(
                self.nvars, {e: c * other for e, c in self._terms.items()}, self.names
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c}, self.names)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative power")
        result = Poly.one(self.nvars, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other, self.names)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Multivariate division by a single divisor in graded-lex order."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_e, lead_c = divisor.leading_term()
        quot: dict[Exponent, Fraction] = {}
        rem: dict[Exponent, Fraction] = {}
        work = dict(self._terms)
        while work:
            e = max(work, key=grlex_key)
            c = work[e]
            if all(a >= b for a, b in zip(e, lead_e)):
                qe = tuple(a - b for a, b in zip(e, lead_e))
                qc = c / lead_c
                quot[qe] = quot.get(qe, 0) + qc
                for de, dc in divisor._terms.items():
                    te = tuple(a + b for a, b in zip(qe, de))
                    v = work.get(te, 0) - qc * dc
                    if v:
                        work[te] = v
                    else:
                        work.pop(te, None)
            else:
                rem[e] = c
                del work[e]
        return Poly(self.nvars, quot, self.names), Poly(self.nvars, rem, self.names)

    def exact_div(self, divisor: "Poly") -> "Poly":
        q, r = self.divmod(divisor)
        if r:
            raise PolyError(f"inexact division: remainder {r}")
        return q

    # -- evaluation and substitution ------------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise PolyError("point has wrong length")
        if all(isinstance(x, int) for x in point) and all(
            c.denominator == 1 for c in self._terms.values()
        ):
            return Fraction(self._evaluate_int(point))
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x**k
            total += v
        return total

    def _evaluate_int(self, point: Sequence[int]) -> int:
        top = [0] * self.nvars
        for e in self._terms:
            for i, k in enumerate(e):
                if k > top[i]:
                    top[i] = k
        powers = []
        for x, k in zip(point, top):
            row = [1]
            for _ in range(k):
                row.append(row[-1] * x)
            powers.append(row)
        total = 0
        for e, c in self._terms.items():
            v = c.numerator
            for i, k in enumerate(e):
                if k:
                    v *= powers[i][k]
            total += v
        return total

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Ring map sending variable i to ``images[i]``."""
        if len(images) != self.nvars:
            raise PolyError("need one image per variable")
        if not images:
            c = self._terms.get((), Fraction(0))
            return c
        target = images[0]
        nv, names = target.nvars, target.names
        powers: list[dict[int, Poly]] = [{0: Poly.one(nv, names)} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        out = Poly.zero(nv, names)
        for e, c in self._terms.items():
            t = Poly.const(nv, c, names)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            out = out + t
        return out

    def permute_signed(self, perm: Sequence[int], signs: Sequence[int]) -> "Poly":
        """Apply e_i -> signs[i] * e_{perm[i]} (0-based perm)."""
        out = {}
        for e, c in self._terms.items():
            new = [0] * self.nvars
            sgn = 1
            for i, k in enumerate(e):
                if k:
                    new[perm[i]] = k
                    if signs[i] < 0 and k % 2:
                        sgn = -sgn
            out[tuple(new)] = c * sgn
        return Poly._raw(self.nvars, out, self.names)

    # -- text form ---------------------------------------------------------

    def __str__(self):
        return to_string(self)

    def __repr__(self):
        return f"Poly({to_string(self)!r})"


def elementary_symmetric(k: int, variables: Iterable[int], nvars: int, names=None) -> Poly:
    """sigma_k in the chosen 1-based variables of an ``nvars``-variable ring."""
    vs = sorted(set(variables))
    if any(not 1 <= v <= nvars for v in vs):
        raise PolyError("variable index out of range")
    if not 0 <= k <= len(vs):
        raise PolyError(f"k={k} out of range for {len(vs)} variables")
    terms = {}
    for combo in combinations(vs, k):
        exps = [0] * nvars
        for v in combo:
            exps[v - 1] = 1
        terms[tuple(exps)] = 1
    return Poly(nvars, terms, names)


def power_sum(k: int, variables: Iterable[int], nvars: int) -> Poly:
    terms = {}
    for v in variables:
        exps = [0] * nvars
        exps[v - 1] = k
        terms[tuple(exps)] = 1
    return Poly(nvars, terms)


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(exps: Exponent, names) -> str:
    parts = []
    for name, k in zip(names, exps):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def to_string(p: Poly) -> str:
    """Graded-lex text form, e.g. ``e1^2 + 2*e1*e2 - 1/2``."""
    items = p.items()
    if not items:
        return "0"
    out = []
    for idx, (e, c) in enumerate(items):
        mono = _format_monomial(e, p.names)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        else:
            body = format_rational(mag)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_NUM_RE = re.compile(r"^\d+(/\d+)?$")


def parse(text: str, nvars: int | None = None, names: Sequence[str] | None = None) -> Poly:
    """Inverse of :func:`to_string`."""
    if names is None:
        if nvars is None:
            raise PolyError("need nvars or names")
        names = _default_names(nvars)
    names = tuple(names)
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    s = text.replace(" ", "")
    if not s:
        raise PolyError("empty polynomial text")
    if s == "0":
        return Poly.zero(n, names)
    pos = 0
    terms: list[tuple[Exponent, Fraction]] = []
    for m in _TERM_RE.finditer(s):
        if m.start() != pos:
            raise PolyError(f"cannot parse {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        c = Fraction(sign)
        exps = [0] * n
        for factor in m.group(2).split("*"):
            if _NUM_RE.match(factor):
                c *= Fraction(factor)
                continue
            name, _, k = factor.partition("^")
            if name not in index:
                raise PolyError(f"unknown variable {name!r}")
            exps[index[name]] += int(k) if k else 1
        terms.append((tuple(exps), c))
    if pos != len(s):
        raise PolyError(f"cannot parse {text!r}")
    return Poly(n, terms, names)
