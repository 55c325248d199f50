"""The hyperoctahedral Weyl group of C_g as signed permutations."""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .polycore import Poly, PolyError
from .rootsystem import (
    RootSystemError,
    Weight,
    check_subset,
    parabolic_positive_roots,
    positive_roots,
    simple_root,
)


class WeylError(ValueError):
    pass


@dataclass(frozen=True)
class SignedPermutation:
    """w(e_i) = signs[i] * e_{perm[i]}, with 0-based ``perm``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        g = len(self.perm)
        if sorted(self.perm) != list(range(g)) or len(self.signs) != g:
            raise WeylError(f"not a signed permutation: {self.perm}, {self.signs}")
        if any(s not in (1, -1) for s in self.signs):
            raise WeylError("signs must be +1 or -1")

    @property
    def rank(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, g: int) -> "SignedPermutation":
        return cls(tuple(range(g)), (1,) * g)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition: (self * other)(x) = self(other(x))."""
        if other.rank != self.rank:
            raise WeylError("rank mismatch")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.rank))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.rank))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        g = self.rank
        perm = [0] * g
        signs = [1] * g
        for i, j in enumerate(self.perm):
            perm[j] = i
            signs[j] = self.signs[i]
        return SignedPermutation(tuple(perm), tuple(signs))

    def determinant(self) -> int:
        """(-1)^length; the sign character of W."""
        inversions = sum(
            1
            for i in range(self.rank)
            for j in range(i + 1, self.rank)
            if self.perm[i] > self.perm[j]
        )
        neg = sum(1 for s in self.signs if s < 0)
        return -1 if (inversions + neg) % 2 else 1

    def act_on_point(self, t: Sequence) -> list:
        out = [0] * self.rank
        for i, x in enumerate(t):
            out[self.perm[i]] = self.signs[i] * x
        return out

    def key(self) -> tuple:
        return (self.perm, self.signs)

    def to_2g_permutation(self) -> tuple[int, ...]:
        """The 1-based permutation of {1..2g} preserving i + (2g+1-i)."""
        g = self.rank
        n = 2 * g + 1
        sigma = [0] * (2 * g)
        for i in range(g):
            j = self.perm[i] + 1
            img = j if self.signs[i] > 0 else n - j
            sigma[i] = img
            sigma[2 * g - 1 - i] = n - img
        return tuple(sigma)

    @classmethod
    def from_2g_permutation(cls, sigma: Sequence[int]) -> "SignedPermutation":
        if len(sigma) % 2:
            raise WeylError("need a permutation of an even number of letters")
        g = len(sigma) // 2
        n = 2 * g + 1
        if sorted(sigma) != list(range(1, 2 * g + 1)):
            raise WeylError("not a permutation")
        if any(sigma[i] + sigma[2 * g - 1 - i] != n for i in range(g)):
            raise WeylError("permutation does not preserve the symplectic pairing")
        perm, signs = [], []
        for i in range(g):
            img = sigma[i]
            if img <= g:
                perm.append(img - 1)
                signs.append(1)
            else:
                perm.append(n - img - 1)
                signs.append(-1)
        return cls(tuple(perm), tuple(signs))


def simple_reflection(g: int, k: int) -> SignedPermutation:
    try:
        check_subset(g, [k])
    except RootSystemError as exc:
        raise WeylError(str(exc)) from None
    perm = list(range(g))
    signs = [1] * g
    if k < g:
        perm[k - 1], perm[k] = k, k - 1
    else:
        signs[g - 1] = -1
    return SignedPermutation(tuple(perm), tuple(signs))


def act_on_weight(w: SignedPermutation, v: Weight) -> Weight:
    if w.rank != v.rank:
        raise WeylError("rank mismatch")
    return Weight(tuple(w.act_on_point(v.coords)))


def act_on_poly(w: SignedPermutation, f: Poly) -> Poly:
    if w.rank != f.nvars:
        raise WeylError("rank mismatch")
    return f.permute_signed(w.perm, w.signs)


def length(w: SignedPermutation) -> int:
    pos = set(positive_roots(w.rank))
    return sum(1 for a in pos if act_on_weight(w, a) not in pos)


@dataclass(frozen=True)
class WeylSubgroup:
    g: int
    K: frozenset[int]
    elements: tuple[SignedPermutation, ...]
    words: dict = field(compare=False, repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w):
        return w.key() in self.words

    def word(self, w: SignedPermutation) -> tuple[int, ...]:
        return self.words[w.key()]

    def generators(self) -> list[SignedPermutation]:
        return [simple_reflection(self.g, k) for k in sorted(self.K)]


_cache: dict[tuple, WeylSubgroup] = {}
_cache_lock = threading.Lock()


def enumerate_subgroup(g: int, K: Iterable[int]) -> WeylSubgroup:
    """All of W_K by breadth-first closure, ordered by length then key."""
    K = check_subset(g, K)
    cache_key = (g, K)
    with _cache_lock:
        hit = _cache.get(cache_key)
    if hit is not None:
        return hit
    gens = [(k, simple_reflection(g, k)) for k in sorted(K)]
    start = SignedPermutation.identity(g)
    words = {start.key(): ()}
    found = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for k, s in gens:
            ws = w * s
            if ws.key() not in words:
                words[ws.key()] = words[w.key()] + (k,)
                found.append(ws)
                queue.append(ws)
    # BFS word length is the Coxeter length
    found.sort(key=lambda w: (len(words[w.key()]), w.key()))
    group = WeylSubgroup(g, K, tuple(found), words)
    with _cache_lock:
        _cache.setdefault(cache_key, group)
        return _cache[cache_key]


def is_invariant(f: Poly, g: int, K: Iterable[int]) -> bool:
    K = check_subset(g, K)
    return all(act_on_poly(simple_reflection(g, k), f) == f for k in K)


def divided_difference(k: int, f: Poly) -> Poly:
    """(f - s_k f) / alpha_k for the simple root with index k."""
    g = f.nvars
    alpha = simple_root(g, k).to_poly()
    num = f - act_on_poly(simple_reflection(g, k), f)
    try:
        return num.exact_div(alpha)
    except PolyError as exc:  # pragma: no cover - tripwire
        raise AssertionError(f"divided difference not exact: {exc}") from None


def longest_element(g: int, K: Iterable[int]) -> SignedPermutation:
    group = enumerate_subgroup(g, K)
    return group.elements[-1]


def format_word(word: Sequence[int]) -> str:
    return " ".join(f"s{k}" for k in word) if word else "id"


def describe(w: SignedPermutation, group: WeylSubgroup | None = None) -> dict:
    if group is None:
        group = enumerate_subgroup(w.rank, range(1, w.rank + 1))
    return {
        "word": format_word(group.word(w)),
        "perm": [p + 1 for p in w.perm],
        "signs": list(w.signs),
    }


def check_parabolic_length(g: int, K: Iterable[int]) -> bool:
    """Length of the longest element of W_K equals |Phi_K^+|."""
    w0 = longest_element(g, K)
    return length(w0) == len(parabolic_positive_roots(g, K))
