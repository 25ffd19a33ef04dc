"""Type A Weyl group and cocharacter lattice combinatorics.

Permutations are 1-based in one-line notation and compose right to left:
``(w * x)(i) == w(x(i))``.  Cocharacters are plain integer tuples; a
permutation acts on them by ``(w.lam)(i) = lam(w^{-1}(i))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Cochar = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..n: {self.images}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        if not 1 <= i < n:
            raise ValueError(f"simple index {i} out of range for n={n}")
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        return cls(tuple(imgs))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> Permutation:
        """Product ``s_{a_1} s_{a_2} ... s_{a_k}`` of the letters of ``word``."""
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        imgs = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                imgs[a - 1] = b
        return cls(tuple(imgs))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, w in enumerate(self.images, start=1):
            inv[w - 1] = i
        return Permutation(tuple(inv))

    def act(self, lam: Sequence[int]) -> Cochar:
        return act_on_cochar(self, lam)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    @cached_property
    def length(self) -> int:
        imgs = self.images
        return sum(1 for a in range(len(imgs)) for b in range(a + 1, len(imgs)) if imgs[a] > imgs[b])

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        return reduced_word(self)

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(self.reduced_word)

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def compose(w: Permutation, x: Permutation) -> Permutation:
    if w.n != x.n:
        raise ValueError(f"rank mismatch: {w.n} vs {x.n}")
    return Permutation(tuple(w.images[j - 1] for j in x.images))


def act_on_cochar(w: Permutation, lam: Sequence[int]) -> Cochar:
    if w.n != len(lam):
        raise ValueError(f"rank mismatch: {w.n} vs {len(lam)}")
    out = [0] * w.n
    for i, wi in enumerate(w.images):
        out[wi - 1] = lam[i]
    return tuple(out)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Greedy right-descent word: ``w == s_{a_1} ... s_{a_k}`` with ``k == length(w)``."""
    imgs = list(w.images)
    tail: list[int] = []
    while True:
        for i in range(len(imgs) - 1):
            if imgs[i] > imgs[i + 1]:
                imgs[i], imgs[i + 1] = imgs[i + 1], imgs[i]
                tail.append(i + 1)
                break
        else:
            break
    return tuple(reversed(tail))


def length(w: Permutation) -> int:
    return w.length


def support(w: Permutation) -> frozenset[int]:
    return w.support


def is_partial_coxeter(w: Permutation) -> bool:
    return w.length == len(w.support)


def is_coxeter(w: Permutation) -> bool:
    return is_partial_coxeter(w) and len(w.support) == w.n - 1


def bruhat_leq(x: Permutation, w: Permutation) -> bool:
    """Tableau criterion: sorted prefixes of ``x`` are dominated by those of ``w``."""
    if x.n != w.n:
        raise ValueError(f"rank mismatch: {x.n} vs {w.n}")
    for k in range(1, x.n):
        xs = sorted(x.images[:k])
        ws = sorted(w.images[:k])
        if any(a > b for a, b in zip(xs, ws)):
            return False
    return True


def tau(n: int) -> Permutation:
    """The Coxeter element ``s_1 s_2 ... s_{n-1}``, i.e. ``i -> i+1 (mod n)``."""
    return Permutation(tuple(list(range(2, n + 1)) + [1]))


def w_max(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def coxeter_elements(n: int) -> list[Permutation]:
    """All products of the n-1 simple reflections in every order, deduplicated."""
    from itertools import permutations

    found = {Permutation.from_word(order, n) for order in permutations(range(1, n))}
    return sorted(found, key=lambda p: p.images)


# -- cocharacters --------------------------------------------------------


def is_dominant(lam: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:]))


def is_antidominant(lam: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(lam, lam[1:]))


def pair_root(i: int, j: int, lam: Sequence[int]) -> int:
    """``<chi_{i,j}, lam>``."""
    return lam[i - 1] - lam[j - 1]


def dominant(lam: Sequence[int]) -> Cochar:
    return tuple(sorted(lam, reverse=True))


def antidominant(lam: Sequence[int]) -> Cochar:
    return tuple(sorted(lam))


def omega(k: int, n: int) -> Cochar:
    return (1,) * k + (0,) * (n - k)


def eta_act(lam: Sequence[int], k: int = 1) -> Cochar:
    """Apply ``eta^k``; one step sends ``lam`` to ``(lam(n)+1, lam(1), ..., lam(n-1))``.

    Encoding entry ``i`` with value ``v`` as ``i + n*v`` turns ``eta`` into ``+1``,
    which gives a closed form for any integer ``k``.
    """
    n = len(lam)
    out = [0] * n
    for i, v in enumerate(lam):
        code = i + n * v + k
        q, r = divmod(code, n)
        out[r] = q
    return tuple(out)


def u_of_cochar(lam: Sequence[int]) -> Permutation:
    """The Weyl element sorting ``lam`` to dominant, larger index first on ties."""
    n = len(lam)
    order = sorted(range(n), key=lambda i: (lam[i], i), reverse=True)
    return Permutation(tuple(i + 1 for i in order))


def sorting_permutation(src: Sequence[int], dst: Sequence[int], *, reverse_ties: bool = False) -> Permutation:
    """A permutation ``w`` with ``w.src == dst``; ``reverse_ties`` picks a different one when values repeat."""
    if sorted(src) != sorted(dst):
        raise ValueError(f"{tuple(dst)} is not a rearrangement of {tuple(src)}")
    n = len(src)
    pools: dict[int, list[int]] = {}
    for j in range(n):
        pools.setdefault(src[j], []).append(j + 1)
    if reverse_ties:
        for pool in pools.values():
            pool.reverse()
    # (w.src)(i) = src(w^{-1}(i)) = dst(i)
    winv = [pools[dst[i]].pop(0) for i in range(n)]
    return Permutation(tuple(winv)).inverse()


@dataclass(frozen=True)
class AffineElement:
    """``v -> finite_part(v) + translation``."""

    translation: Cochar
    finite_part: Permutation

    def __call__(self, v: Sequence[int]) -> Cochar:
        moved = act_on_cochar(self.finite_part, v)
        return tuple(a + b for a, b in zip(moved, self.translation))

    def __mul__(self, other: AffineElement) -> AffineElement:
        return AffineElement(self(other.translation), self.finite_part * other.finite_part)

    def __pow__(self, k: int) -> AffineElement:
        n = len(self.translation)
        base = self if k >= 0 else self.inverse()
        out = AffineElement((0,) * n, Permutation.identity(n))
        for _ in range(abs(k)):
            out = out * base
        return out

    def inverse(self) -> AffineElement:
        winv = self.finite_part.inverse()
        t = act_on_cochar(winv, self.translation)
        return AffineElement(tuple(-x for x in t), winv)


def eta_element(n: int) -> AffineElement:
    return AffineElement(omega(1, n), tau(n))


def b_element(n: int, m: int) -> AffineElement:
    """The superbasic element ``b = eta^m`` as (translation, finite part)."""
    return eta_element(n) ** m
