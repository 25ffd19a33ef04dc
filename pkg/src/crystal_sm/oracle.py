"""Brute-force verifiers, independent of the construction in :mod:`construct`."""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from . import crystal as cr
from . import kernels
from .lattice import Cochar, Permutation, act_on_cochar, tau, u_of_cochar
from .stratum import CocharTuple, SuperbasicData, eta_class, mu_fareastern

__all__ = [
    "ScaleGuardError", "NieError", "kostka", "ssyt", "flat_tuples",
    "enumerate_top_bruteforce", "BruteForceResult", "TopClass",
    "nie_words", "upsilon_fullscan", "tensor_rule", "coxeter_successive", "CensusRow",
]

SCALE_ENV = "CRYSTAL_SM_SCALE_OVERRIDE"
MAX_SEARCH = 50_000_000  # flat tuples x candidate rows
MAX_FACTORIAL = 720


class ScaleGuardError(RuntimeError):
    pass


class NieError(ValueError):
    pass


def _guard(estimate: int, limit: int, what: str) -> None:
    if estimate > limit and not os.environ.get(SCALE_ENV):
        raise ScaleGuardError(f"{what}: estimated {estimate} exceeds guard {limit} (set {SCALE_ENV}=1 to lift)")


# -- semistandard tableaux -------------------------------------------------


def _strips(shape: tuple[int, ...], size: int, n: int) -> Iterator[tuple[int, ...]]:
    """Shapes obtained from ``shape`` by adding a horizontal strip of ``size`` boxes."""
    rows = list(shape) + [0] * (n - len(shape))

    def rec(r: int, left: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if r == n:
            if left == 0:
                yield tuple(acc)
            return
        cap = rows[r - 1] - rows[r] if r > 0 else left
        for add in range(min(cap, left), -1, -1):
            yield from rec(r + 1, left - add, acc + [rows[r] + add])

    yield from rec(0, size, [])


def kostka(mu: Sequence[int], lam: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape ``mu`` and content ``lam``."""
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        raise ValueError(f"|mu| = {sum(mu)} differs from |lam| = {sum(lam)}")
    n = len(lam)

    @lru_cache(maxsize=None)
    def count(shape: tuple[int, ...], k: int) -> int:
        if k == n:
            return int(shape == mu)
        total = 0
        for nxt in _strips(shape, lam[k], n):
            if all(a <= b for a, b in zip(nxt, mu)):
                total += count(nxt, k + 1)
        return total

    return count((0,) * n, 0)


def ssyt(mu: Sequence[int], n: int, content: Optional[Sequence[int]] = None) -> list[cr.Tableau]:
    """All semistandard tableaux of shape ``mu`` with entries in ``1..n`` (optionally fixed content)."""
    shape = tuple(x for x in mu if x > 0)
    out = []

    def rec(k: int, cur: tuple[int, ...], rows: list[list[int]]) -> None:
        if k > n:
            if cur == shape + (0,) * (len(cur) - len(shape)):
                out.append(cr.Tableau(tuple(tuple(r) for r in rows if r), n))
            return
        sizes = [content[k - 1]] if content is not None else range(sum(shape) - sum(cur) + 1)
        for size in sizes:
            for nxt in _strips(cur, size, max(len(shape), 1)):
                if any(a > b for a, b in zip(nxt, shape)):
                    continue
                new_rows = [r + [k] * (nxt[i] - len(r)) for i, r in enumerate(rows)]
                rec(k + 1, nxt, new_rows)

    rows0 = [[] for _ in range(max(len(shape), 1))]
    rec(1, (0,) * max(len(shape), 1), rows0)
    return sorted(out, key=lambda t: [x for r in t.rows for x in r])


# -- minuscule tuples --------------------------------------------------------


def flat_tuples(ks: Sequence[int], lam: Sequence[int]) -> list[tuple[Cochar, ...]]:
    """Tuples of 0/1 vectors, part ``j`` with ``ks[j]`` ones, summing to ``lam``."""
    n = len(lam)
    out = []

    def rec(j: int, left: list[int], acc: list[Cochar]) -> None:
        if j == len(ks):
            if not any(left):
                out.append(tuple(acc))
            return
        # remaining parts can add at most one per slot each
        rest = len(ks) - j - 1
        for pos in itertools.combinations(range(n), ks[j]):
            vec = [0] * n
            for p in pos:
                vec[p] = 1
            nl = [a - b for a, b in zip(left, vec)]
            if min(nl) < 0 or max(nl) > rest or sum(nl) != sum(ks[j + 1:]):
                continue
            rec(j + 1, nl, acc + [tuple(vec)])

    rec(0, list(lam), [])
    return out


@lru_cache(maxsize=16)
def _candidates(n: int, bound: int) -> np.ndarray:
    grid = np.array(list(itertools.product(range(bound + 1), repeat=n)), dtype=np.int64)
    return np.ascontiguousarray(grid[grid.min(axis=1) == 0])


@dataclass(frozen=True)
class TopClass:
    rep: tuple[Cochar, ...]
    beta: tuple[Cochar, ...]
    mu_prime: Cochar
    tableau: cr.Tableau


@dataclass
class BruteForceResult:
    n: int
    m: int
    mu: Cochar
    classes: list[TopClass]
    classes_per_beta: dict[tuple[Cochar, ...], int]
    bound: int
    widened: bool = False

    def projecting_to(self, mu: Sequence[int]) -> list[TopClass]:
        mu = tuple(mu)
        return [c for c in self.classes if c.mu_prime == mu]


def _search_beta(beta: tuple[Cochar, ...], data: SuperbasicData, bound: int, hits_fn) -> np.ndarray:
    cands = _candidates(data.n, bound)
    idx = hits_fn(np.ascontiguousarray(np.array(beta, dtype=np.int64)), cands, data.m)
    return cands[idx]


def enumerate_top_bruteforce(
    mu: Sequence[int],
    data: SuperbasicData,
    *,
    bound: Optional[int] = None,
    max_bound: Optional[int] = None,
    backend: Optional[str] = None,
) -> BruteForceResult:
    """All eta-classes of top tuples, found by scanning first cocharacters in a box.

    For each flat tuple ``beta`` of weight ``lambda_b`` and each ``lambda_1`` in
    ``[0, bound]^n`` with a zero entry, ``lambda_{l+1} = lambda_l + u_{lambda_l} beta_l``
    is propagated and kept when ``b lambda_1 - lambda_d = u_{lambda_d} beta_d``.
    The box is widened whenever a hit touches its boundary or a ``beta`` has no hit.
    """
    mu = tuple(mu)
    n = data.n
    ks = mu_fareastern(mu)
    betas = flat_tuples(ks, data.lambda_b)
    bound = data.m + n if bound is None else bound
    max_bound = 2 * (data.m + n) if max_bound is None else max_bound
    _guard(len(betas) * (bound + 1) ** n, MAX_SEARCH, "enumerate_top_bruteforce")
    hits_fn = {None: kernels.closure_hits, "numpy": kernels.closure_hits_py}.get(backend, kernels.closure_hits)

    classes: dict[tuple[Cochar, ...], TopClass] = {}
    per_beta: dict[tuple[Cochar, ...], int] = {}
    widened = False
    used_bound = bound
    for beta in betas:
        b = bound
        while True:
            rows = _search_beta(beta, data, b, hits_fn)
            touches = rows.size and int(rows.max()) >= b
            if (touches or rows.size == 0) and b < max_bound:
                b = min(b + n, max_bound)
                widened = True
                continue
            break
        used_bound = max(used_bound, b)
        mu_prime, tab = cr.project_to_highest(cr.flat_to_tensor(beta))
        reps = set()
        for row in rows:
            lams = [tuple(int(x) for x in row)]
            for part in beta[:-1]:
                lam = lams[-1]
                step = act_on_cochar(u_of_cochar(lam), part)
                lams.append(tuple(a + c for a, c in zip(lam, step)))
            rep, _ = eta_class(CocharTuple(tuple(lams), data, mu))
            reps.add(rep)
        per_beta[beta] = len(reps)
        for rep in reps:
            classes[rep] = TopClass(rep, beta, mu_prime, tab)
    ordered = [classes[k] for k in sorted(classes)]
    return BruteForceResult(n, data.m, mu, ordered, per_beta, used_bound, widened)


# -- Nie's recursion ----------------------------------------------------------


def _codes(lam: Sequence[int]) -> list[int]:
    """``a_i = u(i) + n lam(u(i))`` for ``u = u_lam``, a strictly decreasing list."""
    n = len(lam)
    u = u_of_cochar(lam)
    return [u(i) + n * lam[u(i) - 1] for i in range(1, n + 1)]


def nie_words(lt: CocharTuple) -> tuple[Permutation, ...]:
    """Solve ``a_{j,i} = a_{j+1, w_j(i)} - n flat_j(i)`` (``+ m`` and wrap-around at ``j = d``)."""
    n, m, d = lt.data.n, lt.data.m, lt.d
    flat = lt.flat
    codes = [_codes(lam) for lam in lt.lambdas]
    out = []
    for j in range(d):
        nxt = codes[(j + 1) % d]
        where = {a: k + 1 for k, a in enumerate(nxt)}
        shift = -m if j == d - 1 else 0
        imgs = []
        for i in range(n):
            want = codes[j][i] + n * flat[j][i] + shift
            if want not in where:
                raise NieError(f"no solution for w'_{j + 1}({i + 1})")
            imgs.append(where[want])
        try:
            out.append(Permutation(tuple(imgs)))
        except ValueError as exc:
            raise NieError(str(exc)) from exc
    return tuple(out)


def upsilon_fullscan(w_b: Permutation, data: SuperbasicData, *, max_factorial: int = MAX_FACTORIAL) -> set[Permutation]:
    n = data.n
    _guard(math.factorial(n), max_factorial, "upsilon_fullscan")
    tm = tau(n) ** data.m
    out = set()
    for imgs in itertools.permutations(range(1, n + 1)):
        u = Permutation(imgs)
        if u.inverse() * tm * u == w_b:
            out.add(u)
    return out


# -- tensor product rule --------------------------------------------------------


def _box_eps_phi(x: int, i: int) -> tuple[int, int]:
    return int(x == i + 1), int(x == i)


def tensor_rule(boxes: Sequence[int], i: int) -> tuple[int, int, Optional[int], Optional[int]]:
    """``(eps, phi, e_pos, f_pos)`` via the two-factor tensor rule, grouping left to right.

    ``e_pos``/``f_pos`` are the box positions changed by ``e_i``/``f_i`` (None if the result is 0).
    """
    N = len(boxes)
    eps = [0] * (N + 1)
    phi = [0] * (N + 1)
    for k, x in enumerate(boxes, start=1):
        be, bp = _box_eps_phi(x, i)
        pair_prev = phi[k - 1] - eps[k - 1]
        pair_box = bp - be
        eps[k] = max(eps[k - 1], be - pair_prev)
        phi[k] = max(bp, phi[k - 1] + pair_box)

    def descend(op: str) -> Optional[int]:
        # P_k = P_{k-1} (x) b_k: the operator goes left or lands on box k
        for k in range(N, 0, -1):
            be, bp = _box_eps_phi(boxes[k - 1], i)
            if k > 1 and (phi[k - 1] >= be if op == "e" else phi[k - 1] > be):
                continue
            hit = be if op == "e" else bp
            return k - 1 if hit else None
        return None

    return eps[N], phi[N], descend("e"), descend("f")


# -- Coxeter elements -------------------------------------------------------------


def coxeter_successive(w: Permutation) -> bool:
    """Each ``{1..j}`` and each ``{n-j+1..n}`` is a run of consecutive points of the cycle ``w``."""
    n = w.n

    def run(i: int, j: int) -> set[int]:
        out, x = set(), i
        for _ in range(j):
            out.add(x)
            x = w(x)
        return out

    for j in range(1, n + 1):
        low, high = set(range(1, j + 1)), set(range(n - j + 1, n + 1))
        if not any(run(i, j) == low for i in range(1, j + 1)):
            return False
        if not any(run(i, j) == high for i in range(n - j + 1, n + 1)):
            return False
    return True


@dataclass
class CensusRow:
    n: int
    m: int
    mu: Cochar
    kostka: int
    crystal_count: int
    classes_constructed: int
    classes_bruteforce: int
    injective: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return (
            self.kostka == self.crystal_count == self.classes_constructed == self.classes_bruteforce
            and self.injective
        )

    def tsv(self) -> str:
        mu = ",".join(str(x) for x in self.mu)
        return "\t".join(
            [str(self.n), str(self.m), mu, str(self.kostka), str(self.classes_constructed),
             str(self.classes_bruteforce), str(self.agree).lower()]
        )
