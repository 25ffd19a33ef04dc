"""Cocharacter tuples on the semi-module side and their top-dimensionality."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Optional, Sequence

from .lattice import Cochar, act_on_cochar, eta_act, is_dominant, u_of_cochar

__all__ = [
    "SuperbasicData", "CocharTuple", "lambda_b", "mu_fareastern", "normalize_mu",
    "flat_of", "r_set", "top_dimension", "is_top", "eta_class", "rho_pairing",
]


def lambda_b(n: int, m: int) -> Cochar:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if gcd(m, n) != 1:
        raise ValueError(f"gcd(m, n) must be 1, got m={m}, n={n}")
    return tuple((i * m) // n - ((i - 1) * m) // n for i in range(1, n + 1))


@dataclass(frozen=True)
class SuperbasicData:
    n: int
    m: int

    def __post_init__(self) -> None:
        lambda_b(self.n, self.m)

    @property
    def m0(self) -> int:
        return self.m % self.n

    @property
    def low(self) -> int:
        """``floor(m/n)``; entries of ``lambda_b`` are ``low`` or ``low + 1``."""
        return self.m // self.n

    @cached_property
    def breakpoints(self) -> tuple[int, ...]:
        """``i_0 = 1 < i_1 < ... < i_{m0} = n``; ``i_k`` is least with ``floor(i_k m0 / n) >= k``."""
        n, m0 = self.n, self.m0
        out = []
        for k in range(m0 + 1):
            i = 1
            while (i * m0) // n < k:
                i += 1
            out.append(i)
        return tuple(out)

    @cached_property
    def lambda_b(self) -> Cochar:
        return lambda_b(self.n, self.m)

    @property
    def lambda_b_plus(self) -> Cochar:
        return tuple(sorted(self.lambda_b, reverse=True))

    @property
    def lambda_b_minus(self) -> Cochar:
        return tuple(sorted(self.lambda_b))

    @property
    def lambda_b_op(self) -> Cochar:
        return tuple(reversed(self.lambda_b))

    @property
    def newton(self) -> tuple[Fraction, ...]:
        return (Fraction(self.m, self.n),) * self.n

    def b_act(self, lam: Sequence[int]) -> Cochar:
        return eta_act(lam, self.m)


def normalize_mu(mu: Sequence[int]) -> tuple[Cochar, int]:
    """Shift ``mu`` by a central cocharacter so its last entry is 0; returns (mu, shift)."""
    mu = tuple(int(x) for x in mu)
    if not is_dominant(mu):
        raise ValueError(f"mu must be weakly decreasing: {mu}")
    c = mu[-1]
    return tuple(x - c for x in mu), c


def mu_fareastern(mu: Sequence[int]) -> tuple[int, ...]:
    """Indices ``k_1 <= ... <= k_d`` with ``mu = omega_{k_1} + ... + omega_{k_d}``, ``d = mu(1)``."""
    mu = tuple(mu)
    n = len(mu)
    if not is_dominant(mu) or mu[-1] != 0 or mu[0] == 0:
        raise ValueError(f"mu must be dominant, nonzero, with mu(n) = 0: {mu}")
    ks = []
    for k in range(1, mu[0] + 1):
        # omega_j for mu(1) - mu(j) < k <= mu(1) - mu(j+1)
        j = next(j for j in range(1, n) if k <= mu[0] - mu[j])
        ks.append(j)
    return tuple(ks)


def rho_pairing(mu: Sequence[int]) -> Fraction:
    n = len(mu)
    return sum((Fraction(n + 1 - 2 * i, 2) * x for i, x in enumerate(mu, start=1)), Fraction(0))


def top_dimension(mu: Sequence[int], n: int, m: int) -> int:
    """``<rho, mu - nu_b> - defect/2`` with defect ``n - 1`` for superbasic ``b``."""
    mu = tuple(mu)
    if len(mu) != n:
        raise ValueError(f"mu has length {len(mu)}, expected {n}")
    if sum(mu) != m:
        raise ValueError(f"sum(mu) = {sum(mu)} must equal m = {m}")
    if len(set(mu)) == 1:
        raise ValueError(f"central mu is not allowed: {mu}")
    lambda_b(n, m)
    val = rho_pairing(mu) - Fraction(n - 1, 2)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral dimension {val} for mu={mu}")
    return int(val)


@dataclass(frozen=True)
class CocharTuple:
    lambdas: tuple[Cochar, ...]
    data: SuperbasicData
    mu: Cochar

    def __post_init__(self) -> None:
        lams = tuple(tuple(int(x) for x in lam) for lam in self.lambdas)
        object.__setattr__(self, "lambdas", lams)
        object.__setattr__(self, "mu", tuple(self.mu))
        if any(len(lam) != self.data.n for lam in lams):
            raise ValueError("every cocharacter must have length n")

    @property
    def d(self) -> int:
        return len(self.lambdas)

    @cached_property
    def ks(self) -> tuple[int, ...]:
        return mu_fareastern(self.mu)

    @cached_property
    def dagger(self) -> tuple[Cochar, ...]:
        lams = self.lambdas
        return lams[1:] + (self.data.b_act(lams[0]),)

    @cached_property
    def natural(self) -> tuple[Cochar, ...]:
        return tuple(tuple(a - b for a, b in zip(t, s)) for t, s in zip(self.dagger, self.lambdas))

    @cached_property
    def flat(self) -> tuple[Cochar, ...]:
        return tuple(act_on_cochar(u_of_cochar(lam).inverse(), nat) for lam, nat in zip(self.lambdas, self.natural))

    def eta(self, k: int = 1) -> CocharTuple:
        return CocharTuple(tuple(eta_act(lam, k) for lam in self.lambdas), self.data, self.mu)

    def to_json(self) -> dict:
        return {"n": self.data.n, "m": self.data.m, "mu": list(self.mu), "lambdas": [list(x) for x in self.lambdas]}

    @classmethod
    def from_json(cls, obj: dict) -> CocharTuple:
        return cls(tuple(tuple(x) for x in obj["lambdas"]), SuperbasicData(obj["n"], obj["m"]), tuple(obj["mu"]))


def flat_of(lt: CocharTuple) -> Optional[tuple[Cochar, ...]]:
    """``lambda^flat`` when every ``lambda_l^natural`` is conjugate to ``omega_{k_l}``, else None."""
    if lt.d != len(lt.ks):
        return None
    for nat, k in zip(lt.natural, lt.ks):
        if any(x not in (0, 1) for x in nat) or sum(nat) != k:
            return None
    return lt.flat


def r_set(lt: CocharTuple) -> list[tuple[int, int, int]]:
    """Triples ``(l, i, j)`` with ``<chi_ij, lambda_l^natural> = -1`` and ``(lambda_l)_{chi_ij} >= 1``."""
    n = lt.data.n
    out = []
    for l, (lam, nat) in enumerate(zip(lt.lambdas, lt.natural), start=1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j or nat[i - 1] - nat[j - 1] != -1:
                    continue
                val = lam[i - 1] - lam[j - 1] - (1 if i < j else 0)
                if val >= 1:
                    out.append((l, i, j))
    return out


def is_top(lt: CocharTuple) -> bool:
    if flat_of(lt) is None:
        return False
    return len(r_set(lt)) == top_dimension(lt.mu, lt.data.n, lt.data.m)


def eta_class(lt: CocharTuple) -> tuple[tuple[Cochar, ...], int]:
    """Canonical ``eta``-orbit representative and the offset ``k`` with ``rep = eta^k(lt)``.

    The representative has minimum entry 0 in its first cocharacter and is the
    lexicographically least such tuple in the orbit.
    """
    n = lt.data.n
    k0 = -n * min(lt.lambdas[0])
    best = None
    for k in range(k0 - n + 1, k0 + n):
        cand = tuple(eta_act(lam, k) for lam in lt.lambdas)
        if min(cand[0]) != 0:
            continue
        if best is None or cand < best[0]:
            best = (cand, k)
    assert best is not None
    return best
