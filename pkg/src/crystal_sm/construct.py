"""Top cocharacter tuples built from crystal elements of weight ``lambda_b``.

Given ``b`` in ``B_mu(lambda_b)`` this module raises ``b`` to ``b^op`` along a
fixed Coxeter word, reads off which column each raising operator hits (the
tuple ``w_1, ..., w_d``), forms the Coxeter element ``w(b)``, solves
``u^{-1} tau^m u = w(b)`` for the ``n`` elements ``u``, and assembles the
tuples ``xi(b, u)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import crystal as cr
from .lattice import (
    Cochar,
    Permutation,
    act_on_cochar,
    eta_act,
    is_coxeter,
    sorting_permutation,
    tau,
    u_of_cochar,
)
from .stratum import CocharTuple, SuperbasicData, eta_class, flat_of, mu_fareastern

__all__ = [
    "ConstructionReport", "AllowedWitness", "ConstructionError",
    "w_max_prime", "extract_w_tuple", "coxeter_of", "upsilon", "xi_vec", "conjugate_to",
    "xi_tuple", "is_allowed", "is_allowed_direct", "construct_all",
]


class ConstructionError(ValueError):
    pass


def w_max_prime(data: SuperbasicData) -> tuple[int, ...]:
    """Word of ``(s_{i_{m0-1}} ... s_{n-1}) ... (s_{i_1} ... s_{i_2 - 1})(s_1 ... s_{i_1 - 1})``.

    Returned left to right as a product, so the last letter acts first.
    """
    bp = data.breakpoints
    word: list[int] = []
    for k in range(data.m0 - 1, -1, -1):
        word.extend(range(bp[k], bp[k + 1]))
    return tuple(word)


def _check_b(b: cr.Tableau, data: SuperbasicData) -> None:
    if b.n != data.n:
        raise ConstructionError(f"tableau rank {b.n} differs from n={data.n}")
    if cr.weight(b) != data.lambda_b:
        raise ConstructionError(f"weight {cr.weight(b)} differs from lambda_b={data.lambda_b}")


def extract_w_tuple(b: cr.Tableau, data: SuperbasicData) -> tuple[tuple[Permutation, ...], cr.Tableau]:
    """Raise ``b`` to ``b^op`` and return ``(w_1, ..., w_d)`` together with ``b^op``."""
    _check_b(b, data)
    n = data.n
    heights = [len(col) for col in reversed(b.columns())]
    owner = [j for j, h in enumerate(heights) for _ in range(h)]
    letters: list[list[int]] = [[] for _ in heights]
    t: cr.Element = cr.fe_read(b)
    for i in reversed(w_max_prime(data)):
        sig = cr.signature(t, i)
        if sig.e_target is None:
            raise ConstructionError(f"e_{i} kills the element while raising to b^op")
        letters[owner[sig.e_target]].append(i)
        t = cr.e(t, i)
    # later-applied letters compose on the left
    ws = tuple(Permutation.from_word(reversed(ls), n) for ls in letters)
    b_op = cr.from_columns(t.boxes, b.shape, n)
    factors = cr.fe_factorize(b)
    factors_op = cr.fe_factorize(b_op)
    for w, before, after in zip(ws, factors, factors_op):
        if act_on_cochar(w, before) != after:
            raise ConstructionError("FE(b^op) is not (w_1 b_1, ..., w_d b_d)")
    return ws, b_op


def coxeter_of(ws: Sequence[Permutation]) -> Permutation:
    """``w(b) = w_1^{-1} ... w_d^{-1}``."""
    out = Permutation.identity(ws[0].n)
    for w in ws:
        out = out * w.inverse()
    return out


def upsilon(w_b: Permutation, data: SuperbasicData) -> list[Permutation]:
    """All ``u`` with ``u^{-1} tau^m u = w_b``, ordered by ``u(1)``."""
    n = data.n
    if w_b.n != n:
        raise ConstructionError(f"rank mismatch: {w_b.n} vs {n}")
    cyc = w_b.cycles()
    if len(cyc) != 1 or len(cyc[0]) != n:
        raise ConstructionError(f"{w_b} is not an n-cycle")
    tm = tau(n) ** data.m
    orbit = [1]
    while len(orbit) < n:
        orbit.append(w_b(orbit[-1]))
    out = []
    for z in range(1, n + 1):
        imgs = [0] * n
        val = z
        for j in orbit:
            imgs[j - 1] = val
            val = tm(val)
        out.append(Permutation(tuple(imgs)))
    for u in out:
        assert u.inverse() * tm * u == w_b
    return sorted(out, key=lambda u: u(1))


def xi_vec(t: cr.Element) -> Cochar:
    """Suffix sums ``(eps_1 + ... + eps_{n-1}, eps_2 + ... + eps_{n-1}, ..., eps_{n-1}, 0)``."""
    tw = cr.fe_read(t) if isinstance(t, cr.Tableau) else t
    eps = [cr.epsilon(tw, i) for i in range(1, tw.n)]
    out = [0] * tw.n
    for i in range(tw.n - 2, -1, -1):
        out[i] = out[i + 1] + eps[i]
    return tuple(out)


def conjugate_to(t: cr.Element, target: Sequence[int], *, reverse_ties: bool = False) -> cr.Element:
    """The conjugate of ``t`` with weight ``target``."""
    w = sorting_permutation(cr.weight(t), target, reverse_ties=reverse_ties)
    return cr.weyl_act(w, t)


def xi_tuple(
    b: cr.Tableau,
    u: Permutation,
    data: SuperbasicData,
    ws: Optional[Sequence[Permutation]] = None,
) -> CocharTuple:
    _check_b(b, data)
    if ws is None:
        ws, _ = extract_w_tuple(b, data)
    if u.inverse() * tau(data.n) ** data.m * u != coxeter_of(ws):
        raise ConstructionError(f"{u} is not in Upsilon(b)")
    mu = _shape_mu(b, data.n)
    b_minus = conjugate_to(b, data.lambda_b_minus)
    uinv_b_minus = cr.weyl_act(u.inverse(), b_minus)
    lam = act_on_cochar(u, xi_vec(uinv_b_minus))
    prefix = u
    out = [lam]
    for w, factor in zip(ws[:-1], cr.fe_factorize(b)[:-1]):
        lam = tuple(a + c for a, c in zip(lam, act_on_cochar(prefix, factor)))
        prefix = prefix * w.inverse()
        out.append(lam)
    return CocharTuple(tuple(out), data, mu)


# -- allowed cocharacters ---------------------------------------------------


@dataclass(frozen=True)
class AllowedWitness:
    lam: Cochar
    allowed: bool
    partial_coxeter: Optional[Permutation]
    c: tuple[int, ...]        # c[i-1] = #{j <= i : lam(j) = low + 1}
    c_prime: tuple[int, ...]  # c_prime[i-1] = #{j >= i : lam(j) = low + 1}


def _check_conjugate(lam: Sequence[int], data: SuperbasicData) -> None:
    if sorted(lam) != sorted(data.lambda_b):
        raise ConstructionError(f"{tuple(lam)} is not conjugate to lambda_b={data.lambda_b}")


def is_allowed(lam: Sequence[int], data: SuperbasicData) -> AllowedWitness:
    """Prefix/suffix count criterion, with the associated partial Coxeter element when allowed."""
    lam = tuple(lam)
    _check_conjugate(lam, data)
    n, hi, bp = data.n, data.low + 1, data.breakpoints
    c, cp = [], []
    acc = 0
    for x in lam:
        acc += x == hi
        c.append(acc)
    acc = 0
    for x in reversed(lam):
        acc += x == hi
        cp.append(acc)
    cp.reverse()

    def c_at(i: int) -> int:
        return c[i - 1] if i >= 1 else 0

    def cp_at(i: int) -> int:
        return cp[i - 1] if i <= n else 0

    ok = all(
        c_at(bp[k] - 1) <= k and cp_at(bp[data.m0 - k] + 1) <= k for k in range(1, data.m0 + 1)
    )
    w = None
    if ok:
        w = Permutation.identity(n)
        for k in range(1, data.m0 + 1):
            if c_at(bp[k] - 1) == k - 1:
                continue
            j_k = max(j for j in range(bp[k - 1], bp[k]) if lam[j - 1] == hi)
            w = Permutation.from_word(range(j_k, bp[k]), n) * w
        if act_on_cochar(w, data.lambda_b) != lam:
            raise ConstructionError(f"partial Coxeter witness fails for {lam}")
    return AllowedWitness(lam, ok, w, tuple(c), tuple(cp))


def is_allowed_direct(lam: Sequence[int], data: SuperbasicData) -> bool:
    """Search over words of distinct letters, each step moving a ``low + 1`` entry one slot left."""
    lam = tuple(lam)
    _check_conjugate(lam, data)
    n = data.n

    def search(cur: Cochar, used: frozenset[int]) -> bool:
        if cur == lam:
            return True
        for j in range(1, n):
            if j in used or cur[j - 1] - cur[j] != -1:
                continue
            nxt = list(cur)
            nxt[j - 1], nxt[j] = nxt[j], nxt[j - 1]
            if search(tuple(nxt), used | {j}):
                return True
        return False

    return search(data.lambda_b, frozenset())


# -- full report ------------------------------------------------------------


@dataclass
class ConstructionReport:
    b: cr.Tableau
    data: SuperbasicData
    mu: Cochar
    fe_factors: tuple[Cochar, ...]
    b_op: cr.Tableau
    w_tuple: tuple[Permutation, ...]
    w_of_b: Permutation
    upsilon: list[Permutation]
    xi_tuples: dict[Permutation, CocharTuple]
    xi_vectors: dict[Permutation, Cochar] = field(default_factory=dict)
    eta_chain: list[Permutation] = field(default_factory=list)
    eta_class: tuple[Cochar, ...] = ()

    def to_json(self) -> dict:
        def key(u: Permutation) -> str:
            return ",".join(str(x) for x in u.images)

        return {
            "n": self.data.n,
            "m": self.data.m,
            "mu": list(self.mu),
            "b": self.b.to_json(),
            "b_op": self.b_op.to_json(),
            "fe": [list(x) for x in self.fe_factors],
            "w_tuple": [list(w.images) for w in self.w_tuple],
            "w_of_b": list(self.w_of_b.images),
            "upsilon": [list(u.images) for u in self.upsilon],
            "xi": {key(u): [list(x) for x in self.xi_tuples[u].lambdas] for u in self.upsilon},
            "eta_chain": [list(u.images) for u in self.eta_chain],
            "eta_class": [list(x) for x in self.eta_class],
        }


def _eta_all(lams: Sequence[Cochar]) -> tuple[Cochar, ...]:
    return tuple(eta_act(x, 1) for x in lams)


def _shape_mu(b: cr.Tableau, n: int) -> Cochar:
    return tuple(len(b.rows[r]) if r < len(b.rows) else 0 for r in range(n))


def construct_all(b: cr.Tableau, data: SuperbasicData) -> ConstructionReport:
    """Run the whole construction for ``b`` and assert its structural invariants."""
    _check_b(b, data)
    n = data.n
    mu = _shape_mu(b, n)
    if mu[0] == 0:
        raise ConstructionError("mu = 0 is not allowed")
    if mu[-1] != 0:
        raise ConstructionError(f"shape must have at most n-1 rows, got mu={mu}")
    mu_fareastern(mu)
    ws, b_op = extract_w_tuple(b, data)
    supports = [s for w in ws for s in w.support]
    if sorted(supports) != list(range(1, n)):
        raise ConstructionError(f"supports {supports} do not cover each simple reflection once")
    w_b = coxeter_of(ws)
    if not is_coxeter(w_b):
        raise ConstructionError(f"w(b) = {w_b} is not a Coxeter element")
    ups = upsilon(w_b, data)
    if len(ups) != n:
        raise ConstructionError(f"|Upsilon(b)| = {len(ups)} != {n}")
    b_minus = conjugate_to(b, data.lambda_b_minus)
    xis = {u: xi_tuple(b, u, data, ws) for u in ups}
    vecs = {u: xi_vec(cr.weyl_act(u.inverse(), b_minus)) for u in ups}
    fe = cr.fe_factorize(b)
    for u, lt in xis.items():
        if flat_of(lt) != fe:
            raise ConstructionError(f"flat tuple of xi(b, {u}) differs from FE(b)")
    # successive tuples in the chain differ by one eta step; the chain starts where that wraps
    t = tau(n)
    wraps = [u for u in ups if _eta_all(xis[t.inverse() * u].lambdas) != xis[u].lambdas]
    if len(wraps) != 1:
        raise ConstructionError(f"expected one break in the eta chain, found {len(wraps)}")
    start = wraps[0]
    chain = [start]
    while len(chain) < n:
        chain.append(t * chain[-1])
    for prev, nxt in zip(chain, chain[1:]):
        if _eta_all(xis[prev].lambdas) != xis[nxt].lambdas:
            raise ConstructionError("xi tuples do not form an eta chain")
    rep, _ = eta_class(xis[start])
    return ConstructionReport(
        b=b, data=data, mu=mu, fe_factors=fe, b_op=b_op, w_tuple=ws, w_of_b=w_b,
        upsilon=ups, xi_tuples=xis, xi_vectors=vecs, eta_chain=chain, eta_class=rep,
    )
