"""Check drivers shared by the command line and the acceptance suite."""
from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from . import construct as co
from . import crystal as cr
from . import oracle as orc
from .lattice import Cochar, Permutation, act_on_cochar, coxeter_elements, is_coxeter, tau, u_of_cochar
from .stratum import SuperbasicData, flat_of, is_top, mu_fareastern, normalize_mu, r_set, top_dimension

__all__ = [
    "partitions", "grid", "crystal_axiom_failures", "lambda_b_elements",
    "CheckLog", "verify_case", "census_row", "fe_preimage_failures",
    "weyl_shift_identity_holds", "coxeter_successive_failures", "conjugate_allowed_failures", "allowed_criterion_failures",
]


def partitions(total: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    def rec(left: int, cap: int, k: int) -> Iterator[tuple[int, ...]]:
        if left == 0:
            yield ()
            return
        if k == 0:
            return
        for p in range(min(left, cap), 0, -1):
            for rest in rec(left - p, p, k - 1):
                yield (p,) + rest

    yield from rec(total, total, max_parts)


def grid(n_values: Sequence[int], m_max: int) -> list[tuple[int, int, Cochar]]:
    """Normalized ``(n, m, mu)`` for coprime ``(n, m)``, ``m <= m_max`` and partitions of ``m`` with ``<= n`` parts."""
    cases = set()
    for n in n_values:
        for m in range(1, m_max + 1):
            if math.gcd(m, n) != 1:
                continue
            for p in partitions(m, n):
                mu, c = normalize_mu(p + (0,) * (n - len(p)))
                cases.add((n, m - n * c, mu))
    return sorted(cases)


def lambda_b_elements(mu: Sequence[int], data: SuperbasicData) -> list[cr.Tableau]:
    return cr.weight_space(cr.generate_crystal(mu), data.lambda_b)


def crystal_axiom_failures(crystal: cr.Crystal) -> list[str]:
    """Weight shifts, e/f duality and ``phi - eps = <alpha, wt>`` on every element and simple root."""
    out = []
    members = set(crystal.elements)
    for t in crystal.elements:
        wt = cr.weight(t)
        for i in range(1, crystal.n):
            up, down = cr.e(t, i), cr.f(t, i)
            if up is not None:
                exp = list(wt)
                exp[i - 1] += 1
                exp[i] -= 1
                if cr.weight(up) != tuple(exp) or up not in members or cr.f(up, i) != t:
                    out.append(f"e_{i} on {t}")
            if down is not None:
                exp = list(wt)
                exp[i - 1] -= 1
                exp[i] += 1
                if cr.weight(down) != tuple(exp) or down not in members or cr.e(down, i) != t:
                    out.append(f"f_{i} on {t}")
            eps = phi = 0
            s = t
            while (s := cr.e(s, i)) is not None:
                eps += 1
            s = t
            while (s := cr.f(s, i)) is not None:
                phi += 1
            if phi - eps != wt[i - 1] - wt[i]:
                out.append(f"phi - eps on {t}, i={i}")
    return out


def weyl_shift_identity_holds(rep: co.ConstructionReport, u: Permutation) -> bool:
    """``w(b)(xi + u^{-1} lambda_b^-) == xi + sum_j w_1^{-1} ... w_{j-1}^{-1} wt(b_j)``."""
    xi = rep.xi_vectors[u]
    base = act_on_cochar(u.inverse(), rep.data.lambda_b_minus)
    lhs = act_on_cochar(rep.w_of_b, tuple(a + c for a, c in zip(xi, base)))
    rhs = list(xi)
    prefix = Permutation.identity(rep.data.n)
    for w, factor in zip(rep.w_tuple, rep.fe_factors):
        step = act_on_cochar(prefix, factor)
        rhs = [a + c for a, c in zip(rhs, step)]
        prefix = prefix * w.inverse()
    return lhs == tuple(rhs)


def fe_preimage_failures(mu: Sequence[int], data: SuperbasicData) -> list[str]:
    """Each ``b`` in ``B_mu(lambda_b)`` is the projection of exactly one flat tuple, namely ``FE(b)``."""
    mu = tuple(mu)
    hits: dict[cr.Tableau, list] = {}
    for beta in orc.flat_tuples(mu_fareastern(mu), data.lambda_b):
        mu_p, tab = cr.project_to_highest(cr.flat_to_tensor(beta))
        if mu_p == mu:
            hits.setdefault(tab, []).append(beta)
    out = []
    elems = lambda_b_elements(mu, data)
    if set(hits) != set(elems):
        out.append(f"projection image differs from B_mu(lambda_b) for mu={mu}")
    for b in elems:
        if hits.get(b) != [cr.fe_factorize(b)]:
            out.append(f"{b}: preimages {hits.get(b)}")
    return out


def coxeter_successive_failures(n: int) -> list[Permutation]:
    return [w for w in coxeter_elements(n) if not orc.coxeter_successive(w)]


def conjugate_allowed_failures(n: int) -> list[tuple[int, Permutation]]:
    out = []
    for m in range(1, n):
        if math.gcd(m, n) != 1:
            continue
        data = SuperbasicData(n, m)
        tm = tau(n) ** m
        for imgs in itertools.permutations(range(1, n + 1)):
            u = Permutation(imgs)
            if is_coxeter(u.inverse() * tm * u):
                if not co.is_allowed(act_on_cochar(u.inverse(), data.lambda_b_minus), data).allowed:
                    out.append((m, u))
    return out


def allowed_criterion_failures(n: int) -> list[tuple[int, Cochar]]:
    out = []
    for m in range(1, n):
        if math.gcd(m, n) != 1:
            continue
        data = SuperbasicData(n, m)
        for lam in sorted(set(itertools.permutations(data.lambda_b))):
            if co.is_allowed(lam, data).allowed != co.is_allowed_direct(lam, data):
                out.append((m, lam))
    return out


@dataclass
class CheckLog:
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    messages: list[str] = field(default_factory=list)

    def record(self, name: str, ok: bool, detail: str = "") -> bool:
        if ok:
            self.passed[name] += 1
        else:
            self.failed[name] += 1
            self.messages.append(f"{name}: {detail}" if detail else name)
        return ok

    @property
    def ok(self) -> bool:
        return not self.failed

    def summary(self) -> dict:
        names = sorted(set(self.passed) | set(self.failed))
        return {
            "passed": sum(self.passed.values()),
            "failed": sum(self.failed.values()),
            "checks": {k: {"passed": self.passed[k], "failed": self.failed[k]} for k in names},
            "messages": self.messages,
        }


def verify_case(
    mu: Sequence[int],
    data: SuperbasicData,
    *,
    seed: int = 0,
    bruteforce: bool = True,
    max_factorial: int = orc.MAX_FACTORIAL,
    log: Optional[CheckLog] = None,
) -> CheckLog:
    """Run every invariant available for one ``(n, m, mu)``."""
    log = log if log is not None else CheckLog()
    mu = tuple(mu)
    n = data.n
    rng = random.Random(seed)
    crystal = cr.generate_crystal(mu)
    log.record("crystal_axioms", not crystal_axiom_failures(crystal))
    log.record("crystal_is_all_ssyt", set(crystal.elements) == set(orc.ssyt(mu, n)))
    elems = cr.weight_space(crystal, data.lambda_b)
    log.record("kostka", len(elems) == orc.kostka(mu, data.lambda_b))
    dim = top_dimension(mu, n, data.m)

    classes = {}
    for b in elems:
        rep = co.construct_all(b, data)
        classes.setdefault(rep.eta_class, []).append(b)
        fe = cr.fe_factorize(b)
        if math.factorial(n) <= max_factorial:
            full = orc.upsilon_fullscan(rep.w_of_b, data, max_factorial=max_factorial)
            log.record("upsilon_fullscan", set(rep.upsilon) == full)
        alt = co.conjugate_to(b, data.lambda_b_minus, reverse_ties=True)
        log.record("b_minus_independent", alt == co.conjugate_to(b, data.lambda_b_minus), str(b))
        for u, lt in rep.xi_tuples.items():
            tag = f"b={b}, u={list(u.images)}"
            log.record("flat_is_fe", flat_of(lt) == fe, tag)
            prefix = u
            ok = True
            for j, lam in enumerate(lt.lambdas):
                ok &= u_of_cochar(lam) == prefix
                prefix = prefix * rep.w_tuple[j].inverse()
            log.record("u_of_xi", ok, tag)
            log.record("is_top", len(r_set(lt)) == dim and is_top(lt), tag)
            first = lt.lambdas[0]
            log.record("xi1_nonneg_with_zero", min(first) == 0, tag)
            log.record("nie_words", orc.nie_words(lt) == rep.w_tuple, tag)
            log.record("weyl_shift_identity", weyl_shift_identity_holds(rep, u), tag)
            log.record("allowed", co.is_allowed(act_on_cochar(u.inverse(), data.lambda_b_minus), data).allowed, tag)
        tuples = [rep.xi_tuples[u].lambdas for u in rep.upsilon]
        log.record("xi_distinct", len(set(tuples)) == n, str(b))
        # sampled Weyl action compatibility
        w1 = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        w2 = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        log.record("weyl_action", cr.weyl_act(w1, cr.weyl_act(w2, b)) == cr.weyl_act(w1 * w2, b), str(b))
    log.record("eta_class_injective", all(len(v) == 1 for v in classes.values()))
    if bruteforce:
        res = orc.enumerate_top_bruteforce(mu, data)
        hits = {c.rep: c.tableau for c in res.projecting_to(mu)}
        log.record("bruteforce_classes", set(hits) == set(classes), f"mu={mu}")
        log.record("bruteforce_matches_b", all(hits.get(k) == v[0] for k, v in classes.items()))
        log.record("one_class_per_flat_tuple", set(res.classes_per_beta.values()) <= {1})
        fails = fe_preimage_failures(mu, data)
        log.record("fe_unique_preimage", not fails, "; ".join(fails))
    return log


def census_row(n: int, m: int, mu: Sequence[int]) -> orc.CensusRow:
    data = SuperbasicData(n, m)
    mu = tuple(mu)
    elems = lambda_b_elements(mu, data)
    classes: dict = {}
    for b in elems:
        classes.setdefault(co.construct_all(b, data).eta_class, []).append(b)
    res = orc.enumerate_top_bruteforce(mu, data)
    bf = {c.rep: c.tableau for c in res.projecting_to(mu)}
    injective = all(len(v) == 1 for v in classes.values()) and all(bf.get(k) == v[0] for k, v in classes.items())
    row = orc.CensusRow(
        n=n, m=m, mu=mu,
        kostka=orc.kostka(mu, data.lambda_b),
        crystal_count=len(elems),
        classes_constructed=len(classes),
        classes_bruteforce=len(bf),
        injective=injective,
    )
    if res.widened:
        row.notes.append(f"search box widened to {res.bound}")
    return row
