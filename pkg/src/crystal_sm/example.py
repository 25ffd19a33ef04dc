"""The worked n=5, m=12, mu=(4,3,3,2,0) case, recomputed and diffed against reference values."""
from __future__ import annotations

from typing import Any, Optional

from . import construct as co
from . import crystal as cr
from .lattice import Permutation, act_on_cochar, eta_act, tau, u_of_cochar
from .stratum import SuperbasicData, mu_fareastern, r_set, top_dimension

N, M = 5, 12
MU = (4, 3, 3, 2, 0)
B_ROWS = ((1, 1, 3, 3), (2, 2, 4), (3, 4, 5), (5, 5))

# the five elements u_1..u_5 as cycles, in the order they are quoted
_UPSILON_CYCLES = [
    [(1, 3, 5, 4, 2)],
    [(2, 4, 5)],
    [(1, 5), (2, 3)],
    [(1, 2, 5, 3, 4)],
    [(1, 4, 3)],
]


def _rows(text: str) -> list[list[int]]:
    return [[int(c) for c in row] for row in text.split("/")]


def _perm(cycles) -> list[int]:
    return list(Permutation.from_cycles(cycles, N).images)


def _word(word) -> list[int]:
    return list(Permutation.from_word(word, N).images)


def expected_values() -> dict[str, Any]:
    u3 = Permutation.from_cycles(_UPSILON_CYCLES[2], N)
    return {
        "lambda_b": [2, 2, 3, 2, 3],
        "lambda_b_op": [3, 2, 3, 2, 2],
        "mu_fareastern": [1, 3, 4, 4],
        "fe": [[0, 0, 1, 0, 0], [0, 0, 1, 1, 1], [1, 1, 0, 1, 1], [1, 1, 1, 0, 1]],
        "signature_2": {"word": "--++-", "reduced": "--+", "epsilon": 2, "phi": 1},
        "signature_4": {"word": "+-+--", "reduced": "-", "epsilon": 1, "phi": 0},
        "e2_b": _rows("1123/224/345/55"),
        "f2_b": _rows("1133/234/345/55"),
        "e4_b": _rows("1133/224/345/45"),
        "f4_b": None,
        "e2e4_b": _rows("1123/224/345/45"),
        "e1e2_b": _rows("1113/224/345/55"),
        "e3e2e4_b": _rows("1123/224/335/45"),
        "e1e2e4_b": _rows("1113/224/345/45"),
        "b_op": _rows("1113/224/335/45"),
        "w_tuple": [_word([]), _word([1, 2]), _word([3]), _word([4])],
        "w_of_b": _word([2, 1, 3, 4]),
        "w_of_b_is_coxeter": True,
        "upsilon": sorted(_perm(c) for c in _UPSILON_CYCLES),
        "u_inv_lambda_b_minus": [[2, 2, 3, 2, 3], [2, 3, 2, 3, 2], [3, 2, 2, 3, 2], [2, 3, 3, 2, 2], [3, 2, 2, 2, 3]],
        "u_inv_b_minus": [
            _rows("1133/224/345/55"),
            _rows("1123/224/345/45"),
            _rows("1113/224/345/45"),
            _rows("1123/224/335/45"),
            _rows("1113/224/345/55"),
        ],
        "xi": [[3, 3, 1, 1, 0], [3, 2, 1, 0, 0], [2, 2, 1, 0, 0], [3, 2, 1, 1, 0], [3, 3, 2, 1, 0]],
        "u_xi": [[3, 1, 3, 0, 1], [3, 0, 1, 2, 0], [0, 1, 2, 0, 2], [1, 3, 0, 1, 2], [2, 3, 1, 3, 0]],
        # (a, b) means u_a xi(u_a^{-1} b^-) = eta(u_b xi(u_b^{-1} b^-))
        "eta_relations": [[2, 3], [4, 2], [1, 4], [5, 1]],
        "xi_tuple_u3": [[0, 1, 2, 0, 2], [0, 2, 2, 0, 2], [1, 3, 2, 1, 2], [2, 4, 2, 2, 3]],
        "u_of_xi_u3": [
            list(u3.images),
            list(u3.images),
            list((u3 * Permutation.from_word([2, 1], N)).images),
            list((u3 * Permutation.from_word([2, 1, 3], N)).images),
        ],
        "tau_m_xi1": [0, 2, 0, 1, 2],
        "b_translation": [3, 3, 2, 2, 2],
        "closure": [1, 1, 0, 1, 1],
        "closure_is_u_wt_b4": True,
        "r_set_size": 7,
        "top_dimension": 7,
    }


def _rows_of(t: Optional[cr.Tableau]):
    return None if t is None else [list(r) for r in t.rows]


def actual_values() -> dict[str, Any]:
    data = SuperbasicData(N, M)
    b = cr.Tableau(B_ROWS, N)
    rep = co.construct_all(b, data)
    out: dict[str, Any] = {
        "lambda_b": list(data.lambda_b),
        "lambda_b_op": list(act_on_cochar(Permutation.from_word(co.w_max_prime(data), N), data.lambda_b)),
        "mu_fareastern": list(mu_fareastern(MU)),
        "fe": [list(x) for x in cr.fe_factorize(b)],
    }
    for i in (2, 4):
        sig = cr.signature(b, i)
        out[f"signature_{i}"] = {"word": sig.word, "reduced": sig.reduced, "epsilon": sig.epsilon, "phi": sig.phi}

    def raise_(*letters):
        t = b
        for i in reversed(letters):
            t = cr.e(t, i)
        return _rows_of(t)

    out["e2_b"] = raise_(2)
    out["f2_b"] = _rows_of(cr.f(b, 2))
    out["e4_b"] = raise_(4)
    out["f4_b"] = _rows_of(cr.f(b, 4))
    out["e2e4_b"] = raise_(2, 4)
    out["e1e2_b"] = raise_(1, 2)
    out["e3e2e4_b"] = raise_(3, 2, 4)
    out["e1e2e4_b"] = raise_(1, 2, 4)
    out["b_op"] = _rows_of(rep.b_op)
    out["w_tuple"] = [list(w.images) for w in rep.w_tuple]
    out["w_of_b"] = list(rep.w_of_b.images)
    out["w_of_b_is_coxeter"] = rep.w_of_b.length == len(rep.w_of_b.support) == N - 1
    out["upsilon"] = sorted(list(u.images) for u in rep.upsilon)

    quoted = [Permutation.from_cycles(c, N) for c in _UPSILON_CYCLES]
    b_minus = co.conjugate_to(b, data.lambda_b_minus)
    out["u_inv_lambda_b_minus"] = [list(act_on_cochar(u.inverse(), data.lambda_b_minus)) for u in quoted]
    out["u_inv_b_minus"] = [_rows_of(cr.weyl_act(u.inverse(), b_minus)) for u in quoted]
    out["xi"] = [list(rep.xi_vectors[u]) for u in quoted]
    u_xi = [act_on_cochar(u, rep.xi_vectors[u]) for u in quoted]
    out["u_xi"] = [list(x) for x in u_xi]
    out["eta_relations"] = [
        [a + 1, c + 1] for a in range(5) for c in range(5) if u_xi[a] == eta_act(u_xi[c], 1)
    ]
    out["eta_relations"].sort(key=lambda p: expected_order(p))
    u3 = quoted[2]
    xi3 = rep.xi_tuples[u3]
    out["xi_tuple_u3"] = [list(x) for x in xi3.lambdas]
    out["u_of_xi_u3"] = [list(u_of_cochar(x).images) for x in xi3.lambdas]
    first, last = xi3.lambdas[0], xi3.lambdas[-1]
    tm = tau(N) ** M
    out["tau_m_xi1"] = list(act_on_cochar(tm, first))
    b_first = data.b_act(first)
    out["b_translation"] = [p - q for p, q in zip(b_first, act_on_cochar(tm, first))]
    closure = [p - q for p, q in zip(b_first, last)]
    out["closure"] = closure
    out["closure_is_u_wt_b4"] = tuple(closure) == act_on_cochar(u_of_cochar(last), rep.fe_factors[-1])
    out["r_set_size"] = len(r_set(xi3))
    out["top_dimension"] = top_dimension(MU, N, M)
    return out


_RELATION_ORDER = [[2, 3], [4, 2], [1, 4], [5, 1]]


def expected_order(pair) -> int:
    return _RELATION_ORDER.index(pair) if pair in _RELATION_ORDER else len(_RELATION_ORDER)


def run_example(expected: Optional[dict[str, Any]] = None) -> dict[str, Any]:
    """Recompute every quantity; ``diffs`` lists mismatching keys in a fixed order."""
    expected = expected_values() if expected is None else expected
    actual = actual_values()
    diffs = [
        {"key": k, "expected": expected[k], "actual": actual.get(k)}
        for k in expected
        if actual.get(k) != expected[k]
    ]
    return {
        "case": {"n": N, "m": M, "mu": list(MU), "b": [list(r) for r in B_ROWS]},
        "status": "PASS" if not diffs else "FAIL",
        "first_divergence": diffs[0]["key"] if diffs else None,
        "diffs": diffs,
        "values": actual,
    }
