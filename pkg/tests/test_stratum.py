from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crystal_sm.stratum import (
    CocharTuple,
    SuperbasicData,
    eta_class,
    flat_of,
    is_top,
    lambda_b,
    mu_fareastern,
    normalize_mu,
    r_set,
    rho_pairing,
    top_dimension,
)

D = SuperbasicData(5, 12)
MU = (4, 3, 3, 2, 0)
XI3 = CocharTuple(((0, 1, 2, 0, 2), (0, 2, 2, 0, 2), (1, 3, 2, 1, 2), (2, 4, 2, 2, 3)), D, MU)
FE_B = ((0, 0, 1, 0, 0), (0, 0, 1, 1, 1), (1, 1, 0, 1, 1), (1, 1, 1, 0, 1))


class TestLambdaB:
    @pytest.mark.parametrize(
        "n,m,expected", [(5, 12, (2, 2, 3, 2, 3)), (2, 1, (0, 1)), (5, 2, (0, 0, 1, 0, 1))]
    )
    def test_values(self, n, m, expected):
        assert lambda_b(n, m) == expected

    @pytest.mark.parametrize("n,m", [(4, 2), (6, 9), (1, 3)])
    def test_rejects(self, n, m):
        with pytest.raises(ValueError):
            lambda_b(n, m)

    @given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(-40, 40))))
    def test_sum_and_entries(self, nm):
        n, m = nm
        from math import gcd

        if gcd(n, m) != 1:
            return
        lam = lambda_b(n, m)
        assert sum(lam) == m and set(lam) <= {m // n, m // n + 1}
        assert all(lam[i - 1] == lam[n - i] for i in range(2, n))

    def test_data(self):
        assert D.m0 == 2 and D.low == 2
        assert D.breakpoints == (1, 3, 5)
        assert D.lambda_b_minus == (2, 2, 2, 3, 3)
        assert D.lambda_b_plus == (3, 3, 2, 2, 2)
        assert D.lambda_b_op == (3, 2, 3, 2, 2)
        assert D.newton == (Fraction(12, 5),) * 5


class TestMu:
    def test_fareastern(self):
        assert mu_fareastern(MU) == (1, 3, 4, 4)
        assert mu_fareastern((1, 0, 0, 0)) == (1,)
        assert mu_fareastern((2, 2, 0)) == (2, 2)

    def test_normalize(self):
        assert normalize_mu((3, 2, -1)) == ((4, 3, 0), -1)
        assert normalize_mu((2, 1, 1)) == ((1, 0, 0), 1)

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            mu_fareastern((2, 1, 1))

    def test_top_dimension(self):
        assert rho_pairing(MU) == 9
        assert top_dimension(MU, 5, 12) == 7
        assert top_dimension((1, 0), 2, 1) == 0

    def test_top_dimension_rejects(self):
        with pytest.raises(ValueError):
            top_dimension((0, 0), 2, 0)
        with pytest.raises(ValueError):
            top_dimension((2, 0), 2, 1)


class TestTuples:
    def test_flat_is_fe(self):
        assert flat_of(XI3) == FE_B

    def test_eta_preserves_flat(self):
        for k in (-7, -1, 1, 3, 12):
            assert flat_of(XI3.eta(k)) == FE_B

    def test_flat_failure(self):
        bad = CocharTuple(((0, 0, 0, 0, 0), (2, 0, 0, 0, 0), (2, 1, 1, 0, 0), (3, 2, 1, 1, 0)), D, MU)
        assert flat_of(bad) is None
        assert not is_top(bad)

    def test_r_set(self):
        assert len(r_set(XI3)) == 7
        assert is_top(XI3)

    def test_r_set_smallest(self):
        lt = CocharTuple(((0, 0),), SuperbasicData(2, 1), (1, 0))
        assert lt.natural == ((1, 0),)
        assert r_set(lt) == []

    def test_eta_class(self):
        rep, k = eta_class(XI3.eta(1))
        assert rep == XI3.lambdas and k == -1
        assert eta_class(XI3.eta(-4))[0] == XI3.lambdas

    def test_json(self):
        assert CocharTuple.from_json(XI3.to_json()) == XI3
