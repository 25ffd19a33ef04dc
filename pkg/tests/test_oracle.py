import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crystal_sm import construct as co
from crystal_sm import crystal as cr
from crystal_sm import oracle as orc
from crystal_sm.lattice import Permutation, u_of_cochar
from crystal_sm.stratum import CocharTuple, SuperbasicData

D = SuperbasicData(5, 12)
B = cr.Tableau(((1, 1, 3, 3), (2, 2, 4), (3, 4, 5), (5, 5)), 5)


class TestKostka:
    def test_small(self):
        assert orc.kostka((2, 1, 0), (1, 1, 1)) == 2

    @pytest.mark.parametrize("mu", [(3, 1, 0), (2, 2, 1, 0), (4, 0, 0)])
    def test_superstandard(self, mu):
        assert orc.kostka(mu, mu) == 1

    def test_worked(self):
        assert orc.kostka((4, 3, 3, 2, 0), D.lambda_b) == 9

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            orc.kostka((2, 1, 0), (1, 1, 0))

    @pytest.mark.parametrize("mu", [(2, 1, 0), (3, 2, 0, 0), (2, 1, 1, 0)])
    def test_matches_enumeration(self, mu):
        n = len(mu)
        total = sum(mu)
        for content in itertools.product(range(total + 1), repeat=n):
            if sum(content) == total:
                assert orc.kostka(mu, content) == len(orc.ssyt(mu, n, content))

    def test_crystal_size_is_sum_of_kostka(self):
        mu = (3, 1, 1, 0)
        total = sum(
            orc.kostka(mu, c) for c in itertools.product(range(6), repeat=4) if sum(c) == 5
        )
        assert total == len(cr.generate_crystal(mu))


class TestFlatTuples:
    def test_worked_contains_fe(self):
        betas = orc.flat_tuples((1, 3, 4, 4), D.lambda_b)
        assert cr.fe_factorize(B) in betas
        assert all(tuple(map(sum, zip(*beta))) == D.lambda_b for beta in betas)

    def test_infeasible(self):
        assert orc.flat_tuples((2,), (2, 0)) == []


class TestBruteForce:
    def test_smallest(self):
        res = orc.enumerate_top_bruteforce((1, 0), SuperbasicData(2, 1))
        assert len(res.projecting_to((1, 0))) == 1

    @pytest.mark.parametrize("mu,n,m", [((3, 1, 0), 3, 4), ((2, 1, 0, 0), 4, 3), ((3, 2, 0), 3, 5)])
    def test_matches_construction(self, mu, n, m):
        data = SuperbasicData(n, m)
        res = orc.enumerate_top_bruteforce(mu, data)
        elems = cr.weight_space(cr.generate_crystal(mu), data.lambda_b)
        constructed = {co.construct_all(b, data).eta_class: b for b in elems}
        found = {c.rep: c.tableau for c in res.projecting_to(mu)}
        assert found == constructed

    def test_lower_components_are_classified(self):
        data = SuperbasicData(3, 4)
        mu = (3, 1, 0)
        res = orc.enumerate_top_bruteforce(mu, data)
        lower = [c for c in res.classes if c.mu_prime != mu]
        assert lower
        for c in lower:
            assert cr.weight(c.tableau) == data.lambda_b
            assert c.mu_prime < mu

    def test_backends_agree(self):
        data = SuperbasicData(4, 5)
        a = orc.enumerate_top_bruteforce((3, 2, 0, 0), data)
        b = orc.enumerate_top_bruteforce((3, 2, 0, 0), data, backend="numpy")
        assert a.classes == b.classes

    def test_scale_guard(self, monkeypatch):
        monkeypatch.delenv(orc.SCALE_ENV, raising=False)
        monkeypatch.setattr(orc, "MAX_SEARCH", 10)
        with pytest.raises(orc.ScaleGuardError, match="estimated"):
            orc.enumerate_top_bruteforce((3, 1, 0), SuperbasicData(3, 4))
        monkeypatch.setenv(orc.SCALE_ENV, "1")
        assert orc.enumerate_top_bruteforce((3, 1, 0), SuperbasicData(3, 4)).classes


class TestNie:
    def test_worked(self):
        rep = co.construct_all(B, D)
        u3 = Permutation.from_cycles([(1, 5), (2, 3)], 5)
        words = orc.nie_words(rep.xi_tuples[u3])
        assert [w.reduced_word for w in words] == [(), (1, 2), (3,), (4,)]

    def test_single_part(self):
        data = SuperbasicData(2, 1)
        rep = co.construct_all(cr.Tableau(((2,),), 2), data)
        for lt in rep.xi_tuples.values():
            assert orc.nie_words(lt) == rep.w_tuple

    @given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=4))
    def test_solution_is_ratio_of_sorting_elements(self, lams):
        data = SuperbasicData(3, 2)
        lt = CocharTuple(tuple(lams), data, (2, 0, 0))
        nxt = lt.lambdas[1:] + (data.b_act(lt.lambdas[0]),)
        ws = orc.nie_words(lt)
        for w, a, c in zip(ws, lt.lambdas, nxt):
            assert w == u_of_cochar(c).inverse() * u_of_cochar(a)


class TestUpsilonScan:
    def test_worked(self):
        w = Permutation.from_word([2, 1, 3, 4], 5)
        cycles = ([(1, 3, 5, 4, 2)], [(2, 4, 5)], [(1, 5), (2, 3)], [(1, 2, 5, 3, 4)], [(1, 4, 3)])
        assert orc.upsilon_fullscan(w, D) == {Permutation.from_cycles(c, 5) for c in cycles}

    def test_rank_two(self):
        got = orc.upsilon_fullscan(Permutation.simple(1, 2), SuperbasicData(2, 1))
        assert got == {Permutation.identity(2), Permutation.simple(1, 2)}

    def test_guard(self, monkeypatch):
        monkeypatch.delenv(orc.SCALE_ENV, raising=False)
        with pytest.raises(orc.ScaleGuardError):
            orc.upsilon_fullscan(Permutation.from_word(range(1, 7), 7), SuperbasicData(7, 1))


words = st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), max_size=10)))


class TestTensorRule:
    @given(words)
    def test_matches_signature(self, nw):
        n, boxes = nw
        for i in range(1, n):
            s = cr.signature(cr.TensorElement(n, tuple(boxes)), i)
            assert orc.tensor_rule(boxes, i) == (s.epsilon, s.phi, s.e_target, s.f_target)


class TestCensusRow:
    def test_tsv(self):
        row = orc.CensusRow(3, 4, (3, 1, 0), 2, 2, 2, 2)
        assert row.agree
        assert row.tsv() == "3\t4\t3,1,0\t2\t2\t2\ttrue"
        assert not orc.CensusRow(3, 4, (3, 1, 0), 2, 2, 1, 2).agree
