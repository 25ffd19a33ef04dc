import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crystal_sm import crystal as cr
from crystal_sm.lattice import Permutation, act_on_cochar
from crystal_sm.oracle import kostka, ssyt

B = cr.Tableau(((1, 1, 3, 3), (2, 2, 4), (3, 4, 5), (5, 5)), 5)
LAMBDA_B = (2, 2, 3, 2, 3)


def tab(text, n):
    return cr.Tableau(tuple(tuple(int(c) for c in row) for row in text.split("/")), n)


words = st.integers(2, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), max_size=9).map(tuple))
)


class TestTableau:
    def test_str_and_shape(self):
        assert str(B) == "1133/224/345/55"
        assert B.shape == (4, 3, 3, 2)
        assert B.is_semistandard()

    def test_not_semistandard(self):
        assert not tab("21", 3).is_semistandard()
        assert not tab("1/1", 3).is_semistandard()

    def test_json_round_trip(self):
        assert cr.Tableau.from_json(B.to_json(), 5) == B
        t = cr.TensorElement(3, (3, 1, 2))
        assert cr.TensorElement.from_json(t.to_json()) == t

    def test_conjugate_shape(self):
        assert cr.conjugate_shape((4, 3, 3, 2)) == (4, 4, 3, 1)


class TestFarEastern:
    def test_reading_word(self):
        assert cr.fe_read(tab("1124/233/4", 4)).boxes == (4, 2, 3, 1, 3, 1, 2, 4)

    def test_worked_factors(self):
        fe = cr.fe_factorize(B)
        assert [{i + 1 for i, v in enumerate(x) if v} for x in fe] == [{3}, {3, 4, 5}, {1, 2, 4, 5}, {1, 2, 3, 5}]

    def test_single_column(self):
        assert cr.fe_factorize(tab("1/3", 4)) == ((1, 0, 1, 0),)

    @pytest.mark.parametrize("mu", [(2, 1, 0), (3, 2, 0, 0), (2, 2, 1, 0)])
    def test_from_columns_inverts_reading(self, mu):
        n = len(mu)
        for t in ssyt(mu, n):
            assert cr.from_columns(cr.fe_read(t).boxes, t.shape, n) == t
            assert cr.flat_to_tensor(cr.fe_factorize(t)) == cr.fe_read(t)


class TestOperators:
    def test_worked_signatures(self):
        s2 = cr.signature(B, 2)
        assert (s2.word, s2.reduced, s2.epsilon, s2.phi) == ("--++-", "--+", 2, 1)
        s4 = cr.signature(B, 4)
        assert (s4.word, s4.reduced, s4.epsilon, s4.phi) == ("+-+--", "-", 1, 0)
        assert s4.f_target is None

    def test_worked_operators(self):
        assert cr.e(B, 2) == tab("1123/224/345/55", 5)
        assert cr.f(B, 4) is None
        b = B
        for i in (2, 1, 4, 3):
            b = cr.e(b, i)
        assert b == tab("1113/224/335/45", 5)
        assert cr.weight(b) == (3, 2, 3, 2, 2)

    def test_highest_weight_is_killed_by_e(self):
        top = cr.highest_tableau((3, 1, 1, 0))
        assert all(cr.epsilon(top, i) == 0 for i in range(1, 4))

    def test_weight(self):
        assert cr.weight(B) == LAMBDA_B
        assert cr.weight(cr.TensorElement(3, ())) == (0, 0, 0)
        assert cr.weight(cr.TensorElement(4, (2,))) == (0, 1, 0, 0)

    def test_bad_index(self):
        with pytest.raises(ValueError):
            cr.e(B, 5)

    @given(words)
    def test_axioms_on_words(self, nw):
        n, boxes = nw
        t = cr.TensorElement(n, boxes)
        wt = cr.weight(t)
        for i in range(1, n):
            assert cr.phi(t, i) - cr.epsilon(t, i) == wt[i - 1] - wt[i]
            down = cr.f(t, i)
            if down is not None:
                assert cr.e(down, i) == t
            up = cr.e(t, i)
            if up is not None:
                assert cr.f(up, i) == t

    @given(words)
    def test_signature_counts_match_strings(self, nw):
        n, boxes = nw
        t = cr.TensorElement(n, boxes)
        for i in range(1, n):
            s = cr.signature(t, i)
            assert s.reduced == "-" * s.epsilon + "+" * s.phi


class TestWeylAction:
    def test_worked_conjugate(self):
        u3 = Permutation.from_cycles([(1, 5), (2, 3)], 5)
        b_minus = cr.weyl_act(Permutation.from_word([3], 5), B)
        assert cr.weight(b_minus) == (2, 2, 2, 3, 3)
        target = cr.weyl_act(u3.inverse(), b_minus)
        assert cr.weight(target) == (3, 2, 2, 3, 2)
        assert target == tab("1113/224/345/45", 5)

    def test_fixing_weight(self):
        t = tab("12/23", 3)
        assert cr.weight(t) == (1, 2, 1)
        assert cr.weyl_act(Permutation.from_word([2], 3), tab("11/22", 3)) == tab("11/33", 3)
        assert cr.weyl_act(Permutation.identity(3), t) == t

    @pytest.mark.parametrize("mu", [(2, 1, 0), (2, 1, 1, 0)])
    def test_group_action_and_weights(self, mu):
        n = len(mu)
        group = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
        for t in ssyt(mu, n):
            for w in group:
                wt = cr.weyl_act(w, t)
                assert cr.weight(wt) == act_on_cochar(w, cr.weight(t))
            for a, c in itertools.product(group[:6], repeat=2):
                assert cr.weyl_act(a, cr.weyl_act(c, t)) == cr.weyl_act(a * c, t)


class TestCrystal:
    def test_box_crystal(self):
        assert len(cr.generate_crystal((1, 0, 0))) == 3

    def test_zero(self):
        assert len(cr.generate_crystal((0, 0, 0))) == 1

    def test_adjoint_like(self):
        assert len(cr.generate_crystal((2, 1, 0))) == 8

    def test_weight_spaces(self):
        c = cr.generate_crystal((2, 1, 0))
        assert len(cr.weight_space(c, (1, 1, 1))) == 2
        assert cr.weight_space(c, (2, 1, 0)) == [cr.highest_tableau((2, 1, 0))]

    def test_worked_weight_space(self):
        elems = cr.weight_space(cr.generate_crystal((4, 3, 3, 2, 0)), LAMBDA_B)
        assert B in elems
        assert len(elems) == kostka((4, 3, 3, 2, 0), LAMBDA_B)

    @pytest.mark.parametrize("mu", [(3, 1, 0), (2, 2, 0, 0), (3, 2, 1, 0)])
    def test_elements_are_ssyt(self, mu):
        assert set(cr.generate_crystal(mu).elements) == set(ssyt(mu, len(mu)))

    def test_graph_export(self):
        g = cr.generate_crystal((1, 0, 0)).to_json()
        assert g["edges"] == [{"from": 0, "to": 1, "i": 1}, {"from": 1, "to": 2, "i": 2}]
        assert [node["rows"] for node in g["nodes"]] == [[[1]], [[2]], [[3]]]


class TestProjection:
    def test_fe_projects_to_itself(self):
        for t in ssyt((2, 2, 1, 0), 4):
            assert cr.project_to_highest(cr.fe_read(t)) == ((2, 2, 1, 0), t)

    def test_highest(self):
        top = cr.highest_tableau((2, 1, 0))
        assert cr.project_to_highest(cr.fe_read(top)) == ((2, 1, 0), top)

    def test_two_boxes(self):
        # words are column readings, so (1, 2) is the column 1/2 and (2, 1) the row 12
        assert cr.project_to_highest(cr.TensorElement(2, (1, 2))) == ((1, 1), tab("1/2", 2))
        assert cr.project_to_highest(cr.TensorElement(2, (2, 1))) == ((2, 0), tab("12", 2))
