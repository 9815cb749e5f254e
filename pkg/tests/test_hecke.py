import pytest
from fractions import Fraction

from heckeb.domino import SignedPermutation, group_elements, length
from heckeb.hecke import (HeckeElement, bar, cell_datum, cells,
                          cellularity_check, conjecture_a_report, dagger,
                          expand_in_kl, kl_basis, star)
from heckeb.laurent import ACoeff, XiOrder

ORDER0 = XiOrder.for_r(0)


def T(w):
    return HeckeElement.t_basis(w)


def unit(n):
    return HeckeElement.unit(n)


def gens(n):
    return [SignedPermutation.generator(n, i) for i in range(n)]


class TestAlgebra:
    def test_quadratic_relations(self):
        n = 2
        t, s1 = gens(n)
        # (T_t - Q)(T_t + Q^-1) = 0 and (T_s - q)(T_s + q^-1) = 0
        assert T(t) * T(t) == unit(n) + \
            T(t).scale(ACoeff({(0, 1): 1, (0, -1): -1}))
        assert T(s1) * T(s1) == unit(n) + \
            T(s1).scale(ACoeff({(1, 0): 1, (-1, 0): -1}))

    def test_braid_relations(self):
        n = 3
        t, s1, s2 = gens(n)
        assert T(t) * T(s1) * T(t) * T(s1) == T(s1) * T(t) * T(s1) * T(t)
        assert T(s1) * T(s2) * T(s1) == T(s2) * T(s1) * T(s2)
        assert T(t) * T(s2) == T(s2) * T(t)

    def test_length_additivity(self):
        for w1 in group_elements(2):
            for w2 in group_elements(2):
                prod = T(w1) * T(w2)
                if length(w1 * w2) == length(w1) + length(w2):
                    assert prod == T(w1 * w2)


class TestInvolutions:
    def test_bar_anchor(self):
        n = 2
        t = gens(n)[0]
        assert bar(T(t)) == T(t) + \
            unit(n).scale(ACoeff({(0, 1): -1, (0, -1): 1}))

    def test_dagger_anchor(self):
        n = 2
        t = gens(n)[0]
        # dagger(T_t) = -T_t + (Q - Q^-1)
        assert dagger(T(t)) == T(t).scale(ACoeff.integer(-1)) + \
            unit(n).scale(ACoeff({(0, 1): 1, (0, -1): -1}))

    def test_all_involutive_and_multiplicative(self):
        n = 2
        ws = list(group_elements(n))
        for w1 in ws:
            for w2 in ws:
                h, k = T(w1), T(w2)
                assert bar(bar(h)) == h
                assert dagger(dagger(h)) == h
                assert star(star(h)) == h
                assert bar(h * k) == bar(h) * bar(k)
                assert dagger(h * k) == dagger(h) * dagger(k)
                assert star(h * k) == star(k) * star(h)


class TestKLBasis:
    def test_rank_one_anchors(self):
        n = 2
        t, s1 = gens(n)
        basis = kl_basis(n, ORDER0)
        assert basis[t] == T(t) + unit(n).scale(ACoeff({(0, -1): 1}))
        assert basis[s1] == T(s1) + unit(n).scale(ACoeff({(-1, 0): 1}))

    @pytest.mark.parametrize("r", [0, 1, 2])
    def test_defining_properties(self, r):
        # bar-fixed, leading coefficient 1, off-diagonals strictly negative
        order = XiOrder.for_r(r)
        for n in (1, 2, 3):
            basis = kl_basis(n, order)
            for w, cw in basis.items():
                assert bar(cw) == cw
                assert cw.coeff(w) == ACoeff.integer(1)
                for y, c in cw.terms.items():
                    if y != w:
                        assert length(y) < length(w)
                        assert order.is_strictly_negative(c)

    def test_expand_in_kl(self):
        basis = kl_basis(2, ORDER0)
        for w in group_elements(2):
            exp = expand_in_kl(T(w), basis)
            back = HeckeElement(2)
            for y, c in exp.items():
                back = back + basis[y].scale(c)
            assert back == T(w)

    def test_xi_robustness(self):
        # same basis and cells for any slope with the same integer part
        for r in (0, 1):
            orders = [XiOrder(Fraction(r) + off)
                      for off in (Fraction(1, 3), Fraction(1, 2),
                                  Fraction(2, 3))]
            for n in (1, 2, 3):
                ref = kl_basis(n, orders[0])
                for o in orders[1:]:
                    assert kl_basis(n, o) == ref
                ref_cells = cells(n, orders[0], "LR")[0]
                for o in orders[1:]:
                    assert {frozenset(c) for c in cells(n, o, "LR")[0]} == \
                        {frozenset(c) for c in ref_cells}


class TestCells:
    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("r", [0, 1, 2])
    def test_conjecture_a(self, n, r):
        report = conjecture_a_report(n, XiOrder.for_r(r))
        assert report["ok"], report

    def test_conjecture_a_inf_proxy(self):
        for n in (1, 2, 3):
            report = conjecture_a_report(n, XiOrder.for_r(max(n - 1, 0)))
            assert report["ok"], report

    def test_cell_count_consistency(self):
        # two-sided cells refine into left cells
        left, _ = cells(2, ORDER0, "L")
        lr, _ = cells(2, ORDER0, "LR")
        for block in left:
            assert any(block <= c for c in lr)


class TestCellularity:
    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("r", [0, 1])
    def test_axiom(self, n, r):
        report = cellularity_check(n, XiOrder.for_r(r))
        assert report["ok"], report["failures"]
        assert report["star_symmetry"]

    def test_axiom_inf_proxy(self):
        for n in (1, 2, 3):
            report = cellularity_check(n, XiOrder.for_r(max(n - 1, 0)))
            assert report["ok"], report["failures"]

    def test_star_exchanges_indices(self):
        datum = cell_datum(2, ORDER0)
        for (s, t), c_st in datum.basis.items():
            assert star(c_st) == datum.basis[(t, s)]
