import pytest

from heckeb.canonical import (canonical_basis, charge_from,
                              decomposition_matrix, default_r, gamma,
                              peeling_path, principal_monomial)
from heckeb.combinat import Bipartition, Partition, parse_bipartition
from heckeb.crystal import uglov_bipartitions
from heckeb.errors import IncompatibleCharges, NotUglov
from heckeb.fock import FockVector
from heckeb.laurent import VPoly, V_ONE
from heckeb.orders import dominance_r


def B(text):
    return parse_bipartition(text)


class TestChargeFrom:
    def test_anchors(self):
        assert charge_from(0, 0, 2) == (0, 0)
        assert charge_from(2, 0, 2) == (2, 0)
        assert charge_from(5, 1, 3) == (4, 0)

    def test_inequality(self):
        for e in (2, 3):
            for d in range(e):
                for r in range(8):
                    s0, _ = charge_from(r, d, e)
                    assert s0 <= r < s0 + e
                    assert s0 % e == d % e


class TestPrincipalMonomial:
    def test_vacuum(self):
        assert principal_monomial(B("(∅;∅)"), (0, 0), 2) == \
            FockVector.vacuum((0, 0), 2)

    def test_single_box(self):
        out = principal_monomial(B("(1;∅)"), (0, 0), 2)
        assert out.terms == {B("(1;∅)"): V_ONE, B("(∅;1)"): VPoly.monomial(1)}

    def test_divided_power_shape(self):
        out = principal_monomial(B("(1;1)"), (0, 0), 2)
        assert out.terms == {B("(1;1)"): V_ONE}

    def test_not_uglov(self):
        with pytest.raises(NotUglov):
            peeling_path(B("(∅;1)"), (0, 0), 2)


class TestCanonicalBasis:
    @pytest.mark.parametrize("s", [(0, 0), (2, 0)])
    def test_triangular_in_r_order(self, s):
        r = default_r(s)
        for n in range(5):
            basis = canonical_basis(n, s, 2, r)
            assert set(basis) == set(uglov_bipartitions(n, s, 2))
            for mu, g in basis.items():
                assert g.coeff(mu) == V_ONE
                for lam, c in g.terms.items():
                    if lam != mu:
                        assert c.in_v_zv()
                        assert dominance_r(lam, mu, r) and lam != mu

    def test_policy_independence(self):
        for n in range(5):
            assert canonical_basis(n, (0, 0), 2, 0, "min") == \
                canonical_basis(n, (0, 0), 2, 0, "max")

    def test_n1_example(self):
        basis = canonical_basis(1, (0, 0), 2)
        g = basis[B("(1;∅)")]
        assert g.terms == {B("(1;∅)"): V_ONE, B("(∅;1)"): VPoly.monomial(1)}


class TestDecompositionMatrix:
    def test_n1_column(self):
        dm = decomposition_matrix(1, (0, 0), 2)
        assert dm.entry(B("(1;∅)"), B("(1;∅)")) == V_ONE
        assert dm.entry(B("(∅;1)"), B("(1;∅)")) == VPoly.monomial(1)

    def test_diagonal_ones(self):
        for n in range(5):
            dm = decomposition_matrix(n, (2, 0), 2)
            for mu in dm.cols:
                assert dm.entry(mu, mu) == V_ONE

    def test_columns_are_uglov(self):
        for n in range(5):
            dm = decomposition_matrix(n, (0, 0), 2)
            assert set(dm.cols) == set(uglov_bipartitions(n, (0, 0), 2))

    def test_tsv_v1(self):
        dm = decomposition_matrix(1, (0, 0), 2, specialize_v1=True)
        lines = dm.to_tsv().splitlines()
        assert lines[0].split("\t")[1] == "(1;∅)"
        assert all(cell in ("0", "1") for line in lines[1:]
                   for cell in line.split("\t")[1:])


class TestGamma:
    def test_golden_values(self):
        assert gamma(B("(2;2)"), (0, 0), (2, 0), 2) == B("(21;1)")
        for fixed in ("(4;∅)", "(31;∅)", "(3;1)"):
            assert gamma(B(fixed), (0, 0), (2, 0), 2) == B(fixed)

    def test_bijection_between_vertex_sets(self):
        for n in range(5):
            src = uglov_bipartitions(n, (0, 0), 2)
            dst = set(uglov_bipartitions(n, (2, 0), 2))
            image = {gamma(mu, (0, 0), (2, 0), 2) for mu in src}
            assert image == dst

    def test_incompatible(self):
        with pytest.raises(IncompatibleCharges):
            gamma(B("(1;∅)"), (0, 0), (1, 0), 2)

    @pytest.mark.parametrize("pair", [((0, 0), (2, 0)), ((0, 0), (4, 0))])
    def test_decomposition_invariance_at_v1(self, pair):
        s1, s2 = pair
        for n in range(5):
            d1 = decomposition_matrix(n, s1, 2)
            d2 = decomposition_matrix(n, s2, 2)
            for mu in d1.cols:
                target = gamma(mu, s1, s2, 2)
                for lam in d1.rows:
                    assert d1.entry(lam, mu).at_one() == \
                        d2.entry(lam, target).at_one()
