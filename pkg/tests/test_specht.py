import pytest

from heckeb.combinat import parse_bipartition, bipartitions_of_shape_count
from heckeb.specht import (adjointness_check, cell_module,
                           decomposition_numbers, generic_semisimplicity_check,
                           nonzero_simples, theorem41_check)


def B(text):
    return parse_bipartition(text)


class TestCellModules:
    def test_dimensions_match_sbt_counts(self):
        for n in (1, 2, 3):
            counts = bipartitions_of_shape_count(n)
            for lam, want in counts.items():
                mod = cell_module(n, 2, 0, 0, lam)
                assert mod.dim == want

    def test_gram_symmetric(self):
        for n in (1, 2, 3):
            for lam in bipartitions_of_shape_count(n):
                g = cell_module(n, 2, 0, 0, lam).gram
                for i in range(len(g)):
                    for j in range(len(g)):
                        assert g[i][j] == g[j][i]

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("r", [0, 1, 2])
    def test_form_respects_star(self, n, r):
        assert adjointness_check(n, r)

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("r", [0, 1, 2])
    def test_generic_semisimplicity(self, n, r):
        # generic Gram determinants are nonzero polynomials
        assert generic_semisimplicity_check(n, r)


class TestSimplesAndDecomposition:
    def test_n1_anchor(self):
        # at Q0^2 = -1 exactly one simple survives, labeled ((1), empty)
        simples = nonzero_simples(1, 2, 0, 0)
        assert simples == [B("(1;∅)")]
        rows, cols, entries = decomposition_numbers(1, 2, 0, 0)
        assert cols == [B("(1;∅)")]
        assert entries == {(B("(1;∅)"), B("(1;∅)")): 1,
                           (B("(∅;1)"), B("(1;∅)")): 1}

    def test_diagonal_ones(self):
        for n in (1, 2, 3):
            _, cols, entries = decomposition_numbers(n, 2, 0, 0)
            for mu in cols:
                assert entries.get((mu, mu)) == 1

    def test_nonnegative_entries(self):
        for n in (1, 2, 3):
            for r in (0, 1):
                _, _, entries = decomposition_numbers(n, 2, 0, r)
                assert all(v >= 0 for v in entries.values())


class TestTheorem41:
    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("r", [0, 1, 2])
    def test_end_to_end(self, n, r):
        report = theorem41_check(n, 2, 0, r)
        assert report["status"] == "ok", report["details"]

    def test_report_carries_assumptions(self):
        report = theorem41_check(1, 2, 0, 0)
        assert any("assumed" in a for a in report["assumptions"])
        assert report["charge"] == [0, 0]
