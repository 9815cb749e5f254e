import pytest

from heckeb import INFINITY
from heckeb.combinat import bipartitions_of_shape_count
from heckeb.domino import (SignedPermutation, group_elements, insert, length,
                           qtilde_r, reduced_word, s_t_lambda,
                           verify_insertion_bijection)


class TestSignedPermutation:
    def test_parse_str_roundtrip(self):
        w = SignedPermutation.parse("-1 3 2")
        assert str(w) == "-1 3 2"
        assert w(1) == -1 and w(-1) == 1

    def test_group_order(self):
        for n in range(1, 5):
            assert len(group_elements(n)) == 2 ** n * \
                __import__("math").factorial(n)

    def test_reduced_words(self):
        for n in range(1, 4):
            for w in group_elements(n):
                word = reduced_word(w)
                assert len(word) == length(w)
                acc = SignedPermutation.identity(n)
                for i in word:
                    acc = acc * SignedPermutation.generator(n, i)
                assert acc == w

    def test_inverse(self):
        for w in group_elements(3):
            assert w * w.inverse() == SignedPermutation.identity(3)
            assert length(w) == length(w.inverse())


class TestInsertion:
    @pytest.mark.parametrize("r", [0, 1, 2, 3, INFINITY])
    def test_bijection_and_shape(self, r):
        # (3.2): w -> (S, T) is a bijection onto same-shape pairs
        for n in range(1, 5):
            seen = set()
            per_shape = {}
            sbt_counts = bipartitions_of_shape_count(n)
            for w in group_elements(n):
                s, t, lam = s_t_lambda(w, r)
                assert s.shape == t.shape == lam
                seen.add((s, t))
                per_shape[lam] = per_shape.get(lam, 0) + 1
            assert len(seen) == len(group_elements(n))
            for lam, count in per_shape.items():
                assert count == sbt_counts[lam] ** 2

    @pytest.mark.parametrize("r", [0, 1, 2, INFINITY])
    def test_symmetry(self, r):
        # (3.3): Q_r(w) = P_r(w^{-1}), hence T_r(w) = S_r(w^{-1})
        for n in range(1, 5):
            for w in group_elements(n):
                p, q = insert(w, r)
                p_inv, _ = insert(w.inverse(), r)
                assert q == p_inv

    @pytest.mark.parametrize("r", [0, 1, 2])
    def test_diagram_commutes(self, r):
        # (3.1): the bitableau of P is computed through the quotient chain
        for n in range(1, 5):
            for w in group_elements(n):
                p, _ = insert(w, r)
                p.validate()
                s = qtilde_r(p)
                s.validate()
                assert s == s_t_lambda(w, r)[0]

    def test_stability_for_large_r(self):
        # S_r, T_r, and the shape stabilize once r >= n-1
        for n in range(1, 5):
            for w in group_elements(n):
                ref = s_t_lambda(w, INFINITY)
                for r in range(n - 1, n + 2):
                    assert s_t_lambda(w, r) == ref

    def test_report(self):
        report = verify_insertion_bijection(3, 0)
        assert report["ok"]
        assert report["count"] == report["expected"] == 48
