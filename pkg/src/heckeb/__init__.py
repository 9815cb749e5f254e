"""Exact combinatorics and algebra for Hecke algebras of type B.

Subpackages cover: partition/bipartition combinatorics and 2-quotients
(`combinat`), dominance orders on bipartitions (`orders`), signed
permutations and domino insertion (`domino`), the generic Hecke algebra and
its Kazhdan-Lusztig bases and cells (`hecke`), level-2 Fock spaces (`fock`),
crystal graphs (`crystal`), canonical bases and decomposition matrices
(`canonical`), cyclotomic specializations and Specht-module decomposition
numbers (`specht`), and a command-line surface (`cli`).
"""

INFINITY = float("inf")

__all__ = ["INFINITY"]
