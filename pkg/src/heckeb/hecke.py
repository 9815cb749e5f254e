"""The generic Hecke algebra of type B and its Kazhdan-Lusztig theory.

Elements are sparse combinations of the standard basis T_w with
coefficients in Z[q^{+-1}, Q^{+-1}]; the parameter of t is Q = e^b and of
each s_i is q = e^a.  A total order on Z^2 (an XiOrder) selects negative
exponents; the Kazhdan-Lusztig element of w is the unique bar-fixed element
congruent to T_w modulo strictly negative coefficients.

Cells are the strongly connected components of the multiplication graph of
the C-basis; the conjecture checkers compare them with the fibers of domino
insertion.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from fractions import Fraction

from .combinat import Bipartition, format_bipartition
from .domino import (SignedPermutation, group_elements, length, reduced_word,
                     s_t_lambda, StandardBitableau)
from .errors import BoundExceeded, ConjectureAViolation
from .laurent import A_ONE, ACoeff, XiOrder
from .orders import dominance_r

KL_BOUND = 4

GAMMA_T = (0, 1)   # parameter b of the generator t
GAMMA_S = (1, 0)   # parameter a of the generators s_i


def generator_gamma(i: int) -> tuple[int, int]:
    return GAMMA_T if i == 0 else GAMMA_S


class HeckeElement:
    """Sparse element of H_n in the standard basis."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[SignedPermutation, ACoeff] | None = None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def t_basis(cls, w: SignedPermutation, coeff: ACoeff = A_ONE) -> "HeckeElement":
        return cls(w.n, {w: coeff})

    @classmethod
    def unit(cls, n: int) -> "HeckeElement":
        return cls.t_basis(SignedPermutation.identity(n))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: SignedPermutation) -> ACoeff:
        return self.terms.get(w, ACoeff())

    def __eq__(self, other) -> bool:
        return (isinstance(other, HeckeElement)
                and self.n == other.n and self.terms == other.terms)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ACoeff()) + c
        return HeckeElement(self.n, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c: ACoeff) -> "HeckeElement":
        return HeckeElement(self.n, {w: cc * c for w, cc in self.terms.items()})

    def mul_gen_right(self, i: int) -> "HeckeElement":
        """Right multiplication by T of generator i."""
        g = SignedPermutation.generator(self.n, i)
        gamma = generator_gamma(i)
        quad = ACoeff({gamma: 1, (-gamma[0], -gamma[1]): -1})
        out: dict[SignedPermutation, ACoeff] = {}
        for w, c in self.terms.items():
            wg = w * g
            if length(wg) > length(w):
                out[wg] = out.get(wg, ACoeff()) + c
            else:
                out[wg] = out.get(wg, ACoeff()) + c
                out[w] = out.get(w, ACoeff()) + c * quad
        return HeckeElement(self.n, out)

    def mul_gen_left(self, i: int) -> "HeckeElement":
        g = SignedPermutation.generator(self.n, i)
        gamma = generator_gamma(i)
        quad = ACoeff({gamma: 1, (-gamma[0], -gamma[1]): -1})
        out: dict[SignedPermutation, ACoeff] = {}
        for w, c in self.terms.items():
            gw = g * w
            if length(gw) > length(w):
                out[gw] = out.get(gw, ACoeff()) + c
            else:
                out[gw] = out.get(gw, ACoeff()) + c
                out[w] = out.get(w, ACoeff()) + c * quad
        return HeckeElement(self.n, out)

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        assert self.n == other.n
        total = HeckeElement(self.n)
        for w2, c2 in other.terms.items():
            acc = self
            for i in reduced_word(w2):
                acc = acc.mul_gen_right(i)
            total = total + acc.scale(c2)
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        def key(w):
            return (length(w), w.window)
        bits = []
        for w in sorted(self.terms, key=key):
            bits.append(f"({self.terms[w]})*T[{w}]")
        return " + ".join(bits)

    __repr__ = __str__


@functools.lru_cache(maxsize=None)
def _bar_t(n: int) -> dict[SignedPermutation, HeckeElement]:
    """bar(T_w) = T_{w^{-1}}^{-1} for all w, built along reduced words."""
    out = {SignedPermutation.identity(n): HeckeElement.unit(n)}
    elements = sorted(group_elements(n), key=lambda w: length(w))
    for w in elements:
        if w in out:
            continue
        word = reduced_word(w)
        prefix = SignedPermutation.identity(n)
        for i in word[:-1]:
            prefix = prefix * SignedPermutation.generator(n, i)
        i = word[-1]
        gamma = generator_gamma(i)
        # bar(T_s) = T_s^{-1} = T_s - (e^gamma - e^{-gamma})
        bar_ts = HeckeElement.t_basis(SignedPermutation.generator(n, i)) \
            + HeckeElement.unit(n).scale(
                ACoeff({gamma: -1, (-gamma[0], -gamma[1]): 1}))
        out[w] = out[prefix] * bar_ts
    return out


def bar(h: HeckeElement) -> HeckeElement:
    """The A-antilinear bar involution of H_n."""
    table = _bar_t(h.n)
    total = HeckeElement(h.n)
    for w, c in h.terms.items():
        total = total + table[w].scale(c.bar())
    return total


@functools.lru_cache(maxsize=None)
def _dagger_t(n: int) -> dict[SignedPermutation, HeckeElement]:
    """dagger(T_w) for all w, dagger(T_s) = -T_s^{-1}."""
    out = {SignedPermutation.identity(n): HeckeElement.unit(n)}
    for w in sorted(group_elements(n), key=lambda x: length(x)):
        if w in out:
            continue
        word = reduced_word(w)
        prefix = SignedPermutation.identity(n)
        for i in word[:-1]:
            prefix = prefix * SignedPermutation.generator(n, i)
        i = word[-1]
        gamma = generator_gamma(i)
        dag_ts = HeckeElement.t_basis(
            SignedPermutation.generator(n, i), ACoeff.integer(-1)) \
            + HeckeElement.unit(n).scale(
                ACoeff({gamma: 1, (-gamma[0], -gamma[1]): -1}))
        out[w] = out[prefix] * dag_ts
    return out


def dagger(h: HeckeElement) -> HeckeElement:
    """The A-algebra involution with T_s -> -T_s^{-1}."""
    table = _dagger_t(h.n)
    total = HeckeElement(h.n)
    for w, c in h.terms.items():
        total = total + table[w].scale(c)
    return total


def star(h: HeckeElement) -> HeckeElement:
    """The A-linear anti-automorphism T_w -> T_{w^{-1}}."""
    return HeckeElement(h.n, {w.inverse(): c for w, c in h.terms.items()})


# --- Kazhdan-Lusztig basis ----------------------------------------------

def _len_key(w: SignedPermutation):
    return (length(w), w.window)


@functools.lru_cache(maxsize=None)
def kl_basis(n: int, order: XiOrder, bound: int = KL_BOUND) \
        -> dict[SignedPermutation, HeckeElement]:
    """The Kazhdan-Lusztig basis C_w for all w in W_n.

    Each C_w is bar-fixed and congruent to T_w modulo strictly negative
    coefficients, built by a length-increasing triangular solve.
    """
    if n > bound:
        raise BoundExceeded(f"n = {n} > bound {bound}")
    basis: dict[SignedPermutation, HeckeElement] = {}
    for w in sorted(group_elements(n), key=_len_key):
        x = HeckeElement.t_basis(w)
        # Step 1: make bar-fixed, correcting the top defect term at a time.
        defect = bar(x) - x
        while not defect.is_zero():
            y = max(defect.terms, key=_len_key)
            f = defect.terms[y]
            corr = order.antisymmetric_solution(f)
            x = x + basis[y].scale(corr)
            defect = defect + basis[y].scale(corr.bar() - corr)
            assert y not in defect.terms
        # Step 2: push off-diagonal coefficients into A_{<0}.
        for y in sorted(x.terms, key=_len_key, reverse=True):
            if y == w:
                continue
            beta = order.symmetric_completion(x.coeff(y))
            if not beta.is_zero():
                x = x - basis[y].scale(beta)
        basis[w] = x
    return basis


def expand_in_kl(h: HeckeElement, basis) -> dict[SignedPermutation, ACoeff]:
    """Coefficients of h in the C-basis (triangular back-substitution)."""
    rem = h
    out: dict[SignedPermutation, ACoeff] = {}
    while not rem.is_zero():
        y = max(rem.terms, key=_len_key)
        c = rem.terms[y]
        out[y] = c
        rem = rem - basis[y].scale(c)
    return out


# --- cells ----------------------------------------------------------------

def _closure(adjacency: dict) -> dict:
    """Reflexive-transitive closure via DFS from each vertex."""
    reach = {}
    for v in adjacency:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for x in adjacency[u]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        reach[v] = seen
    return reach


def _scc_partition(reach: dict) -> list[set]:
    classes = {}
    for v in reach:
        key = frozenset(u for u in reach[v] if v in reach[u])
        classes.setdefault(key, set()).add(v)
    return list(classes.values())


@functools.lru_cache(maxsize=None)
def cells(n: int, order: XiOrder, side: str = "LR", bound: int = KL_BOUND):
    """Cell partition of W_n and the underlying preorder reachability.

    side is 'L', 'R' or 'LR'.  Returns (list of cells, reachability map);
    w' is below w iff w' in reach[w].
    """
    assert side in ("L", "R", "LR")
    basis = kl_basis(n, order, bound)
    adjacency = {w: set() for w in basis}
    gens = range(n)
    for w, cw in basis.items():
        prods = []
        if side in ("L", "LR"):
            prods.extend(cw.mul_gen_left(i) for i in gens)
        if side in ("R", "LR"):
            prods.extend(cw.mul_gen_right(i) for i in gens)
        for prod in prods:
            for y in expand_in_kl(prod, basis):
                adjacency[w].add(y)
    reach = _closure(adjacency)
    return _scc_partition(reach), reach


def _fibers(n: int, r, picker) -> list[set]:
    out: dict = {}
    for w in group_elements(n):
        out.setdefault(picker(*s_t_lambda(w, r)), set()).add(w)
    return list(out.values())


def _same_partition(a: list[set], b: list[set]) -> tuple[bool, str | None]:
    sa = {frozenset(x) for x in a}
    sb = {frozenset(x) for x in b}
    if sa == sb:
        return True, None
    diff = sa.symmetric_difference(sb)
    sample = sorted(next(iter(diff)), key=_len_key)
    return False, f"first differing block: {[str(w) for w in sample]}"


def conjecture_a_report(n: int, order: XiOrder, bound: int = KL_BOUND) -> dict:
    """Compare KL cells with insertion fibers (clauses a, b, c, c+)."""
    if n > bound:
        raise BoundExceeded(f"n = {n} > bound {bound}")
    r = order.r
    report = {"n": n, "xi": str(order.xi), "r": r, "clauses": {}}
    for clause, side, picker in (
            ("a_left_vs_T", "L", lambda s, t, lam: t),
            ("b_right_vs_S", "R", lambda s, t, lam: s),
            ("c_twosided_vs_shape", "LR", lambda s, t, lam: lam)):
        part, _ = cells(n, order, side, bound)
        ok, why = _same_partition(part, _fibers(n, r, picker))
        report["clauses"][clause] = {"ok": ok, **({"detail": why} if why else {})}
    # (c+): two-sided preorder against the dominance order on shapes.
    _, reach = cells(n, order, "LR", bound)
    shape_of = {w: s_t_lambda(w, r)[2] for w in group_elements(n)}
    bad = None
    for w, lw in shape_of.items():
        for w2, lw2 in shape_of.items():
            klle = w in reach[w2]   # w below w2 in the preorder
            domle = dominance_r(lw, lw2, r)
            if klle != domle:
                bad = (str(w), str(w2), klle, domle)
                break
        if bad:
            break
    report["clauses"]["c_plus_preorder_vs_dominance"] = {
        "ok": bad is None, **({"detail": repr(bad)} if bad else {})}
    report["ok"] = all(c["ok"] for c in report["clauses"].values())
    return report


# --- cell datum ------------------------------------------------------------

@dataclass
class CellDatum:
    """Graham-Lehrer style quadruple extracted from the KL basis."""

    n: int
    order: XiOrder
    r: int
    shapes: list[Bipartition]
    sbt: dict[Bipartition, list[StandardBitableau]]
    w_of: dict[tuple[StandardBitableau, StandardBitableau], SignedPermutation]
    basis: dict[tuple[StandardBitableau, StandardBitableau], HeckeElement]
    leading: dict[SignedPermutation, tuple[StandardBitableau, StandardBitableau]]

    def expand(self, h: HeckeElement) -> dict[tuple, ACoeff]:
        """Coefficients of h in the C_{S,T} basis.

        The basis is triangular over length with leading coefficient
        (-1)^{l(w)} on T_w, so back-substitution in length order applies.
        """
        rem = h
        out: dict[tuple, ACoeff] = {}
        while not rem.is_zero():
            y = max(rem.terms, key=_len_key)
            sign = -1 if length(y) % 2 else 1
            c = rem.terms[y] * ACoeff.integer(sign)
            key = self.leading[y]
            out[key] = c
            rem = rem - self.basis[key].scale(c)
        return out


@functools.lru_cache(maxsize=None)
def cell_datum(n: int, order: XiOrder, bound: int = KL_BOUND) -> CellDatum:
    """The quadruple ((Bip(n), order r), SBT, C_{S,T}, *).

    Raises ConjectureAViolation when insertion fibers do not match the KL
    cells (the construction would then be ill-defined).
    """
    report = conjecture_a_report(n, order, bound)
    core_clauses = ("a_left_vs_T", "b_right_vs_S", "c_twosided_vs_shape")
    if not all(report["clauses"][c]["ok"] for c in core_clauses):
        raise ConjectureAViolation(json.dumps(report))
    r = order.r
    klb = kl_basis(n, order, bound)
    w_of = {}
    basis = {}
    leading = {}
    sbt: dict[Bipartition, list] = {}
    for w in group_elements(n):
        s, t, lam = s_t_lambda(w, r)
        w_of[(s, t)] = w
        basis[(s, t)] = dagger(klb[w])
        leading[w] = (s, t)
        sbt.setdefault(lam, [])
        if s not in sbt[lam]:
            sbt[lam].append(s)
    for lam in sbt:
        sbt[lam].sort(key=lambda x: (x.first, x.second))
    shape_list = sorted(sbt, key=lambda lam: (lam.first.parts, lam.second.parts))
    return CellDatum(n, order, r, shape_list, sbt, w_of, basis, leading)


def cellularity_check(n: int, order: XiOrder, bound: int = 3) -> dict:
    """Verify the Graham-Lehrer axiom for the C_{S,T} basis.

    For every generator h and pair (S, T): h * C_{S,T} must expand as
    sum_{S'} r(S', S, h) C_{S',T} plus terms of strictly smaller shape,
    with r(S', S, h) independent of T.
    """
    if n > bound:
        raise BoundExceeded(f"n = {n} > bound {bound}")
    datum = cell_datum(n, order)
    r = order.r
    failures = []
    star_ok = True
    for (s, t), c_st in datum.basis.items():
        if star(c_st) != datum.basis[(t, s)]:
            star_ok = False
            failures.append(f"star(C[{s.to_text()},{t.to_text()}]) != C[T,S]")
    for i in range(n):
        coeffs_by_st: dict[tuple, dict] = {}
        for lam in datum.shapes:
            for s in datum.sbt[lam]:
                for t in datum.sbt[lam]:
                    prod = datum.basis[(s, t)].mul_gen_left(i)
                    expansion = datum.expand(prod)
                    rmap = {}
                    for (u, vv), c in expansion.items():
                        mu = u.shape
                        if mu == lam and vv == t:
                            rmap[u] = c
                        elif dominance_r(mu, lam, r) and mu != lam:
                            continue  # strictly smaller shape: allowed
                        else:
                            failures.append(
                                f"gen {i}: C[{s.to_text()},{t.to_text()}] "
                                f"-> non-lower term at shape "
                                f"{format_bipartition(mu)} (V==T: {vv == t})")
                    coeffs_by_st[(lam, s, t)] = rmap
        # independence of T
        for lam in datum.shapes:
            for s in datum.sbt[lam]:
                maps = [coeffs_by_st[(lam, s, t)] for t in datum.sbt[lam]]
                if any(m != maps[0] for m in maps[1:]):
                    failures.append(
                        f"gen {i}: coefficients depend on T for S={s.to_text()}")
    return {"n": n, "xi": str(order.xi), "r": r,
            "star_symmetry": star_ok,
            "ok": not failures, "failures": failures[:20]}


def structure_coefficients(datum: CellDatum, i: int, lam: Bipartition) \
        -> dict[tuple[StandardBitableau, StandardBitableau], ACoeff]:
    """r(S', S, h) for generator i acting on the cell module of shape lam,
    read off the expansion with T fixed to the first bitableau."""
    t0 = datum.sbt[lam][0]
    out = {}
    for s in datum.sbt[lam]:
        expansion = datum.expand(datum.basis[(s, t0)].mul_gen_left(i))
        for (u, vv), c in expansion.items():
            if u.shape == lam and vv == t0:
                out[(u, s)] = c
    return out
