"""Sparse exact Laurent polynomials.

Two rings live here:

* ACoeff -- the group ring of Z^2 written multiplicatively, i.e. Laurent
  polynomials in q = e^a and Q = e^b (a = (1,0), b = (0,1)).  A total order
  on Z^2 is induced by an irrational slope xi, realized exactly by a
  rational stand-in; comparisons that would tie reveal the stand-in as
  unfaithful and raise instead of ordering arbitrarily.

* VPoly -- Laurent polynomials in the crystal variable v, with Gaussian
  integers and exact division for divided powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IrrationalityViolation, NonIntegralDivision

Gamma = tuple[int, int]  # (alpha, beta): exponent of q and of Q


class ACoeff:
    """Integer Laurent polynomial in q and Q (sparse)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Gamma, int] | None = None):
        self.terms = {g: c for g, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, alpha: int, beta: int, coeff: int = 1) -> "ACoeff":
        return cls({(alpha, beta): coeff})

    @classmethod
    def integer(cls, c: int) -> "ACoeff":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, ACoeff) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "ACoeff") -> "ACoeff":
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return ACoeff(out)

    def __neg__(self) -> "ACoeff":
        return ACoeff({g: -c for g, c in self.terms.items()})

    def __sub__(self, other: "ACoeff") -> "ACoeff":
        return self + (-other)

    def __mul__(self, other: "ACoeff") -> "ACoeff":
        out: dict[Gamma, int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                g = (a1 + a2, b1 + b2)
                out[g] = out.get(g, 0) + c1 * c2
        return ACoeff(out)

    def bar(self) -> "ACoeff":
        """The involution e^gamma -> e^{-gamma}."""
        return ACoeff({(-a, -b): c for (a, b), c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (a, b) in sorted(self.terms):
            c = self.terms[(a, b)]
            mono = "*".join(
                ([] if a == 0 else [f"q^{a}" if a != 1 else "q"])
                + ([] if b == 0 else [f"Q^{b}" if b != 1 else "Q"]))
            if not mono:
                bits.append(f"{c}")
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        out = " + ".join(bits).replace("+ -", "- ")
        return out

    __repr__ = __str__


A_ZERO = ACoeff()
A_ONE = ACoeff.integer(1)


@dataclass(frozen=True)
class XiOrder:
    """Total order on Z^2 given by (alpha, beta) positive iff
    alpha + xi*beta > 0, for an exact rational xi standing in for an
    irrational slope."""

    xi: Fraction

    def __post_init__(self):
        assert self.xi > 0
        assert self.xi.denominator > 1, "xi must not be an integer"

    @classmethod
    def for_r(cls, r: int, offset: Fraction = Fraction(1, 101)) -> "XiOrder":
        """Order with floor(xi) = r.  The default offset has a large
        denominator so that no exponent pair of modest size can tie; a tie
        raises IrrationalityViolation and asks for a perturbed xi."""
        assert 0 < offset < 1
        return cls(Fraction(r) + offset)

    @property
    def r(self) -> int:
        return int(self.xi)

    def sign(self, gamma: Gamma) -> int:
        a, b = gamma
        val = a * self.xi.denominator + b * self.xi.numerator
        if val == 0 and gamma != (0, 0):
            raise IrrationalityViolation(
                f"gamma = {gamma} ties at xi = {self.xi}; perturb xi")
        return (val > 0) - (val < 0)

    def split(self, x: ACoeff) -> tuple[ACoeff, int, ACoeff]:
        """Decompose x as (negative part, constant term, positive part)."""
        neg, pos = {}, {}
        const = 0
        for g, c in x.terms.items():
            s = self.sign(g)
            if s < 0:
                neg[g] = c
            elif s > 0:
                pos[g] = c
            else:
                const = c
        return ACoeff(neg), const, ACoeff(pos)

    def negative_part(self, x: ACoeff) -> ACoeff:
        return self.split(x)[0]

    def is_strictly_negative(self, x: ACoeff) -> bool:
        return all(self.sign(g) < 0 for g in x.terms)

    def antisymmetric_solution(self, f: ACoeff) -> ACoeff:
        """The unique x with all exponents negative and x - bar(x) = f,
        for f with bar(f) = -f: the strictly-negative truncation of f."""
        assert f.bar() == -f, "f is not antisymmetric"
        return self.negative_part(f)

    def symmetric_completion(self, c: ACoeff) -> ACoeff:
        """Bar-fixed element matching c on non-negative exponents: the
        constant term plus e^gamma + e^{-gamma} for each positive gamma."""
        neg, const, pos = self.split(c)
        out = ACoeff.integer(const)
        for g, cc in pos.terms.items():
            out = out + ACoeff({g: cc, (-g[0], -g[1]): cc})
        return out


class VPoly:
    """Integer Laurent polynomial in v (sparse)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "VPoly":
        return cls({exp: coeff})

    @classmethod
    def integer(cls, c: int) -> "VPoly":
        return cls({0: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, VPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "VPoly") -> "VPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return VPoly(out)

    def __neg__(self) -> "VPoly":
        return VPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "VPoly") -> "VPoly":
        return self + (-other)

    def __mul__(self, other: "VPoly") -> "VPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return VPoly(out)

    def bar(self) -> "VPoly":
        return VPoly({-e: c for e, c in self.terms.items()})

    def constant_term(self) -> int:
        return self.terms.get(0, 0)

    def in_v_zv(self) -> bool:
        """All exponents strictly positive (element of v Z[v])."""
        return all(e > 0 for e in self.terms)

    def in_zv(self) -> bool:
        """All exponents non-negative (element of Z[v])."""
        return all(e >= 0 for e in self.terms)

    def symmetric_completion(self) -> "VPoly":
        """Bar-fixed polynomial agreeing with self in degrees <= 0:
        a_0 + sum_{j>0} a_{-j} (v^j + v^{-j})."""
        out = {0: self.terms.get(0, 0)}
        for e, c in self.terms.items():
            if e < 0:
                out[e] = c
                out[-e] = out.get(-e, 0) + c
        return VPoly(out)

    def at_one(self) -> int:
        return sum(self.terms.values())

    def exact_div(self, other: "VPoly") -> "VPoly":
        """Exact division; raises NonIntegralDivision on any remainder."""
        if other.is_zero():
            raise ZeroDivisionError
        rem = dict(self.terms)
        top = max(other.terms)
        lead = other.terms[top]
        # any true quotient term is at least this low; going below means
        # the division does not terminate
        floor = (min(self.terms) - min(other.terms)) if self.terms else 0
        out: dict[int, int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            if c % lead != 0 or e - top < floor:
                raise NonIntegralDivision(f"{self} not divisible by {other}")
            q, qe = c // lead, e - top
            out[qe] = q
            for oe, oc in other.terms.items():
                ne = qe + oe
                rem[ne] = rem.get(ne, 0) - q * oc
                if rem[ne] == 0:
                    del rem[ne]
        return VPoly(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                bits.append(f"{c}")
            else:
                mono = "v" if e == 1 else f"v^{e}"
                if c == 1:
                    bits.append(mono)
                elif c == -1:
                    bits.append(f"-{mono}")
                else:
                    bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


V_ZERO = VPoly()
V_ONE = VPoly.integer(1)
V = VPoly.monomial(1)


def gauss_integer(n: int) -> VPoly:
    """[n]_v = (v^n - v^{-n}) / (v - v^{-1})."""
    assert n >= 0
    return VPoly({n - 1 - 2 * i: 1 for i in range(n)})


def gauss_factorial(n: int) -> VPoly:
    out = V_ONE
    for i in range(1, n + 1):
        out = out * gauss_integer(i)
    return out
