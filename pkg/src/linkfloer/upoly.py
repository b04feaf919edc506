"""Exact arithmetic in the polynomial ring F2[U].

A polynomial over the two-element field is just a finite set of exponents
(the monomials with coefficient 1), so addition is symmetric difference and
multiplication is a convolution of exponent sets mod 2.  Everything here is
immutable; UPoly values are safe to share between threads and to use as dict
keys.
"""

from __future__ import annotations

from typing import Iterable


class UPoly:
    """A polynomial in F2[U], stored as a frozenset of exponents."""

    __slots__ = ("exps",)

    def __init__(self, exps: Iterable[int] = ()):
        es = frozenset(exps)
        for e in es:
            if e < 0:
                raise ValueError("exponents must be >= 0, got %r" % (e,))
        object.__setattr__(self, "exps", es)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "UPoly":
        return UPoly()

    @staticmethod
    def one() -> "UPoly":
        return UPoly((0,))

    @staticmethod
    def monomial(k: int) -> "UPoly":
        """U^k."""
        return UPoly((k,))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.exps

    def is_one(self) -> bool:
        return self.exps == frozenset((0,))

    def is_monomial(self) -> bool:
        return len(self.exps) == 1

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max(self.exps) if self.exps else -1

    def valuation(self) -> int:
        """Largest k with U^k dividing self; -1 for zero (divisible by all)."""
        return min(self.exps) if self.exps else -1

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "UPoly") -> "UPoly":
        return UPoly(self.exps ^ other.exps)

    __sub__ = __add__  # characteristic two

    def __mul__(self, other: "UPoly") -> "UPoly":
        acc: set = set()
        for a in self.exps:
            for b in other.exps:
                acc ^= {a + b}
        return UPoly(acc)

    def shift(self, k: int) -> "UPoly":
        """Multiply by U^k."""
        if k == 0:
            return self
        return UPoly(e + k for e in self.exps)

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        """Long division: self = q*other + r with deg(r) < deg(other)."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = set(self.exps)
        q: set = set()
        d = other.degree()
        while rem and max(rem) >= d:
            k = max(rem) - d
            q ^= {k}
            for e in other.exps:
                rem ^= {e + k}
        return UPoly(q), UPoly(rem)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def divides(self, other: "UPoly") -> bool:
        return other.divmod(self)[1].is_zero() if not self.is_zero() else other.is_zero()

    # -- misc ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, UPoly) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __bool__(self) -> bool:
        return bool(self.exps)

    def __repr__(self) -> str:
        return "UPoly(%s)" % (sorted(self.exps),)

    def __str__(self) -> str:
        if not self.exps:
            return "0"
        terms = []
        for e in sorted(self.exps, reverse=True):
            if e == 0:
                terms.append("1")
            elif e == 1:
                terms.append("U")
            else:
                terms.append("U^%d" % e)
        return "+".join(terms)

    @staticmethod
    def parse(text: str) -> "UPoly":
        """Inverse of str(); accepts '0', '1', 'U', 'U^3+U+1' and the like."""
        text = text.strip().replace(" ", "")
        if text in ("", "0"):
            return UPoly()
        exps: set = set()
        for term in text.split("+"):
            if term == "1":
                exps ^= {0}
            elif term == "U":
                exps ^= {1}
            elif term.startswith("U^"):
                exps ^= {int(term[2:])}
            else:
                raise ValueError("cannot parse monomial %r" % term)
        return UPoly(exps)


ZERO = UPoly.zero()
ONE = UPoly.one()
U = UPoly.monomial(1)


def upoly_arith(a: UPoly, b: UPoly, op: str):
    """Dispatch helper: op in {'add', 'mul', 'divmod'}."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divmod":
        return a.divmod(b)
    raise ValueError("unknown op %r" % op)
