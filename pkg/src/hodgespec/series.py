"""Rational power series built from the generators L^e T^j / (1 - L^e T^j).

A series is a finite sum of terms ``coefficient * product of generators``,
with coefficients in a monodromic class ring of fixed arity.  The empty
product is the constant term.  Two operations matter downstream:

* ``expand(n)`` -- the exact truncated power-series expansion, using the
  geometric expansion of each generator (sum over m >= 1 of L^(e m) T^(j m));
* ``limit()`` -- the value at T -> infinity, which sends each term to its
  coefficient times (-1)^(number of generator factors).

The limit is evaluated termwise on the stored presentation; every series
constructed by this package is an explicit combination of generator
products, for which that is the defining formula.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .monclass import MonodromicClass


class TruncatedPoly:
    """Polynomial in T of bounded degree with monodromic-class coefficients."""

    __slots__ = ("arity", "_coeffs")

    def __init__(self, arity: int, coeffs: Mapping[int, MonodromicClass] | Iterable = ()):
        self.arity = arity
        data: dict[int, MonodromicClass] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for n, c in items:
            if c.arity != arity:
                raise ValueError("coefficient arity mismatch")
            if n < 0:
                raise ValueError("negative T-degree")
            if c:
                cur = data.get(n)
                total = c if cur is None else cur + c
                if total:
                    data[n] = total
                else:
                    data.pop(n, None)
        self._coeffs = data

    @classmethod
    def zero(cls, arity: int) -> "TruncatedPoly":
        return cls(arity)

    def coefficient(self, n: int) -> MonodromicClass:
        return self._coeffs.get(n, MonodromicClass.zero(self.arity))

    def degrees(self):
        return sorted(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self.arity == other.arity and self._coeffs == other._coeffs

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        out = dict(self._coeffs)
        for n, c in other._coeffs.items():
            cur = out.get(n)
            total = c if cur is None else cur + c
            if total:
                out[n] = total
            else:
                out.pop(n, None)
        return TruncatedPoly(self.arity, out)

    def __sub__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        return self + other.scale(-1)

    def scale(self, k) -> "TruncatedPoly":
        return TruncatedPoly(self.arity, {n: c * k for n, c in self._coeffs.items()})

    def mul_truncated(self, other: "TruncatedPoly", bound: int) -> "TruncatedPoly":
        out: dict[int, MonodromicClass] = {}
        for n1, c1 in self._coeffs.items():
            for n2, c2 in other._coeffs.items():
                if n1 + n2 > bound:
                    continue
                prod = c1 * c2
                cur = out.get(n1 + n2)
                out[n1 + n2] = prod if cur is None else cur + prod
        return TruncatedPoly(self.arity, out)

    def render(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for n in self.degrees():
            parts.append(f"({self._coeffs[n].render()})*T^{n}")
        return " + ".join(parts)

    def __repr__(self):
        return f"TruncatedPoly({self.render()})"


class RationalSeries:
    """Finite combination of generator products with class coefficients.

    Terms are keyed by the multiset of generator indices (e, j), stored as a
    sorted tuple; like terms are combined on construction.
    """

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping | Iterable = ()):
        self.arity = arity
        data: dict[tuple, MonodromicClass] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for factors, coef in items:
            factors = tuple(sorted((int(e), int(j)) for e, j in factors))
            for _e, j in factors:
                if j < 1:
                    raise ValueError("generator T-weight must be >= 1")
            if coef.arity != arity:
                raise ValueError("coefficient arity mismatch")
            if not coef:
                continue
            cur = data.get(factors)
            total = coef if cur is None else cur + coef
            if total:
                data[factors] = total
            else:
                data.pop(factors, None)
        self._terms = data

    @classmethod
    def zero(cls, arity: int) -> "RationalSeries":
        return cls(arity)

    @classmethod
    def constant(cls, coef: MonodromicClass) -> "RationalSeries":
        return cls(coef.arity, [((), coef)])

    @classmethod
    def generator(cls, e: int, j: int, arity: int = 0) -> "RationalSeries":
        """The series L^e T^j / (1 - L^e T^j) with unit coefficient."""
        return cls(arity, [(((e, j),), MonodromicClass.unit(arity))])

    def terms(self):
        return tuple(sorted(self._terms.items(), key=lambda kv: kv[0]))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def _check(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        self._check(other)
        out = dict(self._terms)
        for factors, coef in other._terms.items():
            cur = out.get(factors)
            total = coef if cur is None else cur + coef
            if total:
                out[factors] = total
            else:
                out.pop(factors, None)
        return RationalSeries(self.arity, out)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + other.scale(-1)

    def scale(self, k) -> "RationalSeries":
        """Multiply every coefficient by an integer or a class of equal arity."""
        return RationalSeries(self.arity, {f: c * k for f, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, MonodromicClass)):
            return self.scale(other)
        if not isinstance(other, RationalSeries):
            return NotImplemented
        self._check(other)
        out: list = []
        for f1, c1 in self._terms.items():
            for f2, c2 in other._terms.items():
                out.append((f1 + f2, c1 * c2))
        return RationalSeries(self.arity, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def limit(self) -> MonodromicClass:
        """Value at T -> infinity: each generator factor contributes -1."""
        total = MonodromicClass.zero(self.arity)
        for factors, coef in self._terms.items():
            total = total + coef * ((-1) ** len(factors))
        return total

    def expand(self, n: int) -> TruncatedPoly:
        """Exact power-series expansion through degree n in T."""
        if n < 0:
            raise ValueError("truncation degree must be nonnegative")
        total = TruncatedPoly.zero(self.arity)
        for factors, coef in self._terms.items():
            poly = TruncatedPoly(self.arity, {0: coef})
            for e, j in factors:
                gen = TruncatedPoly(
                    self.arity,
                    {
                        j * m: MonodromicClass.lefschetz(self.arity, e * m)
                        for m in range(1, n // j + 1)
                    },
                )
                poly = poly.mul_truncated(gen, n)
                if not poly:
                    break
            total = total + poly
        return total

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for factors, coef in self.terms():
            gens = "*".join(f"p({e},{j})" for e, j in factors) or "1"
            parts.append(f"({coef.render()})*{gens}")
        return " + ".join(parts)

    def __repr__(self):
        return f"RationalSeries({self.render()})"
