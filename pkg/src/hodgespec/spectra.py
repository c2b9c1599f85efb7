"""Exact spectrum rings.

A spectrum here is a finitely supported integer combination of monomials
``t^a`` with rational exponent ``a``, i.e. an element of the group ring of
(Q, +).  Its two-variable companion is graded by a pair of residues mod 1
together with an integer: monomials ``t^a u^b v^c`` with ``a, b`` in
Q/Z and ``c`` in Z.  All arithmetic is exact; exponents are
``fractions.Fraction`` values kept in lowest terms.

The folding maps between the two rings send ``t^a u^b v^c`` to
``t^{s(a) + s(b)/N + c}`` where ``s`` picks the canonical representative of
a residue in [0, 1); with ``N = 1`` this is the plain collapse used to
compare one- and two-monodromy spectra.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

Frac = Fraction

FracLike = Union[Fraction, int, str, Tuple[int, int]]


def frac(value: FracLike, den: int | None = None) -> Fraction:
    """Coerce ints, strings, or (num, den) pairs to an exact Fraction."""
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, tuple):
        return Fraction(value[0], value[1])
    return Fraction(value)


def mod1(x: FracLike) -> Fraction:
    """Canonical representative of a rational residue mod 1, in [0, 1)."""
    return frac(x) % 1


def _merge(into: dict, key, mult: int) -> None:
    new = into.get(key, 0) + mult
    if new:
        into[key] = new
    else:
        into.pop(key, None)


def _render_frac(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _render_terms(items, monomial_str) -> str:
    # items: list of (key, mult) already sorted; monomial_str(key) -> str
    if not items:
        return "0"
    parts = []
    for i, (key, mult) in enumerate(items):
        mag = abs(mult)
        body = monomial_str(key) if mag == 1 else f"{mag}*{monomial_str(key)}"
        if i == 0:
            parts.append(body if mult > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if mult > 0 else f" - {body}")
    return "".join(parts)


class Spectrum:
    """Finitely supported Z-combination of monomials t^a, a rational.

    Multiplication follows t^a * t^b = t^(a+b); zero multiplicities are
    never stored, so equality is equality of term maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[FracLike, int] | Iterable = ()):
        data: dict[Fraction, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, mult in items:
            _merge(data, frac(exp), int(mult))
        self._terms = data

    @classmethod
    def zero(cls) -> "Spectrum":
        return cls()

    @classmethod
    def one(cls) -> "Spectrum":
        return cls.monomial(0)

    @classmethod
    def monomial(cls, exponent: FracLike, mult: int = 1) -> "Spectrum":
        return cls([(exponent, mult)])

    def terms(self):
        """Term list sorted by ascending exponent."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exponent: FracLike) -> int:
        return self._terms.get(frac(exponent), 0)

    def mass(self) -> int:
        """Sum of multiplicities (the virtual rank)."""
        return sum(self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == Spectrum.monomial(0, other) if other else not self._terms
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Spectrum") -> "Spectrum":
        out = dict(self._terms)
        for exp, mult in other._terms.items():
            _merge(out, exp, mult)
        return Spectrum(out)

    def __sub__(self, other: "Spectrum") -> "Spectrum":
        return self + (-other)

    def __neg__(self) -> "Spectrum":
        return Spectrum({e: -m for e, m in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return Spectrum({e: m * other for e, m in self._terms.items()})
        if not isinstance(other, Spectrum):
            return NotImplemented
        out: dict[Fraction, int] = {}
        for e1, m1 in self._terms.items():
            for e2, m2 in other._terms.items():
                _merge(out, e1 + e2, m1 * m2)
        return Spectrum(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def render(self) -> str:
        """Canonical text form: ascending exponents, `mult*t^(num/den)` terms,
        `1*` and `/1` omitted, joined with ` + ` / ` - `."""
        return _render_terms(self.terms(), lambda e: f"t^({_render_frac(e)})")

    def __repr__(self):
        return f"Spectrum({self.render()})"


class BiSpectrum:
    """Z-combination of monomials t^a u^b v^c with a, b residues mod 1.

    The grading group is (Q/Z)^2 x Z; monomials multiply by componentwise
    addition, with the residues reduced eagerly so term keys are canonical.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        data: dict[tuple, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, mult in items:
            a, b, c = key
            _merge(data, (mod1(a), mod1(b), int(c)), int(mult))
        self._terms = data

    @classmethod
    def zero(cls) -> "BiSpectrum":
        return cls()

    @classmethod
    def one(cls) -> "BiSpectrum":
        return cls.monomial(0, 0, 0)

    @classmethod
    def monomial(cls, a: FracLike, b: FracLike, c: int, mult: int = 1) -> "BiSpectrum":
        return cls([((a, b, c), mult)])

    def terms(self):
        return tuple(sorted(self._terms.items()))

    def coefficient(self, a: FracLike, b: FracLike, c: int) -> int:
        return self._terms.get((mod1(a), mod1(b), int(c)), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSpectrum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "BiSpectrum") -> "BiSpectrum":
        out = dict(self._terms)
        for key, mult in other._terms.items():
            _merge(out, key, mult)
        return BiSpectrum(out)

    def __sub__(self, other: "BiSpectrum") -> "BiSpectrum":
        return self + (-other)

    def __neg__(self) -> "BiSpectrum":
        return BiSpectrum({k: -m for k, m in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return BiSpectrum({k: m * other for k, m in self._terms.items()})
        if not isinstance(other, BiSpectrum):
            return NotImplemented
        out: dict[tuple, int] = {}
        for (a1, b1, c1), m1 in self._terms.items():
            for (a2, b2, c2), m2 in other._terms.items():
                _merge(out, (mod1(a1 + a2), mod1(b1 + b2), c1 + c2), m1 * m2)
        return BiSpectrum(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def render(self) -> str:
        def mono(key):
            a, b, c = key
            return f"t^({_render_frac(a)})*u^({_render_frac(b)})*v^({c})"

        return _render_terms(self.terms(), mono)

    def __repr__(self):
        return f"BiSpectrum({self.render()})"


def fold_bispectrum(x: BiSpectrum, N: int = 1) -> Spectrum:
    """Collapse t^a u^b v^c to t^{s(a) + s(b)/N + c}.

    Additive group morphism; with N = 1 both residues are folded with full
    weight.  Multiplicativity on monomials holds only when neither residue
    sum wraps past 1, which is why the map is defined termwise.
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    out: dict[Fraction, int] = {}
    for (a, b, c), mult in x._terms.items():
        _merge(out, a + Fraction(b, 1) / N + c, mult)
    return Spectrum(out)


def geometric_factor(m: int) -> Spectrum:
    """The exact expansion (1 - t) / (1 - t^(1/m)) = sum_{i<m} t^(i/m)."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return Spectrum([(Fraction(i, m), 1) for i in range(m)])


def steenbrink_rhs(pairs, m: int, N: int) -> Spectrum:
    """Correction term sum_{(a,b)} t^(a + b/(mN)) * (1 - t)/(1 - t^(1/(mN))).

    Each pair is (exponent a, vertical residue b) with b in [0, 1); m is the
    order of the auxiliary function along the branch and N the power being
    added.
    """
    if m < 1 or N < 1:
        raise ValueError("m and N must be positive integers")
    gf = geometric_factor(m * N)
    total = Spectrum.zero()
    for alpha, beta in pairs:
        alpha, beta = frac(alpha), frac(beta)
        if not 0 <= beta < 1:
            raise ValueError(f"vertical residue {beta} outside [0, 1)")
        total = total + Spectrum.monomial(alpha + Fraction(beta, m * N)) * gf
    return total
