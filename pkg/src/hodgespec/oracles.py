"""Brute-force derivation oracles.

Everything in this module recomputes, by elementary enumeration, data that
the production code either hard-codes (the convolution collapse table) or
takes as fixture input (explicit stratum cover classes).  The test suite
and the ``--rederive`` path run these against the shipped values.

The ingredients:

* the eigenspace tables of the two Fermat curves x^n + y^n = 1 and
  x^n + y^n = 0 inside the torus, under the product of the two rotation
  actions -- classical curve cohomology, rank one in each character with
  Hodge type read off from the residue sum;
* the class of a rank-one eigensystem on P^1 minus k punctures, which
  packages the same computation for arbitrary cyclic covers of a rational
  stratum; a nontrivial unitary rank-one system with residues a_s on k' >= 2
  essential punctures has middle compact-support cohomology of rank k' - 2
  split as (sum a_s - 1) classes of type (1,0) and (k' - 1 - sum a_s) of
  type (0,1), plus one type-(0,0) class for every puncture where the local
  monodromy is trivial;
* the equivariant-quotient bookkeeping that turns those tables into the
  collapse of a two-monodromy class;
* a root-of-unity enumeration of torus fibers of monomial maps, an
  independent route to ``torus_fiber_class``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from .lattice import (
    elementary_divisors,
    integer_kernel_basis,
    rational_rank,
    rational_solve,
)
from .monclass import MonodromicClass
from .spectra import _merge, mod1


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# Fermat curve eigenspace tables.
# ---------------------------------------------------------------------------


def fermat_one_at(a, b):
    """Signed (p, q, mult) eigenspace data of the affine Fermat curve
    x^n + y^n = 1 in the torus at character (a, b), for any common
    denominator n of a and b (the data does not depend on n)."""
    a, b = mod1(a), mod1(b)
    if a == 0 and b == 0:
        return ((0, 0, -2), (1, 1, 1))
    if a == 0 or b == 0 or mod1(a + b) == 0:
        return ((0, 0, -1),)
    if a + b < 1:
        return ((0, 1, -1),)
    return ((1, 0, -1),)


def fermat_zero_at(a, b):
    """Same for the antidiagonal curve x^n + y^n = 0 in the torus: only the
    characters (a, -a) appear, each with one (0,0) and one (1,1) class."""
    if mod1(a + b) == 0:
        return ((0, 0, -1), (1, 1, 1))
    return ()


def fermat_one_eigendata(n: int):
    """Full character table of the affine Fermat curve at denominator n."""
    return {
        (Fraction(i, n), Fraction(k, n)): fermat_one_at(Fraction(i, n), Fraction(k, n))
        for i in range(n)
        for k in range(n)
    }


def fermat_zero_eigendata(n: int):
    """Full character table of the antidiagonal curve at denominator n."""
    return {
        (Fraction(i, n), Fraction(k, n)): fermat_zero_at(Fraction(i, n), Fraction(k, n))
        for i in range(n)
        for k in range(n)
    }


def collapse_pair_bruteforce(x: MonodromicClass, pair=(1, 2)) -> MonodromicClass:
    """Collapse two monodromy gradings via the Fermat-curve quotients.

    For each monomial, minus the affine-curve table plus the antidiagonal
    table is evaluated at exactly the monomial's residue pair; bidegrees
    add and the collapsed grading carries the residue sum.  Independent of
    the production collapse table.
    """
    i, j = pair
    if not 1 <= i < j <= x.arity:
        raise ValueError("slot pair out of range")
    out: dict = {}
    for (evs, p, q), mult in x.terms():
        a, b = evs[i - 1], evs[j - 1]
        fused = mod1(a + b)
        rest_prefix = list(evs[: i - 1])
        rest_mid = list(evs[i: j - 1])
        rest_suffix = list(evs[j:])
        for pieces, sign in ((fermat_one_at(a, b), -1), (fermat_zero_at(a, b), 1)):
            for (pf, qf, mf) in pieces:
                key = (
                    tuple(rest_prefix + [fused] + rest_mid + rest_suffix),
                    p + pf,
                    q + qf,
                )
                _merge(out, key, sign * mf * mult)
    return MonodromicClass(x.arity - 1, out)


# ---------------------------------------------------------------------------
# Rank-one eigensystems on a rational curve.
# ---------------------------------------------------------------------------


def _rank_one_class_terms(eigs, residues, npunct):
    """Signed (evs, p, q, mult) contributions of one eigensystem.

    eigs: eigenvalue tuple of the deck characters; residues: local
    monodromy residues at the punctures; npunct: total puncture count.
    """
    terms = []
    if all(r == 0 for r in residues):
        # Trivial local system (deck-trivial or not): the full class of
        # P^1 minus npunct points.
        terms.append((eigs, 1, 1, 1))
        if npunct != 1:
            terms.append((eigs, 0, 0, 1 - npunct))
        return terms
    ess = [r for r in residues if r != 0]
    total = sum(ess)
    if total.denominator != 1:
        raise ValueError("inconsistent residues: they must sum to an integer")
    total = int(total)
    kp = len(ess)
    if kp < 2:
        raise ValueError("a single nontrivial puncture is impossible")
    zeros = len(residues) - kp
    if zeros:
        terms.append((eigs, 0, 0, -zeros))
    if total - 1:
        terms.append((eigs, 1, 0, -(total - 1)))
    if kp - 1 - total:
        terms.append((eigs, 0, 1, -(kp - 1 - total)))
    return terms


def p1_cover_class(deck_orders, phi_orders) -> MonodromicClass:
    """Class, with deck monodromies, of the abelian cover of P^1 minus
    punctures defined by w_i^(n_i) = phi_i(y).

    ``deck_orders`` lists the n_i; ``phi_orders[i][s]`` is the order of
    phi_i at puncture s (every zero or pole of every phi_i must be among
    the punctures, so each row sums to 0).  The (j_1..j_r) character has
    local residue sum_i j_i * phi_orders[i][s] / n_i at puncture s.
    """
    r = len(deck_orders)
    npunct = len(phi_orders[0]) if r else 0
    for i, row in enumerate(phi_orders):
        if len(row) != npunct:
            raise ValueError("ragged puncture data")
        if sum(row) != 0:
            raise ValueError(f"phi_{i} orders must sum to 0 over the punctures")
    out: dict = {}
    for js in itertools.product(*(range(n) for n in deck_orders)):
        eigs = tuple(Fraction(j, n) for j, n in zip(js, deck_orders))
        residues = [
            mod1(sum(Fraction(j * phi_orders[i][s], n) for i, (j, n) in enumerate(zip(js, deck_orders))))
            for s in range(npunct)
        ]
        for evs, p, q, mult in _rank_one_class_terms(eigs, residues, npunct):
            _merge(out, (evs, p, q), mult)
    return MonodromicClass(r, out)


def stratum_cover_class(multiplicity: int, crossing_multiplicities) -> MonodromicClass:
    """Cover class of a rational one-dimensional stratum.

    A component of multiplicity n whose open stratum is P^1 minus the
    crossings with adjacent divisors of multiplicities m_s carries the
    degree-n cyclic cover cut out by the leading form; its character-j
    eigensystem has residue -j * m_s / n at the crossing with the
    m_s-divisor.  The crossing multiplicities must sum to 0 mod n (the
    degree of the leading form on the compact stratum).

    This is the derivation oracle behind every explicit stratum class
    shipped with the fixtures.
    """
    n = int(multiplicity)
    ms = [int(m) for m in crossing_multiplicities]
    if n < 1:
        raise ValueError("multiplicity must be positive")
    if sum(ms) % n:
        raise ValueError("crossing multiplicities must sum to 0 mod the multiplicity")
    out: dict = {}
    for j in range(n):
        eigs = (Fraction(j, n),)
        residues = [mod1(Fraction(-j * m, n)) for m in ms]
        for evs, p, q, mult in _rank_one_class_terms(eigs, residues, len(ms)):
            _merge(out, (evs, p, q), mult)
    return MonodromicClass(1, out)


# ---------------------------------------------------------------------------
# Torus fibers by root-of-unity enumeration.
# ---------------------------------------------------------------------------


def torus_fiber_bruteforce(rows, q_cap: int = 24):
    """Eigenvalue-tuple multiset of a monomial-map torus fiber, enumerated
    over roots of unity; None when the needed root order exceeds q_cap.

    Solutions y = exp(2 pi i v / Q) of the monomial equations correspond to
    v in (Z/Q)^m with M v = 0 mod Q; characters of the component group are
    the characters of that solution group trivial on the image of the
    integer kernel, and each carries the translation eigenvalues
    (w . theta_i mod 1).  Returns (component count, sorted eigentuples).
    """
    M = [list(map(int, row)) for row in rows]
    r, m = len(M), len(M[0])
    if rational_rank(M) != r:
        raise ValueError("rank deficient")
    thetas = []
    for i in range(r):
        sol = rational_solve(M, [1 if k == i else 0 for k in range(r)])
        thetas.append(sol)
    divisors = elementary_divisors(M)
    Q = 1
    for d in divisors:
        Q = _lcm(Q, d)
    for theta in thetas:
        for entry in theta:
            Q = _lcm(Q, entry.denominator)
    if Q > q_cap:
        return None
    kernel = integer_kernel_basis(M)
    eigen: dict[tuple, int] = {}
    for w in itertools.product(range(Q), repeat=m):
        if any(sum(wi * ki for wi, ki in zip(w, k)) % Q for k in kernel):
            continue
        key = tuple(mod1(sum(Fraction(wi) * ti for wi, ti in zip(w, theta))) for theta in thetas)
        eigen[key] = eigen.get(key, 0) + 1
    ncomp = 1
    for d in divisors:
        ncomp *= d
    overcount = Q ** r
    for d in divisors:
        overcount //= gcd(d, Q)
    multiset = []
    for key, count in sorted(eigen.items()):
        if count % overcount:
            raise AssertionError("character overcount mismatch")
        multiset.extend([key] * (count // overcount))
    return ncomp, sorted(multiset)
