from fractions import Fraction as F

import pytest

from hodgespec.convolution import collapse_pair, power_pushforward
from hodgespec.monclass import MonodromicClass as MC, hodge_spectrum
from hodgespec.oracles import p1_cover_class, stratum_cover_class
from hodgespec.resolution import multiplicity_ratio, vanishing_cycles
from hodgespec.spectra import Spectrum
from hodgespec.workbench import (
    TransversalBranch,
    cusp_datum,
    d_curve_datum,
    fixtures,
    iterated_vanishing,
    one_variable_vanishing,
    quasihomogeneous_spectrum,
    steenbrink_check,
    steenbrink_conjecture_rhs,
    thom_sebastiani,
    x2y_datum,
    x2y_y_joint_datum,
)

t = Spectrum.monomial
mono = MC.monomial


def test_thom_sebastiani_examples():
    a1 = one_variable_vanishing(2)
    assert thom_sebastiani(a1, a1) == mono(1, (0,), 1, 1)
    cusp = thom_sebastiani(a1, one_variable_vanishing(3))
    assert cusp == mono(1, (F(5, 6),), 0, 1) + mono(1, (F(1, 6),), 1, 0)
    assert hodge_spectrum(cusp) == t(F(5, 6)) + t(F(7, 6))
    assert thom_sebastiani(a1, MC.zero(1)) == MC.zero(1)


def test_quasihomogeneous_spectrum():
    for a in range(2, 8):
        assert quasihomogeneous_spectrum((a,)) == Spectrum(
            [(F(k, a), 1) for k in range(1, a)]
        )
    assert quasihomogeneous_spectrum((2, 2)) == t(1)
    assert quasihomogeneous_spectrum((2, 3)) == t(F(5, 6)) + t(F(7, 6))
    # permutation invariance
    assert quasihomogeneous_spectrum((3, 4, 2)) == quasihomogeneous_spectrum((2, 3, 4))
    # one smooth factor kills everything
    assert quasihomogeneous_spectrum((1, 5)) == Spectrum.zero()


def test_cusp_two_pipelines():
    engine = hodge_spectrum(vanishing_cycles(cusp_datum()))
    join = quasihomogeneous_spectrum((2, 3))
    assert engine == join == t(F(5, 6)) + t(F(7, 6))


def test_d_curve_spectra():
    expected = {
        2: t(F(3, 4)) + t(1) + t(F(5, 4)),
        3: t(F(2, 3)) + 2 * t(1) + t(F(4, 3)),
        4: t(F(5, 8)) + t(F(7, 8)) + t(1) + t(F(9, 8)) + t(F(11, 8)),
        5: t(F(3, 5)) + t(F(4, 5)) + 2 * t(1) + t(F(6, 5)) + t(F(7, 5)),
    }
    for N, spectrum in expected.items():
        assert hodge_spectrum(vanishing_cycles(d_curve_datum(N))) == spectrum
    with pytest.raises(ValueError):
        d_curve_datum(6)


def test_iterated_vanishing_requires_correction():
    joint = x2y_y_joint_datum()
    got = iterated_vanishing(joint)
    assert got == -mono(2, (F(1, 2), F(1, 2)), 0, 0)
    stripped = type(joint)(
        joint.dimension, joint.local, joint.functions, joint.components, joint.strata
    )
    with pytest.raises(ValueError, match="zero_locus_nearby"):
        iterated_vanishing(stripped)


def test_steenbrink_check_and_conjecture_rhs():
    sp_f = hodge_spectrum(vanishing_cycles(x2y_datum()))
    assert sp_f == t(1)
    joint = x2y_y_joint_datum()
    phi_iter = iterated_vanishing(joint)
    threshold = multiplicity_ratio(joint)
    assert threshold == 1
    branch = TransversalBranch(pairs=((F(1, 2), F(1, 2)),), e=1, m=1)
    for N in (2, 3, 4, 5):
        sp_fg = hodge_spectrum(vanishing_cycles(d_curve_datum(N)))
        report = steenbrink_check(sp_f, sp_fg, phi_iter, N, threshold)
        assert report.hypothesis_ok and report.equal
        assert sp_fg - sp_f == steenbrink_conjecture_rhs([branch], N)


def test_steenbrink_class_level_identity():
    joint = x2y_y_joint_datum()
    phi_iter = iterated_vanishing(joint)
    phi_f = vanishing_cycles(x2y_datum())
    for N in (2, 3, 4, 5):
        phi_fg = vanishing_cycles(d_curve_datum(N))
        assert phi_f - phi_fg == collapse_pair(power_pushforward(phi_iter, 2, N))


def test_steenbrink_out_of_hypothesis_reported():
    # N = 1: the perturbed function is smooth at the origin, spectrum 0.
    joint = x2y_y_joint_datum()
    report = steenbrink_check(
        hodge_spectrum(vanishing_cycles(x2y_datum())),
        Spectrum.zero(),
        iterated_vanishing(joint),
        1,
        multiplicity_ratio(joint),
    )
    assert not report.hypothesis_ok
    assert not report.equal
    assert "WARNING" in report.render()


def test_conjecture_rhs_examples():
    branch = TransversalBranch(pairs=((F(1, 2), F(1, 2)),), e=1, m=1)
    assert steenbrink_conjecture_rhs([branch], 3) == t(F(2, 3)) + t(1) + t(F(4, 3))
    assert steenbrink_conjecture_rhs([], 5) == Spectrum.zero()
    doubled = TransversalBranch(pairs=((F(1, 2), F(1, 2)),), e=2, m=2)
    got = steenbrink_conjecture_rhs([doubled], 2)
    expect = Spectrum.monomial(F(1, 2) + F(1, 8)) * Spectrum(
        [(F(i, 4), 1) for i in range(4)]
    )
    assert got == expect


def test_stratum_cover_rule_degenerates_to_split():
    # Simply connected stratum: the cover rule reproduces base * fiber.
    datum = cusp_datum()
    assert datum.stratum_class(datum.strata[0], ("g",)) == stratum_cover_class(2, (6,))
    assert stratum_cover_class(4, (8,)) == MC.lefschetz(1) * MC(
        1, [(((F(k, 4),), 0, 0), 1) for k in range(4)]
    )
    with pytest.raises(ValueError):
        stratum_cover_class(4, (3,))  # degree not divisible


def test_p1_cover_requires_degree_zero():
    with pytest.raises(ValueError):
        p1_cover_class([2], [[1, 0]])


def test_fixture_registry():
    reg = {fx.name: fx for fx in fixtures()}
    assert "cusp" in reg and "x^4" in reg and "d_curve_N3" in reg
    for fx in reg.values():
        assert fx.provenance
        if fx.expected_spectrum is not None and fx.datum.arity == 1:
            got = hodge_spectrum(vanishing_cycles(fx.datum))
            assert got == fx.expected_spectrum, fx.name


def test_fixture_rederive_hooks():
    for fx in fixtures():
        if fx.rederive is None:
            continue
        for name, ok in fx.rederive():
            assert ok, name
