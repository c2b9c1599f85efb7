import json
from fractions import Fraction as F

import pytest

from hodgespec.monclass import MonodromicClass as MC, box, torus_fiber_class
from hodgespec.resolution import (
    Component,
    ResolutionDatum,
    SchemaError,
    Stratum,
    datum_from_dict,
    datum_to_dict,
    iterated_nearby,
    jet_count_zeta,
    load_datum,
    multiplicity_ratio,
    nearby_cycles,
    nearby_cycles_open,
    vanishing_cycles,
    zeta_series,
)
from hodgespec.series import RationalSeries as RS
from hodgespec.workbench import (
    monomial_datum,
    product_joint_datum,
    smooth_point_datum,
    x2y_datum,
    x2y_y_joint_datum,
)

mono = MC.monomial
unit0 = MC(0, [(((), 0, 0), 1)])


def test_zeta_power_structure():
    datum = monomial_datum((3,))
    expect = RS(1, [(((-1, 3),), torus_fiber_class([[3]]))])
    assert zeta_series(datum) == expect


def test_zeta_zero_function():
    comps = (Component("f_only", 1, 0, 1),)
    datum = ResolutionDatum(1, True, ("g",), comps, (Stratum(("f_only",), base=unit0),))
    assert zeta_series(datum) == RS.zero(1)
    assert nearby_cycles(datum) == MC.zero(1)


def test_zeta_rejects_mixed_multiplicities():
    comps = (Component("a", 0, 1, 1), Component("b", 1, 0, 1))
    datum = ResolutionDatum(
        1, True, ("g",), comps, (Stratum(("a",), base=unit0),)
    )
    with pytest.raises(ValueError):
        zeta_series(datum)
    with pytest.raises(ValueError):
        nearby_cycles(datum)


def test_zeta_expansion_matches_jet_count():
    # Exhaustive over every monomial datum with d <= 3 and exponents <= 4.
    import itertools

    for d in (1, 2, 3):
        for exps in itertools.product(range(1, 5), repeat=d):
            datum = monomial_datum(exps)
            assert zeta_series(datum).expand(20) == jet_count_zeta(exps, 20)


def test_jet_count_examples():
    poly = jet_count_zeta((2,), 6)
    fiber = torus_fiber_class([[2]])
    assert poly.coefficient(2) == fiber * MC.lefschetz(1, -1)
    assert poly.coefficient(3) == MC.zero(1)
    assert poly.coefficient(4) == fiber * MC.lefschetz(1, -2)
    both = jet_count_zeta((1, 1), 4)
    lm1 = MC.lefschetz(1) - MC.unit(1)
    assert both.coefficient(2) == lm1 * MC.lefschetz(1, -2)


def test_nearby_is_minus_zeta_limit():
    for exps in ((2,), (4,), (2, 3)):
        datum = monomial_datum(exps)
        assert nearby_cycles(datum) == zeta_series(datum).limit() * (-1)


def test_nearby_examples():
    assert nearby_cycles(monomial_datum((3,))) == torus_fiber_class([[3]])
    assert nearby_cycles(smooth_point_datum()) == MC.unit(1)


def test_nearby_open_restricts_to_zero_locus():
    # Boundary component (Ng = 0) present: only strata inside C count.
    comps = (Component("c", 0, 2, 1), Component("f", 3, 0, 1))
    strata = (
        Stratum(("c",), base=unit0),
        Stratum(("c", "f"), base=unit0),
    )
    datum = ResolutionDatum(2, True, ("g",), comps, strata)
    assert nearby_cycles_open(datum) == torus_fiber_class([[2]])
    # With no boundary components the open variant equals the plain one.
    plain = monomial_datum((2, 3))
    assert nearby_cycles_open(plain) == nearby_cycles(plain)


def test_vanishing_examples():
    for a in (2, 5):
        got = vanishing_cycles(monomial_datum((a,)))
        assert got == MC(1, [(((F(k, a),), 0, 0), 1) for k in range(1, a)])
    assert vanishing_cycles(smooth_point_datum()) == MC.zero(1)


def test_vanishing_requires_local():
    datum = monomial_datum((2,))
    nonlocal_datum = ResolutionDatum(
        datum.dimension, False, datum.functions, datum.components, datum.strata
    )
    with pytest.raises(ValueError):
        vanishing_cycles(nonlocal_datum)


def test_multiplicity_ratio():
    comps = (Component("a", 3, 1, 1), Component("b", 1, 1, 1))
    datum = ResolutionDatum(2, True, ("f", "g"), comps, (Stratum(("a", "b"), base=unit0),))
    assert multiplicity_ratio(datum) == 3
    assert multiplicity_ratio(product_joint_datum(2, 3)) == 0
    only_f = ResolutionDatum(
        1, True, ("g",), (Component("a", 2, 0, 1),), (Stratum(("a",), base=unit0),)
    )
    with pytest.raises(ValueError):
        multiplicity_ratio(only_f)


def test_iterated_transverse_pair():
    comps = (Component("cx", 1, 0, 1), Component("cy", 0, 1, 1))
    datum = ResolutionDatum(2, True, ("f", "g"), comps, (Stratum(("cx", "cy"), base=unit0),))
    assert iterated_nearby(datum) == MC.unit(2)


def test_iterated_x2y_y():
    got = iterated_nearby(x2y_y_joint_datum())
    assert got == mono(2, (0, 0), 0, 0) + mono(2, (F(1, 2), F(1, 2)), 0, 0)


def test_iterated_no_qualifying_stratum():
    # C empty: nothing qualifies.  Components must still carry some
    # multiplicity, so give them f-multiplicities only.
    comps = (Component("a", 2, 0, 1), Component("b", 1, 0, 1))
    datum = ResolutionDatum(2, True, ("f", "g"), comps, (Stratum(("a", "b"), base=unit0),))
    assert iterated_nearby(datum) == MC.zero(2)


def test_iterated_product_type_is_box():
    for a, b in ((2, 3), (4, 2)):
        joint = product_joint_datum(a, b)
        expect = box(
            nearby_cycles(monomial_datum((a,))), nearby_cycles(monomial_datum((b,)))
        )
        assert iterated_nearby(joint) == expect


def test_schema_roundtrip():
    for datum in (
        monomial_datum((3,)),
        x2y_datum(),
        x2y_y_joint_datum(),
        product_joint_datum(2, 3),
    ):
        again = datum_from_dict(json.loads(json.dumps(datum_to_dict(datum))))
        assert again == datum


def test_schema_errors():
    good = datum_to_dict(monomial_datum((2,)))

    bad = json.loads(json.dumps(good))
    del bad["components"][0]["nu"]
    with pytest.raises(SchemaError, match=r"components\[0\].nu"):
        datum_from_dict(bad)

    bad = json.loads(json.dumps(good))
    bad["strata"][0]["components"] = ["missing"]
    with pytest.raises(SchemaError, match="unknown id"):
        datum_from_dict(bad)

    bad = json.loads(json.dumps(good))
    bad["functions"] = ["h"]
    with pytest.raises(SchemaError, match="functions"):
        datum_from_dict(bad)

    bad = json.loads(json.dumps(good))
    del bad["strata"][0]["base_class"]
    bad["strata"][0]["cover"] = {"explicit": [[[1, 2], 0, 0]]}  # missing mult
    with pytest.raises(SchemaError, match=r"cover.explicit"):
        datum_from_dict(bad)

    bad = json.loads(json.dumps(good))
    bad["strata"][0]["cover"] = {"explicit": [[[1, 2], 0, 0, 1]]}
    with pytest.raises(SchemaError, match="base_class"):
        datum_from_dict(bad)  # base_class together with explicit cover

    bad = json.loads(json.dumps(good))
    bad["components"][0]["nu"] = 0
    with pytest.raises(SchemaError, match="nu"):
        datum_from_dict(bad)


def test_load_datum_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"dimension": 1,', encoding="utf-8")
    with pytest.raises(SchemaError, match="malformed JSON"):
        load_datum(str(path))


def test_explicit_cover_arity_checked():
    comps = (Component("a", 0, 2, 1),)
    with pytest.raises(SchemaError, match="arity"):
        ResolutionDatum(
            1, True, ("g",), comps, (Stratum(("a",), explicit=MC.unit(2)),)
        )
