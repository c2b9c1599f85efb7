"""Exact Hodge-spectrum computations for hypersurface singularities.

The package works throughout in the Hodge realization: classes are finite
integer combinations of monodromy-eigenvalue/bidegree monomials, spectra
are Laurent polynomials with rational exponents, and every computation is
exact rational arithmetic.  See the README for the pipeline and the CLI.
"""

from .convolution import collapse_pair, collapse_triple, convolve, power_pushforward
from .monclass import (
    MonodromicClass,
    box,
    embed,
    hodge_spectrum,
    hodge_spectrum2,
    torus_fiber_class,
)
from .resolution import (
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
from .series import RationalSeries, TruncatedPoly
from .spectra import (
    BiSpectrum,
    Spectrum,
    fold_bispectrum,
    frac,
    geometric_factor,
    mod1,
    steenbrink_rhs,
)
from .workbench import (
    Fixture,
    SteenbrinkReport,
    TransversalBranch,
    fixtures,
    iterated_vanishing,
    one_variable_vanishing,
    quasihomogeneous_spectrum,
    steenbrink_check,
    steenbrink_conjecture_rhs,
    thom_sebastiani,
)

__version__ = "0.1.0"

__all__ = [
    "BiSpectrum",
    "Component",
    "Fixture",
    "MonodromicClass",
    "RationalSeries",
    "ResolutionDatum",
    "SchemaError",
    "Spectrum",
    "SteenbrinkReport",
    "Stratum",
    "TransversalBranch",
    "TruncatedPoly",
    "box",
    "collapse_pair",
    "collapse_triple",
    "convolve",
    "datum_from_dict",
    "datum_to_dict",
    "embed",
    "fixtures",
    "fold_bispectrum",
    "frac",
    "geometric_factor",
    "hodge_spectrum",
    "hodge_spectrum2",
    "iterated_nearby",
    "iterated_vanishing",
    "jet_count_zeta",
    "load_datum",
    "mod1",
    "multiplicity_ratio",
    "nearby_cycles",
    "nearby_cycles_open",
    "one_variable_vanishing",
    "power_pushforward",
    "quasihomogeneous_spectrum",
    "steenbrink_check",
    "steenbrink_conjecture_rhs",
    "steenbrink_rhs",
    "thom_sebastiani",
    "torus_fiber_class",
    "vanishing_cycles",
    "zeta_series",
]
