"""Combinatorial log-resolution data and the classes computed from it.

A datum records, for one function (arity 1) or an ordered pair of functions
(arity 2), the components of a normal-crossing divisor with their
multiplicities and discrepancies plus the classes of the open strata.  The
package never computes resolutions; data are inputs, typically derived by
hand from blowups and shipped with provenance notes.

Stratum classes come in two flavours.  A ``split`` stratum gives the
Hodge-Deligne class of the open stratum itself; the finite covers carrying
the monodromies are then computed by ``torus_fiber_class`` from the
multiplicity rows, which is correct exactly when the relevant unit is a
power (trivial cover twist).  Strata over non-simply-connected bases may
need an ``explicit`` class: the total class of the stratum's cover with its
monodromies, supplied directly.

Operations (local flag means stratum classes are already restricted over
the base point):

* ``zeta_series``    -- the motivic zeta function, as a rational series
                        whose term for a stratum I has generator factors
                        (-nu_i, N_i) for i in I;
* ``nearby_cycles``  -- minus its limit, computed by the alternating sum;
* ``nearby_cycles_open`` -- the open-subset variant, summing only strata
                        inside C = {N > 0};
* ``vanishing_cycles``   -- (-1)^(d-1) (nearby - 1) for local data;
* ``iterated_nearby``    -- the two-monodromy class of a joint datum,
                        summing (-1)^|I| [cover of U_I] over strata meeting
                        both C and its complement;
* ``multiplicity_ratio`` -- sup of Nf/Ng over components with Ng > 0, the
                        validity bound for power-perturbation identities;
* ``jet_count_zeta``     -- independent zeta oracle for monomial functions
                        by direct jet counting.

JSON schema (UTF-8, exact field names)::

    {"dimension": int, "local": bool, "functions": ["f","g"] or ["g"],
     "components": [{"id": str, "Nf": int, "Ng": int, "nu": int}, ...],
     "strata": [{"components": [str, ...],
                 "base_class": [[p, q, mult], ...],
                 "cover": "split" | {"explicit": [[[num,den], ..., p, q, mult], ...]}},
                ...],
     "zero_locus_nearby": [[[num,den], p, q, mult], ...]}   # optional

``Nf`` defaults to 0.  For arity-1 data the ``Nf`` field carries the
boundary multiplicities used by ``multiplicity_ratio`` and the open
variant.  Explicit cover entries list the eigenvalue fractions (one
[num, den] pair per function) followed by p, q, mult.  The optional
``zero_locus_nearby`` (joint data only) is the arity-1 class, in the second
monodromy slot, of the nearby cycles of g on the zero locus of f over the
base point; it feeds the vanishing-cycle correction in the workbench.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .monclass import MonodromicClass, embed, torus_fiber_class
from .series import RationalSeries, TruncatedPoly


class SchemaError(ValueError):
    """Datum validation failure, carrying the offending field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class Component:
    id: str
    nf: int
    ng: int
    nu: int


@dataclass(frozen=True)
class Stratum:
    components: tuple  # component ids, order irrelevant
    base: Optional[MonodromicClass] = None      # arity 0, split covers
    explicit: Optional[MonodromicClass] = None  # full cover class, given arity

    def key(self):
        return frozenset(self.components)


@dataclass(frozen=True)
class ResolutionDatum:
    dimension: int
    local: bool
    functions: tuple
    components: tuple
    strata: tuple
    zero_locus_nearby: Optional[MonodromicClass] = None

    @property
    def arity(self) -> int:
        return len(self.functions)

    def component(self, cid: str) -> Component:
        return self._index[cid]

    def __post_init__(self):
        if self.dimension < 1:
            raise SchemaError("dimension", "must be a positive integer")
        if tuple(self.functions) not in (("g",), ("f", "g")):
            raise SchemaError("functions", 'must be ["g"] or ["f","g"]')
        index = {}
        for i, comp in enumerate(self.components):
            path = f"components[{i}]"
            if comp.id in index:
                raise SchemaError(path + ".id", f"duplicate id {comp.id!r}")
            if comp.nu < 1:
                raise SchemaError(path + ".nu", "must be >= 1")
            if comp.nf < 0 or comp.ng < 0:
                raise SchemaError(path, "multiplicities must be nonnegative")
            if comp.nf == 0 and comp.ng == 0:
                raise SchemaError(path, "component carries no multiplicity at all")
            index[comp.id] = comp
        if not index:
            raise SchemaError("components", "at least one component is required")
        seen = set()
        for i, st in enumerate(self.strata):
            path = f"strata[{i}]"
            if not st.components:
                raise SchemaError(path + ".components", "must be nonempty")
            if len(set(st.components)) != len(st.components):
                raise SchemaError(path + ".components", "duplicate component id")
            for cid in st.components:
                if cid not in index:
                    raise SchemaError(path + ".components", f"unknown id {cid!r}")
            if st.key() in seen:
                raise SchemaError(path, "duplicate stratum")
            seen.add(st.key())
            if (st.base is None) == (st.explicit is None):
                raise SchemaError(path, "exactly one of base_class / explicit cover")
            if st.base is not None and st.base.arity != 0:
                raise SchemaError(path + ".base_class", "must have arity 0")
            if st.explicit is not None and st.explicit.arity != self.arity:
                raise SchemaError(path + ".cover", f"explicit class must have arity {self.arity}")
        if self.zero_locus_nearby is not None:
            if self.arity != 2:
                raise SchemaError("zero_locus_nearby", "only meaningful on joint data")
            if self.zero_locus_nearby.arity != 1:
                raise SchemaError("zero_locus_nearby", "must have arity 1")
        object.__setattr__(self, "_index", index)

    # -- realized stratum classes ------------------------------------------

    def _rows(self, cids, which):
        pick = {"f": lambda c: c.nf, "g": lambda c: c.ng}
        return [[pick[w](self.component(cid)) for cid in cids] for w in which]

    def stratum_class(self, st: Stratum, which: Sequence[str]) -> MonodromicClass:
        """Realized class of the monodromy cover over one stratum.

        ``which`` selects the multiplicity rows ("g" alone, or "f","g") and
        fixes the arity.  Split strata multiply the base class by the torus
        fiber class of those rows restricted to the stratum.
        """
        arity = len(which)
        if st.explicit is not None:
            if st.explicit.arity != arity:
                raise ValueError("explicit cover has the wrong arity for this operation")
            return st.explicit
        rows = self._rows(st.components, which)
        return embed(st.base, arity, ()) * torus_fiber_class(rows)


# ---------------------------------------------------------------------------
# Engine operations.
# ---------------------------------------------------------------------------


def _require_arity(datum: ResolutionDatum, arity: int, op: str):
    if datum.arity != arity:
        raise ValueError(f"{op} needs a datum with {arity} function(s), got {datum.arity}")


def _zero_locus_components(datum: ResolutionDatum):
    return {c.id for c in datum.components if c.ng > 0}


def zeta_series(datum: ResolutionDatum) -> RationalSeries:
    """Motivic zeta function from the resolution formula.

    Term for a nonempty stratum I: realized cover class of I times the
    product over i in I of the generator L^(-nu_i) T^(N_i) / (1 - ...).
    Returns the zero series when no component carries a g-multiplicity (the
    zeta function of the zero function).
    """
    _require_arity(datum, 1, "zeta_series")
    C = _zero_locus_components(datum)
    if not C:
        return RationalSeries.zero(1)
    if len(C) != len(datum.components):
        raise ValueError(
            "datum mixes zero and positive multiplicities; this formula needs a "
            "resolution of the zero locus alone (see nearby_cycles_open)"
        )
    terms = []
    for st in datum.strata:
        cls = datum.stratum_class(st, ("g",))
        factors = tuple(
            (-datum.component(cid).nu, datum.component(cid).ng) for cid in st.components
        )
        terms.append((factors, cls))
    return RationalSeries(1, terms)


def nearby_cycles(datum: ResolutionDatum) -> MonodromicClass:
    """Nearby-cycle class: the alternating stratum sum, equal to minus the
    limit of the zeta series."""
    _require_arity(datum, 1, "nearby_cycles")
    C = _zero_locus_components(datum)
    if not C:
        return MonodromicClass.zero(1)
    if len(C) != len(datum.components):
        raise ValueError(
            "datum mixes zero and positive multiplicities; use nearby_cycles_open"
        )
    total = MonodromicClass.zero(1)
    for st in datum.strata:
        cls = datum.stratum_class(st, ("g",))
        total = total + cls * ((-1) ** (len(st.components) + 1))
    return total


def nearby_cycles_open(datum: ResolutionDatum) -> MonodromicClass:
    """Open-subset nearby cycles: only strata inside C = {N > 0} contribute."""
    _require_arity(datum, 1, "nearby_cycles_open")
    C = _zero_locus_components(datum)
    total = MonodromicClass.zero(1)
    for st in datum.strata:
        if not set(st.components) <= C:
            continue
        cls = datum.stratum_class(st, ("g",))
        total = total + cls * ((-1) ** (len(st.components) + 1))
    return total


def vanishing_cycles(datum: ResolutionDatum, zero_locus_class=None) -> MonodromicClass:
    """Vanishing-cycle class (-1)^(d-1) (nearby - [trivial-monodromy part]).

    Locality makes the subtracted class the unit.  The package never
    computes the subtracted class over a positive-dimensional zero locus;
    for a non-local datum the caller must supply it explicitly.
    """
    _require_arity(datum, 1, "vanishing_cycles")
    if zero_locus_class is None:
        if not datum.local:
            raise ValueError(
                "non-local datum: supply the class of the trivial-monodromy part "
                "of the zero locus explicitly"
            )
        zero_locus_class = MonodromicClass.unit(1)
    elif zero_locus_class.arity != 1:
        raise ValueError("zero_locus_class must have arity 1")
    nearby = nearby_cycles(datum)
    sign = (-1) ** (datum.dimension - 1)
    return (nearby - zero_locus_class) * sign


def multiplicity_ratio(datum: ResolutionDatum) -> Fraction:
    """Sup over components with Ng > 0 of Nf/Ng.

    For arity-1 data the numerator is the boundary multiplicity carried in
    the Nf field; for joint data it is the first function's multiplicity.
    The identities relating a function to its power perturbations hold for
    powers strictly above this ratio.
    """
    ratios = [Fraction(c.nf, c.ng) for c in datum.components if c.ng > 0]
    if not ratios:
        raise ValueError("no component with positive g-multiplicity: ratio undefined")
    return max(ratios)


def iterated_nearby(datum: ResolutionDatum) -> MonodromicClass:
    """Two-monodromy class of a joint datum.

    Sums (-1)^|I| times the realized cover class over the strata I meeting
    both C = {Ng > 0} and its complement.  For split strata the restricted
    exponent matrix always has rank 2 (the f-row is nonzero on I \\ C where
    the g-row vanishes, and the g-row is nonzero on I cap C); this is
    asserted structurally by the fiber-class computation.
    """
    _require_arity(datum, 2, "iterated_nearby")
    C = _zero_locus_components(datum)
    total = MonodromicClass.zero(2)
    for st in datum.strata:
        ids = set(st.components)
        J = ids & C
        K = ids - C
        if not J or not K:
            continue
        cls = datum.stratum_class(st, ("f", "g"))
        total = total + cls * ((-1) ** len(st.components))
    return total


def jet_count_zeta(exponents: Sequence[int], n_max: int) -> TruncatedPoly:
    """Zeta oracle for the monomial function prod x_i^(a_i), local at 0.

    Jets of exact coordinate orders k (all k_i >= 1) with sum a_i k_i = n
    contribute the fiber class of [a] times L^(-sum k_i) to the T^n
    coefficient; this is a direct count, independent of the resolution
    formula.
    """
    a = [int(x) for x in exponents]
    if not a or any(x < 1 for x in a):
        raise ValueError("exponents must be positive integers")
    fiber = torus_fiber_class([a])
    coeffs: dict[int, MonodromicClass] = {}

    def walk(idx: int, degree_left: int, depth: int):
        # Enumerate k_idx.. with remaining degree budget; collect sum k_i.
        if idx == len(a) - 1:
            if degree_left % a[idx] == 0 and degree_left >= a[idx]:
                k = degree_left // a[idx]
                yield depth + k
            return
        k = 1
        while a[idx] * k <= degree_left - sum(a[idx + 1:]):
            yield from walk(idx + 1, degree_left - a[idx] * k, depth + k)
            k += 1

    for n in range(1, n_max + 1):
        total = MonodromicClass.zero(1)
        for ksum in walk(0, n, 0):
            total = total + MonodromicClass.lefschetz(1, -ksum)
        if total:
            coeffs[n] = total * fiber
    return TruncatedPoly(1, coeffs)


# ---------------------------------------------------------------------------
# JSON I/O.
# ---------------------------------------------------------------------------


def _class0_from_json(entries, path: str) -> MonodromicClass:
    terms = []
    for i, entry in enumerate(entries):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise SchemaError(f"{path}[{i}]", "expected [p, q, mult]")
        p, q, mult = entry
        terms.append((((), int(p), int(q)), int(mult)))
    return MonodromicClass(0, terms)


def _classr_from_json(entries, arity: int, path: str) -> MonodromicClass:
    terms = []
    for i, entry in enumerate(entries):
        if not (isinstance(entry, list) and len(entry) == arity + 3):
            raise SchemaError(
                f"{path}[{i}]", f"expected {arity} [num,den] pairs then p, q, mult"
            )
        evs = []
        for j in range(arity):
            pair = entry[j]
            if not (isinstance(pair, list) and len(pair) == 2):
                raise SchemaError(f"{path}[{i}][{j}]", "expected [num, den]")
            evs.append(Fraction(int(pair[0]), int(pair[1])))
        p, q, mult = entry[arity:]
        terms.append(((tuple(evs), int(p), int(q)), int(mult)))
    return MonodromicClass(arity, terms)


def datum_from_dict(data: dict) -> ResolutionDatum:
    if not isinstance(data, dict):
        raise SchemaError("$", "datum must be a JSON object")

    def need(key, typ, path="$"):
        if key not in data:
            raise SchemaError(f"{path}.{key}", "missing required field")
        value = data[key]
        if typ is int and isinstance(value, bool) or not isinstance(value, typ):
            raise SchemaError(f"{path}.{key}", f"expected {typ.__name__}")
        return value

    dimension = need("dimension", int)
    local = need("local", bool)
    functions = tuple(need("functions", list))
    arity = len(functions)
    comps = []
    for i, raw in enumerate(need("components", list)):
        path = f"components[{i}]"
        if not isinstance(raw, dict):
            raise SchemaError(path, "expected object")
        if "id" not in raw or not isinstance(raw["id"], str):
            raise SchemaError(path + ".id", "expected string")
        for fieldname in ("Nf", "Ng", "nu"):
            if fieldname in raw and (isinstance(raw[fieldname], bool) or not isinstance(raw[fieldname], int)):
                raise SchemaError(path + "." + fieldname, "expected integer")
        if "nu" not in raw:
            raise SchemaError(path + ".nu", "missing required field")
        if "Ng" not in raw:
            raise SchemaError(path + ".Ng", "missing required field")
        comps.append(
            Component(raw["id"], int(raw.get("Nf", 0)), int(raw["Ng"]), int(raw["nu"]))
        )
    strata = []
    for i, raw in enumerate(need("strata", list)):
        path = f"strata[{i}]"
        if not isinstance(raw, dict):
            raise SchemaError(path, "expected object")
        if "components" not in raw or not isinstance(raw["components"], list):
            raise SchemaError(path + ".components", "expected list of component ids")
        cover = raw.get("cover", "split")
        base = None
        explicit = None
        if cover == "split":
            if "base_class" not in raw:
                raise SchemaError(path + ".base_class", "required for split covers")
            base = _class0_from_json(raw["base_class"], path + ".base_class")
        elif isinstance(cover, dict) and set(cover) == {"explicit"}:
            if "base_class" in raw:
                raise SchemaError(
                    path + ".base_class",
                    "explicit covers carry the total class; base_class must be omitted",
                )
            explicit = _classr_from_json(cover["explicit"], arity, path + ".cover.explicit")
        else:
            raise SchemaError(path + ".cover", 'expected "split" or {"explicit": [...]}')
        strata.append(Stratum(tuple(raw["components"]), base=base, explicit=explicit))
    zl = None
    if "zero_locus_nearby" in data:
        zl = _classr_from_json(data["zero_locus_nearby"], 1, "zero_locus_nearby")
    try:
        return ResolutionDatum(dimension, local, functions, tuple(comps), tuple(strata), zl)
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError("$", str(exc))


def load_datum(path: str) -> ResolutionDatum:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SchemaError(path, f"malformed JSON: {exc}") from exc
    return datum_from_dict(data)


def _class0_to_json(cls: MonodromicClass):
    return [[p, q, mult] for ((_evs, p, q), mult) in cls.terms()]


def _classr_to_json(cls: MonodromicClass):
    out = []
    for ((evs, p, q), mult) in cls.terms():
        out.append([[e.numerator, e.denominator] for e in evs] + [p, q, mult])
    return out


def datum_to_dict(datum: ResolutionDatum) -> dict:
    data = {
        "dimension": datum.dimension,
        "local": datum.local,
        "functions": list(datum.functions),
        "components": [
            {"id": c.id, **({"Nf": c.nf} if c.nf else {}), "Ng": c.ng, "nu": c.nu}
            for c in datum.components
        ],
        "strata": [],
    }
    for st in datum.strata:
        entry = {"components": list(st.components)}
        if st.explicit is not None:
            entry["cover"] = {"explicit": _classr_to_json(st.explicit)}
        else:
            entry["base_class"] = _class0_to_json(st.base)
            entry["cover"] = "split"
        data["strata"].append(entry)
    if datum.zero_locus_nearby is not None:
        data["zero_locus_nearby"] = _classr_to_json(datum.zero_locus_nearby)
    return data
