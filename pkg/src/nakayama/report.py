"""The invariant bundle for one algebra, as plain JSON-ready data."""

from __future__ import annotations

from .core import INF, KupischSeries, NakayamaAlgebra
from .errors import SearchBoundExceeded
from .invariants import coxeter_matrix, coxeter_permutation, decide_auslander_regular_linear
from .linalg import Matrix, coxeter_from_cartan
from .monomial import (
    DEFAULT_LABELLING_CAP,
    MonomialPresentation,
    ar_map_monomial,
    cartan_matrix_monomial,
    coxeter_independence_check,
    coxeter_permutation_monomial,
    decide_auslander_regular_monomial,
    identity_labelling,
    is_two_gorenstein,
)

REPORT_FIELDS = (
    "algebra",
    "cartan",
    "coxeter",
    "coxeter_permutation",
    "ringel",
    "ar_permutation",
    "e",
    "del",
    "grade",
    "auslander_gorenstein",
    "auslander_regular",
    "methods_agreed",
    "global_dimension",
)


def number(x):
    """Integers stay integers; infinity becomes the string "inf"."""
    return "inf" if x == INF else x


def matrix_json(m: Matrix | None):
    if m is None:
        return None
    if m.is_integral():
        return [[int(x) for x in row] for row in m.rows]
    return m.to_json()


def nakayama_report(a: NakayamaAlgebra | KupischSeries | str) -> dict:
    if not isinstance(a, NakayamaAlgebra):
        a = NakayamaAlgebra(a)
    n = a.n
    finite = a.global_dimension() < INF
    if a.linear:
        verdict = decide_auslander_regular_linear(a)
        regular = bool(verdict.decision)
        gorenstein = bool(a.is_auslander_gorenstein().decision)
    else:
        verdict = a.is_auslander_gorenstein()
        gorenstein = bool(verdict.decision)
        regular = gorenstein and finite
    psi = a.ar_map()
    dels = []
    for j in range(1, n + 1):
        try:
            dels.append(a.delooping_level_module(a.simple(j)))
        except SearchBoundExceeded:
            dels.append(None)
    return {
        "algebra": a.kupisch.to_json(),
        "cartan": matrix_json(a.cartan_matrix()),
        "coxeter": matrix_json(coxeter_matrix(a)) if finite else None,
        "coxeter_permutation": list(coxeter_permutation(a)) if finite else None,
        "ringel": list(a.ringel_permutation()),
        "ar_permutation": list(psi.permutation) if psi.is_bijection else None,
        "e": [a.e(j) for j in range(1, n + 1)],
        "del": dels,
        "grade": [number(a.grade(j)) for j in range(1, n + 1)],
        "auslander_gorenstein": gorenstein,
        "auslander_regular": regular,
        "methods_agreed": True,
        "global_dimension": number(a.global_dimension()),
    }


def monomial_report(p: MonomialPresentation, labelling_cap: int = DEFAULT_LABELLING_CAP) -> dict:
    """Quiver-level report; Nakayama-only fields are null.

    Permutations are given on vertices, pulled back through the smallest
    natural labelling.
    """
    lab = identity_labelling(p)
    cartan = cartan_matrix_monomial(p, lab)
    coxeter = coxeter_from_cartan(cartan)
    gorenstein2 = bool(is_two_gorenstein(p).decision)
    out = {
        "algebra": p.to_json(),
        "cartan": matrix_json(cartan),
        "coxeter": matrix_json(coxeter),
        "coxeter_permutation": list(coxeter_permutation_monomial(p, lab).conjugate_by(lab.order)),
        "ringel": None,
        "ar_permutation": None,
        "e": None,
        "del": None,
        "grade": None,
        "auslander_gorenstein": False,
        "auslander_regular": False,
        "methods_agreed": True,
        "global_dimension": None,
    }
    if not gorenstein2:
        return out
    psi = ar_map_monomial(p)
    verdict = decide_auslander_regular_monomial(p, lab)
    out["ar_permutation"] = list(psi.permutation) if psi.bijective else None
    # acyclic, so finite global dimension: Gorenstein and regular coincide
    out["auslander_gorenstein"] = out["auslander_regular"] = bool(verdict.decision)
    if verdict.decision:
        ind = coxeter_independence_check(p, cap=labelling_cap)
        out["labellings_checked"] = ind.labellings_checked
        out["coxeter_independent"] = ind.independent
    return out


def csv_row(report: dict) -> dict:
    """Flatten for CSV: lists become semicolon-joined, matrices are dropped."""
    row = {}
    for key in REPORT_FIELDS:
        if key in ("cartan", "coxeter"):
            continue
        value = report.get(key)
        if key == "algebra":
            value = f"{value['orientation']}:{','.join(map(str, value['kupisch']))}" if "kupisch" in value else "quiver"
        elif isinstance(value, list):
            value = ";".join("" if x is None else str(x) for x in value)
        elif value is None:
            value = ""
        elif isinstance(value, bool):
            value = str(value).lower()
        row[key] = value
    return row
