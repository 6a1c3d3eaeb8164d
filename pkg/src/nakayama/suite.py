"""Cross-checks between independent computations, run over whole families.

Each check takes a :class:`NakayamaAlgebra` and returns a list of violation
messages.  A :class:`TheoremViolation` raised inside the library counts as a
violation too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .core import INF, NakayamaAlgebra
from .errors import TheoremViolation
from .invariants import (
    ar_implies_pu_check,
    conjecture_probe,
    coxeter_matrix,
    coxeter_permutation,
    decide_auslander_regular_linear,
    euler_form,
    euler_form_vs_ext,
    property_star_violations,
    pu_criterion,
)

Check = Callable[[NakayamaAlgebra], list]


def check_basics(a: NakayamaAlgebra) -> list[str]:
    """Monotone f and g, the soc/top inequalities, resolution lengths, Ext by two routes."""
    out = []
    n = a.n
    window = range(1, n + 1) if a.linear else range(1 - n, n + 1)
    fs = [a.f(j) for j in window]
    gs = [a.g(j) for j in window]
    if fs != sorted(fs) or gs != sorted(gs):
        out.append("f or g is not monotone")
    for j in window:
        for ell in window:
            if a.f(ell) - 1 < j and not ell - 1 < a.g(j):
                out.append(f"f({ell})-1 < {j} but not {ell}-1 < g({j})")
            if j <= a.f(ell) - 1 and not a.g(j) <= ell - 1:
                out.append(f"{j} <= f({ell})-1 but g({j}) > {ell}-1")
    for m in a.modules():
        for res, dim in ((a.min_proj_resolution(m), a.pdim(m)), (a.min_inj_coresolution(m), a.idim(m))):
            if res.length != dim:
                out.append(f"{m}: resolution length {res.length} vs formula {dim}")
    limit = 2 * n + 2
    for i in range(1, n + 1):
        proj = a.projective(i)
        for j in range(1, n + 1):
            simple = a.simple(j)
            for ell in range(limit):
                if a.ext_dim_simple_into(ell, j, proj) != a.ext_dim(ell, simple, proj):
                    out.append(f"Ext^{ell}(S_{j}, P({i})): socle count and dimension shift differ")
    return out


def check_ringel_duality(a: NakayamaAlgebra) -> list[str]:
    out = []
    h = a.ringel_permutation()
    for j in range(1, a.n + 1):
        e = a.e(j)
        if e != a.e_star(h(j)):
            out.append(f"e(S_{j}) = {e} but e*(S_{h(j)}) = {a.e_star(h(j))}")
        ps, pi = a.pdim(a.simple(j)), a.pdim(a.injective(j))
        if e % 2 == 1 and not e == ps <= pi:
            out.append(f"S_{j}: odd e = {e} but pdim S = {ps}, pdim I = {pi}")
        if e % 2 == 0 and not e == pi <= ps:
            out.append(f"S_{j}: even e = {e} but pdim I = {pi}, pdim S = {ps}")
    return out


def check_h_eq_coxeter(a: NakayamaAlgebra) -> list[str]:
    if not a.linear:
        return []
    h, p = a.ringel_permutation(), coxeter_permutation(a)
    return [] if h == p else [f"Ringel {h} differs from Coxeter {p}"]


def check_ar_threeway(a: NakayamaAlgebra) -> list[str]:
    if not a.linear:
        return []
    out = []
    verdict = decide_auslander_regular_linear(a)
    out.extend(property_star_violations(a))
    pu = pu_criterion(a) is not None
    if pu != a.inverse_ar_map().is_bijection:
        out.append("σ bijective and C = P·U disagree")
    if verdict.decision:
        ar_implies_pu_check(a)
    c = coxeter_matrix(a)
    for i in range(1, a.n + 1):
        for j in range(1, a.n + 1):
            value = euler_form(a, a.dimension_vector(a.simple(j)), a.dimension_vector(a.projective(i)))
            if c[i - 1, j - 1] != -value:
                out.append(f"C[{i},{j}] = {c[i - 1, j - 1]} but <S_{j}, P({i})> = {value}")
    return out


def check_del_eq_e(a: NakayamaAlgebra) -> list[str]:
    out = []
    for j in range(1, a.n + 1):
        brute = a.delooping_level_module(a.simple(j))
        if brute != a.delooping_level(j):
            out.append(f"del(S_{j}) = {brute} but e(S_{j}) = {a.e(j)}")
    return out


def check_witness(a: NakayamaAlgebra) -> list[str]:
    for j in range(1, a.n + 1):
        if a.e(j) >= 2:
            a.witness_module(j)
    return []


def check_euler_ext(a: NakayamaAlgebra) -> list[str]:
    if a.global_dimension() == INF:
        return []
    out = []
    mods = [a.simple(i) for i in range(1, a.n + 1)] + [a.projective(i) for i in range(1, a.n + 1)]
    for m1 in mods:
        for m2 in mods:
            form, ext = euler_form_vs_ext(a, m1, m2)
            if form != ext:
                out.append(f"<{m1}, {m2}> = {form} but the Ext sum is {ext}")
    return out


def check_ringel_eq_grade(a: NakayamaAlgebra) -> list[str]:
    """Statements about Auslander-Gorenstein algebras; ψ̂ bijective iff AG for all."""
    out = []
    ag = bool(a.is_auslander_gorenstein().decision)
    psi = a.ar_map()
    if ag != psi.is_bijection:
        out.append(f"AG = {ag} but ψ̂ bijective = {psi.is_bijection}")
    if not ag:
        return out
    h = a.ringel_permutation()
    if h != psi.permutation:
        out.append(f"Ringel {h} differs from ψ̂ {psi.permutation}")
    for j in range(1, a.n + 1):
        g, e = a.grade(j), a.e(j)
        d = a.delooping_level_module(a.simple(j))
        if not g == e == d:
            out.append(f"S_{j}: grade {g}, e {e}, del {d}")
        if a.cograde(j) != a.idim(a.projective(j)):
            out.append(f"S_{j}: cograde differs from idim P")
        pi = a.pdim(a.injective(j))
        if pi < INF and pi % 2 == 1 and not pi == a.pdim(a.simple(j)) == g:
            out.append(f"S_{j}: pdim I = {pi} odd but pdim S = {a.pdim(a.simple(j))}, grade {g}")
        target = psi.permutation(j)
        if a.idim(a.projective(target)) != pi:
            out.append(f"idim P({target}) differs from pdim I({j})")
    return out


def check_madsen(a: NakayamaAlgebra) -> list[str]:
    out = []
    for big in a.modules():
        pb = a.pdim(big)
        if pb == INF or pb % 2 == 0:
            continue
        for small in a.submodules(big):
            ps = a.pdim(small)
            if ps == INF or ps % 2 == 0 or ps > pb:
                out.append(f"{small} ⊆ {big}: pdim {ps} vs {pb}")
    return out


def check_conjecture(a: NakayamaAlgebra) -> list:
    """Never a violation: findings go into the probe report instead."""
    return []


CHECKS: dict[str, Check] = {
    "basics": check_basics,
    "ringel-duality": check_ringel_duality,
    "h-eq-coxeter": check_h_eq_coxeter,
    "ar-threeway": check_ar_threeway,
    "del-eq-e": check_del_eq_e,
    "witness": check_witness,
    "euler-ext": check_euler_ext,
    "ringel-eq-grade": check_ringel_eq_grade,
    "madsen": check_madsen,
}

LINEAR_SUITE = ("h-eq-coxeter", "ar-threeway", "del-eq-e", "witness", "euler-ext")
CYCLIC_SUITE = ("del-eq-e", "ringel-eq-grade", "madsen")


@dataclass
class SuiteReport:
    """Counts and violations; reports from disjoint families add up."""

    algebras: int = 0
    auslander_gorenstein: int = 0
    auslander_regular: int = 0
    violations: list[dict] = field(default_factory=list)
    probe_findings: list[dict] = field(default_factory=list)

    def merge(self, other: SuiteReport) -> SuiteReport:
        return SuiteReport(
            self.algebras + other.algebras,
            self.auslander_gorenstein + other.auslander_gorenstein,
            self.auslander_regular + other.auslander_regular,
            self.violations + other.violations,
            self.probe_findings + other.probe_findings,
        )

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "algebras": self.algebras,
            "auslander_gorenstein": self.auslander_gorenstein,
            "auslander_regular": self.auslander_regular,
            "violations": self.violations,
            "probe_findings": self.probe_findings,
        }


def run_checks(a: NakayamaAlgebra, names, checks: dict[str, Check] | None = None, probe: bool = False) -> SuiteReport:
    checks = checks or CHECKS
    report = SuiteReport(algebras=1)
    try:
        ag = bool(a.is_auslander_gorenstein().decision)
        report.auslander_gorenstein = int(ag)
        report.auslander_regular = int(ag and a.global_dimension() < INF)
    except TheoremViolation as exc:
        report.violations.append({"algebra": a.describe(), "check": "auslander-gorenstein", "message": str(exc)})
        ag = False
    for name in names:
        try:
            messages = checks[name](a)
        except TheoremViolation as exc:
            messages = [str(exc)]
        for msg in messages:
            report.violations.append({"algebra": a.describe(), "check": name, "message": msg})
    if probe and ag:
        found = conjecture_probe(a)
        report.probe_findings.append(found.to_json())
    return report
