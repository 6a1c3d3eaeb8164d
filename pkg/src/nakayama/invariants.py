"""Coxeter matrices, Euler forms and the Bruhat regularity criteria."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .core import INF, Interval, KupischSeries, NakayamaAlgebra
from .errors import InfiniteGlobalDimension, TheoremViolation, ValidationError
from .linalg import (
    Matrix,
    Permutation,
    bruhat_column_permutation,
    bruhat_row_permutation,
    coxeter_from_cartan,
    inverse_exact,
    is_permutation_times_upper,
)
from .monomial import (
    MonomialPresentation,
    NaturalLabelling,
    cartan_matrix_monomial,
    identity_labelling,
    inverse_ar_map_monomial,
    is_two_gorenstein,
)
from .verdict import Verdict


class AlgebraHandle:
    """A Nakayama algebra or a labelled monomial presentation, with its Cartan matrix."""

    def __init__(self, source, labelling: NaturalLabelling | None = None, debug: bool | None = None):
        if isinstance(source, (str, KupischSeries)):
            source = NakayamaAlgebra(source)
        self.nakayama: NakayamaAlgebra | None = None
        self.presentation: MonomialPresentation | None = None
        self.labelling = None
        if isinstance(source, NakayamaAlgebra):
            if labelling is not None:
                raise ValidationError("Nakayama algebras are always in their canonical labelling")
            self.nakayama = source
            self.n = source.n
        elif isinstance(source, MonomialPresentation):
            self.presentation = source
            self.labelling = labelling or identity_labelling(source)
            if not self.labelling.is_natural_for(source):
                raise ValidationError("labelling is not natural for this quiver")
            self.n = source.vertex_count
        else:
            raise ValidationError(f"cannot build an algebra from {type(source).__name__}")
        self.debug = bool(os.environ.get("NAKAYAMA_DEBUG")) if debug is None else debug

    @classmethod
    def of(cls, x) -> AlgebraHandle:
        if isinstance(x, AlgebraHandle):
            return x
        if isinstance(x, NakayamaAlgebra):
            # one handle per algebra object, so cached matrices are shared
            handle = x.__dict__.get("_handle")
            if handle is None:
                handle = x.__dict__["_handle"] = cls(x)
            return handle
        return cls(x)

    def describe(self) -> str:
        if self.nakayama is not None:
            return self.nakayama.describe()
        return self.presentation.describe()

    def _compute_cartan(self) -> Matrix:
        if self.nakayama is not None:
            return self.nakayama.cartan_matrix()
        return cartan_matrix_monomial(self.presentation, self.labelling)

    @cached_property
    def _cartan(self) -> Matrix:
        return self._compute_cartan()

    @property
    def cartan(self) -> Matrix:
        if self.debug and self._compute_cartan() != self._cartan:
            raise TheoremViolation("cached Cartan matrix went stale", self.describe())
        return self._cartan

    @cached_property
    def cartan_inverse(self) -> Matrix:
        return inverse_exact(self.cartan)

    def global_dimension(self):
        """Exact for Nakayama handles; None (not computed) for monomial ones."""
        return self.nakayama.global_dimension() if self.nakayama is not None else None


def _require_finite_gldim(a: AlgebraHandle):
    gd = a.global_dimension()
    if gd == INF:
        raise InfiniteGlobalDimension(f"{a.describe()} has infinite global dimension")


def coxeter_matrix(a) -> Matrix:
    """``-ωᵀ ω⁻¹``; refuses infinite global dimension and non-unimodular ω."""
    a = AlgebraHandle.of(a)
    _require_finite_gldim(a)
    return coxeter_from_cartan(a.cartan)


def _as_int(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def euler_form(a, x: Sequence, y: Sequence):
    """``xᵀ (ω⁻¹)ᵀ y``."""
    a = AlgebraHandle.of(a)
    if len(x) != a.n or len(y) != a.n:
        raise ValidationError(f"vectors must have length {a.n}")
    _require_finite_gldim(a)
    w = a.cartan_inverse.apply(x)
    return _as_int(sum(u * v for u, v in zip(w, y)))


def euler_form_vs_ext(a, m1: Interval, m2: Interval) -> tuple[int, int]:
    """(⟨dim m1, dim m2⟩, Σ (-1)^j dim Ext^j(m1, m2)); equal by theory."""
    a = AlgebraHandle.of(a)
    alg = a.nakayama
    if alg is None:
        raise ValidationError("Ext dimensions are only available for Nakayama algebras")
    gd = alg.global_dimension()
    if gd == INF:
        raise InfiniteGlobalDimension(f"{alg.describe()} has infinite global dimension")
    form = euler_form(a, alg.dimension_vector(m1), alg.dimension_vector(m2))
    alternating = sum((-1) ** j * d for j, d in enumerate(alg.ext_dims(m1, m2, gd)))
    return form, alternating


def coxeter_permutation(a) -> Permutation:
    """Column permutation of the Bruhat form of C, cross-checked against the row
    permutation of a lower triangular Cartan matrix."""
    a = AlgebraHandle.of(a)
    from_coxeter = bruhat_column_permutation(coxeter_matrix(a))
    if a.cartan.is_lower_triangular():
        from_cartan = bruhat_row_permutation(a.cartan)
        if from_cartan != from_coxeter:
            raise TheoremViolation(
                f"Coxeter permutation {from_coxeter} differs from the Cartan row permutation {from_cartan}",
                a.describe(),
            )
    return from_coxeter


def pu_criterion(a) -> Permutation | None:
    """Leading-entry permutation of C when C = P·U, else None."""
    return is_permutation_times_upper(coxeter_matrix(a))


def _linear(k) -> NakayamaAlgebra:
    alg = k.nakayama if isinstance(k, AlgebraHandle) else NakayamaAlgebra(k) if not isinstance(k, NakayamaAlgebra) else k
    if alg is None or not alg.linear:
        raise ValidationError("a linear Nakayama algebra is required")
    return alg


def decide_auslander_regular_linear(k) -> Verdict:
    """Three independent decisions that must agree: the Bruhat criterion on the
    Coxeter matrix, the homological definition, and bijectivity of σ."""
    alg = _linear(k)
    pu = pu_criterion(alg)
    homological = alg.is_auslander_regular()
    sigma = alg.inverse_ar_map()
    cert = {"homological": homological.certificate}
    verdict = Verdict.agreeing(
        {
            "pu_criterion": pu is not None,
            "homological": bool(homological.decision),
            "sigma_bijective": sigma.is_bijection,
        },
        "both",
        cert,
        alg.describe(),
    )
    if pu is not None:
        cox = pu.inverse()
        psi = alg.ar_map().permutation
        if psi != cox:
            raise TheoremViolation(f"Coxeter permutation {cox} differs from AR permutation {psi}", alg.describe())
        verdict.certificate["coxeter_permutation"] = list(cox)
    return verdict


def property_star_violations(k) -> list[str]:
    """Coresolutions of projectives whose last socle is not strictly the smallest."""
    alg = _linear(k)
    out = []
    for i in range(1, alg.n + 1):
        terms = alg.min_inj_coresolution(alg.projective(i)).terms
        last = terms[-1]
        if len(last) != 1:
            out.append(f"P({i}): last term is decomposable")
            continue
        if any(y <= last[0] for term in terms[:-1] for y in term):
            out.append(f"P({i}): last socle {last[0]} is not below {terms[:-1]}")
    return out


@dataclass(frozen=True)
class ARPUReport:
    holds: bool
    coxeter_permutation: Permutation | None
    ar_permutation: Permutation


def ar_implies_pu_check(a) -> ARPUReport:
    """For a certified Auslander regular acyclic algebra: C = P·U and the Coxeter
    permutation equals the AR permutation ψ̂."""
    a = AlgebraHandle.of(a)
    if a.nakayama is not None:
        alg = _linear(a)
        if not alg.is_auslander_regular().decision:
            raise ValidationError(f"{alg.describe()} is not Auslander regular")
        psi = alg.ar_map().permutation
    else:
        p = a.presentation
        if not is_two_gorenstein(p).decision:
            raise ValidationError("regularity can only be certified for 2-Gorenstein presentations")
        sigma = inverse_ar_map_monomial(p)
        if not sigma.bijective:
            raise ValidationError("presentation is not Auslander regular")
        # ψ̂ in the coordinates of the labelling
        psi = sigma.permutation.inverse().conjugate_by(a.labelling.order.inverse())
    pu = pu_criterion(a)
    cox = pu.inverse() if pu is not None else None
    report = ARPUReport(pu is not None and cox == psi, cox, psi)
    if not report.holds:
        raise TheoremViolation(f"regular algebra fails the PU criterion: {report}", a.describe())
    return report


def rotate(k: KupischSeries, shift: int) -> KupischSeries:
    """Relabel vertex v as ((v - 1 - shift) mod n) + 1."""
    n = k.n
    return KupischSeries(k.orientation, tuple(k.c[(w + shift) % n] for w in range(n)))


@dataclass(frozen=True)
class ShiftRow:
    shift: int
    kupisch: KupischSeries
    ringel: Permutation
    coxeter_permutation: Permutation
    pu: Permutation | None


@dataclass(frozen=True)
class CyclicNegativeReport:
    name: str
    kupisch: KupischSeries
    auslander_regular: bool
    rows: tuple[ShiftRow, ...]
    passed: bool


def shift_table(k: KupischSeries) -> tuple[ShiftRow, ...]:
    rows = []
    for s in range(k.n):
        alg = NakayamaAlgebra(rotate(k, s))
        rows.append(ShiftRow(s, alg.kupisch, alg.ringel_permutation(), coxeter_permutation(alg), pu_criterion(alg)))
    return tuple(rows)


FOUR_VERTEX_RELATIONS = ((1, 2), (3, 3))
FIVE_VERTEX_RELATIONS = ((1, 2), (2, 2), (4, 2))


def cyclic_negative_checks() -> list[CyclicNegativeReport]:
    """The two cyclic algebras where no cyclic shift of the vertex order helps.

    Relations ``a1a2, a3a4a1`` on four vertices: no shift makes the Coxeter
    permutation equal Ringel's.  Relations ``a1a2, a2a3, a4a5`` on five
    vertices: regular, yet no shift makes C = P·U.
    """
    from .core import kupisch_from_relations

    out = []
    k4 = kupisch_from_relations(4, FOUR_VERTEX_RELATIONS)
    rows = shift_table(k4)
    ar4 = bool(NakayamaAlgebra(k4).is_auslander_regular().decision)
    out.append(
        CyclicNegativeReport(
            "four-vertex", k4, ar4, rows, all(r.ringel != r.coxeter_permutation for r in rows)
        )
    )
    k5 = kupisch_from_relations(5, FIVE_VERTEX_RELATIONS)
    rows = shift_table(k5)
    ar5 = bool(NakayamaAlgebra(k5).is_auslander_regular().decision)
    out.append(CyclicNegativeReport("five-vertex", k5, ar5, rows, ar5 and all(r.pu is None for r in rows)))
    return out


@dataclass
class ProbeReport:
    algebra: str
    injective_dimension: int
    values: dict[tuple[int, int], int] = field(default_factory=dict)
    violations: list[tuple[int, int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "injective_dimension": self.injective_dimension,
            "ext_dims": [{"simple": j, "degree": i, "dim": d} for (j, i), d in sorted(self.values.items())],
            "violations": [{"simple": j, "degree": i, "dim": d} for j, i, d in self.violations],
        }


def conjecture_probe(k) -> ProbeReport:
    """dim Ext^i(S, A) for every simple S and odd i ≤ idim A; values above 1 are flagged."""
    alg = k if isinstance(k, NakayamaAlgebra) else NakayamaAlgebra(k)
    if not alg.is_auslander_gorenstein().decision:
        raise ValidationError(f"{alg.describe()} is not Auslander-Gorenstein")
    idim = max(alg.idim(alg.projective(i)) for i in range(1, alg.n + 1))
    report = ProbeReport(alg.describe(), idim)
    projectives = [alg.projective(i) for i in range(1, alg.n + 1)]
    for j in range(1, alg.n + 1):
        for i in range(1, idim + 1, 2):
            d = sum(alg.ext_dim_simple_into(i, j, p) for p in projectives)
            report.values[(j, i)] = d
            if d > 1:
                report.violations.append((j, i, d))
    return report

