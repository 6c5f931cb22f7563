"""End-to-end proofs that two forms represent exactly the same integers.

A pair proof has one record per inclusion direction.  An inclusion
Q(g) <= Q(f) is established by a *cover proof*: a family of residue
classes that covers every residue g can attain, where each class either
has only good cosets (every g-value in the class transports to an
f-value of the same size) or carries an *escape argument* for its bad
cosets.

The escape argument for a class (d, a) is a matrix E with
E^t M_g E = d^2 M_g such that (1/d) u E^t is integral for every bad
coset u.  Iterating v -> (1/d) v E^t preserves g-values, so a value
g(v) = n with v stuck in bad cosets forever would visit infinitely many
vectors of the finite set {w : g(w) = n} - impossible once (1/d)E has
infinite order - unless v lies on an eigenline of E.  Values on
eigenlines form finitely many families m * t^2 (m the value at a
primitive eigenvector), and each family is swallowed by one witness
f(w) = m, since f(t w) = m t^2.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import lcm

import numpy as np

from . import _mat, fixtures
from .congruence import (
    CoverReport,
    GoodVectorReport,
    ResidueClass,
    attainable_residues,
    cover_check,
    precedes,
    transport,
)
from .enumeration import representations, represented_mask
from .forms import QuadForm, Vector3, evaluate, require_positive_definite
from .isometry import is_isometric, scaled_automorphisms, subform_witness

AUTO_MODULI = (4, 8, 12, 24, 36, 48)
_POWER_RANGE = 6  # eigenlines of E^k are also excluded, k <= this


class ProofError(Exception):
    """Base class for proof construction failures."""


class CoverIncomplete(ProofError):
    def __init__(self, report: CoverReport):
        self.report = report
        super().__init__(
            f"classes miss attainable residues {report.uncovered} mod {report.modulus}"
        )


class ClassUnprovable(ProofError):
    def __init__(self, cls: ResidueClass, reason=""):
        self.cls = cls
        super().__init__(f"class ({cls.d},{cls.a}) resists both routes{': ' + reason if reason else ''}")


class NoEscapeMatrix(ProofError):
    pass


class EigenvalueBaseNotRepresented(ProofError):
    def __init__(self, base: int):
        self.base = base
        super().__init__(f"eigenvector base value {base} is not represented")


class MismatchAt(ProofError):
    """First integer represented by one form of a pair but not the other."""

    def __init__(self, n: int, f: QuadForm, g: QuadForm):
        self.n, self.f, self.g = int(n), f, g
        super().__init__(f"represented sets differ first at {n}")


def _escape_budget(max_nodes=None) -> int:
    if max_nodes is not None:
        return int(max_nodes)
    env = os.environ.get("TERNREP_MAX_NODES")
    return int(env) if env else 10**6


@dataclass(frozen=True)
class EigenFamily:
    """One exceptional value family m t^2 coming from an eigenline.

    vector is a primitive eigenvector of E^power with the given
    eigenvalue; base = g(vector); witness satisfies f(witness) = base.
    """

    vector: Vector3
    eigenvalue: int
    power: int
    base: int
    witness: Vector3


@dataclass(frozen=True)
class EscapeArgument:
    cls: ResidueClass
    matrix: tuple
    bad: tuple
    families: tuple

    @property
    def eigenvectors(self):
        return tuple((fam.vector, fam.eigenvalue) for fam in self.families if fam.power == 1)

    @property
    def exceptional_values(self):
        return tuple(sorted({fam.base for fam in self.families}))

    @property
    def f_covers(self):
        return tuple((fam.base, fam.witness) for fam in self.families)


@dataclass(frozen=True)
class SubformDirection:
    """Q(sub) <= Q(sup), witnessed by witness^t (2M_sup) witness = 2M_sub."""

    sub: QuadForm
    sup: QuadForm
    witness: tuple


@dataclass(frozen=True)
class ClassProof:
    cls: ResidueClass
    report: GoodVectorReport
    escape: EscapeArgument | None = None


@dataclass(frozen=True)
class CoverDirection:
    """Q(sub) <= Q(sup) via a covering family of residue-class proofs."""

    sub: QuadForm
    sup: QuadForm
    classes: tuple


@dataclass(frozen=True)
class PairProof:
    f: QuadForm
    g: QuadForm
    f_in_g: object  # SubformDirection | CoverDirection
    g_in_f: object
    empirical_bound: int


def evaluate_escape_matrix(f, g, cls, report, matrix):
    """Validate one candidate escape matrix.

    Returns an EscapeArgument when the matrix satisfies every requirement
    for the bad cosets of the report, otherwise the name of the first
    failed requirement ('integrality', 'finite_order', 'descent',
    'eigenspace_dimension', or ('base', m) for an unrepresented base).
    """
    d = cls.d
    bad = report.bad
    for u in bad:
        if any(c % d for c in _mat.act(matrix, u)):
            return "integrality"
    if _mat.is_finite_order_scaled(matrix, d):
        return "finite_order"
    # descent stays inside the class: transported bad cosets are cosets again
    coset_pool = {v for v, _ in report.good} | set(bad)
    for u in bad:
        w = transport(u, matrix, d)
        if Vector3(*(c % d for c in w)) not in coset_pool:
            return "descent"
    families = []
    seen_vectors = {}
    base_failure = None
    power = _mat.IDENTITY
    for k in range(1, _POWER_RANGE + 1):
        power = _mat.mat_mul(power, matrix)
        lines = _mat.eigen_lines(power)
        per_eigenvalue = {}
        for v, lam in lines:
            per_eigenvalue.setdefault(lam, []).append(v)
        if any(len(vs) > 1 for vs in per_eigenvalue.values()):
            return "eigenspace_dimension"
        for v, lam in lines:
            if v in seen_vectors:
                continue
            base = evaluate(g, v)
            reps = representations(f, base)
            if not reps:
                base_failure = base
                continue
            seen_vectors[v] = True
            families.append(EigenFamily(Vector3(*v), lam, k, base, reps[0]))
    if base_failure is not None:
        return ("base", base_failure)
    return EscapeArgument(cls, matrix, bad, tuple(families))


def build_escape(f: QuadForm, g: QuadForm, cls: ResidueClass,
                 report: GoodVectorReport, max_nodes=None) -> EscapeArgument:
    """Find an escape argument for the bad cosets of a class.

    Scans the scaled automorphisms of g at modulus d in deterministic
    order and returns the first matrix passing every requirement.
    """
    if not report.bad:
        raise ValueError("build_escape requires a class with bad cosets")
    autos = scaled_automorphisms(g, cls.d, max_nodes=_escape_budget(max_nodes))
    base_failure = None
    for matrix in autos.matrices:
        outcome = evaluate_escape_matrix(f, g, cls, report, matrix)
        if isinstance(outcome, EscapeArgument):
            return outcome
        if isinstance(outcome, tuple) and outcome[0] == "base":
            base_failure = outcome[1]
    if base_failure is not None:
        raise EigenvalueBaseNotRepresented(base_failure)
    raise NoEscapeMatrix(f"no scaled automorphism escapes class ({cls.d},{cls.a})")


def _prove_class(f, g, cls, escape_budget=None) -> ClassProof:
    report = precedes(f, g, cls)
    if report.all_good:
        return ClassProof(cls, report)
    try:
        escape = build_escape(f, g, cls, report, max_nodes=escape_budget)
    except ProofError as exc:
        raise ClassUnprovable(cls, str(exc)) from exc
    return ClassProof(cls, report, escape)


def prove_direction(f: QuadForm, g: QuadForm, classes,
                    escape_budget=None, jobs: int = 1) -> CoverDirection:
    """Prove Q(g) <= Q(f) with an explicit covering family of classes."""
    classes = [cls if isinstance(cls, ResidueClass) else ResidueClass(*cls) for cls in classes]
    cover = cover_check(g, classes)
    if not cover.ok:
        raise CoverIncomplete(cover)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            proofs = list(pool.map(lambda c: _prove_class(f, g, c, escape_budget), classes))
    else:
        proofs = [_prove_class(f, g, cls, escape_budget) for cls in classes]
    return CoverDirection(sub=g, sup=f, classes=tuple(proofs))


def _covered(rho, accepted):
    return any(rho % proof.cls.d == proof.cls.a for proof in accepted)


def search_cover(f: QuadForm, g: QuadForm, escape_budget=None) -> CoverDirection:
    """Search for a covering family proving Q(g) <= Q(f).

    Moduli are tried in increasing order; within one modulus every
    attainable residue not already covered is attempted, first as a pure
    good-vector class, then with an escape argument.
    """
    accepted: list = []
    run_modulus = 1
    for d in AUTO_MODULI:
        for a in attainable_residues(g, d):
            scope = lcm(run_modulus, d)
            uncovered = [
                rho for rho in attainable_residues(g, scope) if not _covered(rho, accepted)
            ]
            if not uncovered:
                return CoverDirection(sub=g, sup=f, classes=tuple(accepted))
            if not any(rho % d == a for rho in uncovered):
                continue
            cls = ResidueClass(d, a)
            report = precedes(f, g, cls)
            if report.all_good:
                accepted.append(ClassProof(cls, report))
            else:
                try:
                    escape = build_escape(f, g, cls, report, max_nodes=escape_budget)
                except ProofError:
                    continue
                accepted.append(ClassProof(cls, report, escape))
            run_modulus = lcm(run_modulus, d)
    if accepted:
        cover = cover_check(g, [proof.cls for proof in accepted])
        if cover.ok:
            return CoverDirection(sub=g, sup=f, classes=tuple(accepted))
        raise CoverIncomplete(cover)
    raise CoverIncomplete(CoverReport(False, 1, attainable_residues(g, 1), attainable_residues(g, 1)))


def prove_pair(f: QuadForm, g: QuadForm, *, classes_g_in_f=None, classes_f_in_g=None,
               empirical_bound: int = 10**6, escape_budget=None, jobs: int = 1) -> PairProof:
    """Prove Q(f) = Q(g): subform shortcut for f in g when available, covers otherwise.

    The finished proof is cross-checked against exhaustive enumeration up
    to empirical_bound; a disagreement would be an implementation bug and
    raises RuntimeError.
    """
    require_positive_definite(f)
    require_positive_definite(g)
    witness = subform_witness(f, g)
    if witness is not None and classes_f_in_g is None:
        f_in_g = SubformDirection(sub=f, sup=g, witness=witness)
    elif classes_f_in_g is not None:
        f_in_g = prove_direction(g, f, classes_f_in_g, escape_budget, jobs)
    else:
        f_in_g = search_cover(g, f, escape_budget)
    if classes_g_in_f is not None:
        g_in_f = prove_direction(f, g, classes_g_in_f, escape_budget, jobs)
    else:
        g_in_f = search_cover(f, g, escape_budget)
    mf = represented_mask(f, empirical_bound)
    mg = represented_mask(g, empirical_bound)
    if not np.array_equal(mf, mg):
        n = int(np.flatnonzero(mf != mg)[0])
        raise RuntimeError(
            f"proof constructed but represented sets differ at {n}; this is a bug"
        )
    return PairProof(f, g, f_in_g, g_in_f, int(empirical_bound))


@dataclass(frozen=True)
class SetReport:
    set_id: str
    bound: int
    forms: tuple
    value_count: int
    isometric_pairs: tuple

    @property
    def all_non_isometric(self) -> bool:
        return not self.isometric_pairs


def verify_pairwise(forms, bound: int, jobs: int = 1):
    """Equal represented sets and pairwise non-isometry for a family of forms.

    Returns (value_count, isometric_pairs); raises MismatchAt on the first
    integer represented by one form but not another.
    """
    forms = tuple(forms)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            masks = list(pool.map(lambda fm: represented_mask(fm, bound), forms))
    else:
        masks = [represented_mask(fm, bound) for fm in forms]
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            if not np.array_equal(masks[i], masks[j]):
                n = int(np.flatnonzero(masks[i] != masks[j])[0])
                raise MismatchAt(n, forms[i], forms[j])
    isometric = tuple(
        (i, j)
        for i in range(len(forms))
        for j in range(i + 1, len(forms))
        if is_isometric(forms[i], forms[j]) is not None
    )
    return int(masks[0].sum()), isometric


def verify_table(set_id: str, bound: int = 10**6, scale_by: int = 2,
                 jobs: int = 1) -> SetReport:
    """Check one catalog set empirically: equal value sets, pairwise non-isometric.

    Raises MismatchAt on the first integer represented by one member but
    not another.
    """
    forms = fixtures.table_set(set_id, scale_by)
    value_count, isometric = verify_pairwise(forms, bound, jobs)
    return SetReport(set_id, int(bound), forms, value_count, isometric)


def kaplansky_family_pair(kind: str, a: int, b: int):
    """The conjectured same-representation pair of family iii or iv.

    iii: (a x^2 + b y^2 + b z^2 + b yz,  a x^2 + b y^2 + 3b z^2)
    iv:  (a x^2 + a y^2 + a z^2 + b yz + b xz + b xy,
          a x^2 + (2a-b) y^2 + (2a+b) z^2 + 2b xz)
    """
    a, b = int(a), int(b)
    if kind == "iii":
        pair = (QuadForm(a, b, b, b, 0, 0), QuadForm(a, b, 3 * b, 0, 0, 0))
    elif kind == "iv":
        pair = (QuadForm(a, a, a, b, b, b), QuadForm(a, 2 * a - b, 2 * a + b, 0, 2 * b, 0))
    else:
        raise ValueError(f"family kind must be 'iii' or 'iv', got {kind!r}")
    for form in pair:
        require_positive_definite(form)
    return pair
