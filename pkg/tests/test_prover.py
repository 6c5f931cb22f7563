import random

import pytest

from ternrep import (
    ClassUnprovable,
    CoverDirection,
    CoverIncomplete,
    EscapeArgument,
    MismatchAt,
    NotPositiveDefinite,
    QuadForm,
    ResidueClass,
    SubformDirection,
    Vector3,
    build_escape,
    doubled_gram,
    evaluate,
    evaluate_escape_matrix,
    kaplansky_family_pair,
    named_form,
    precedes,
    prove_direction,
    prove_pair,
    search_cover,
    transport,
    verify_pairwise,
    verify_table,
)
from ternrep import _mat, prover

TTILDE = ((12, 6, 2), (0, 0, 12), (0, -12, -8))

S6_CLASSES = [(4, 2), (8, 0), (24, 12), (24, 20), (48, 4), (48, 28)]
S4_CLASSES = [(4, 0), (12, 6), (12, 10), (12, 2)]


def test_prove_direction_pure_good(s6):
    f, g = s6
    direction = prove_direction(f, g, S6_CLASSES)
    assert isinstance(direction, CoverDirection)
    assert direction.sub == g and direction.sup == f
    assert len(direction.classes) == 6
    assert all(p.report.all_good and p.escape is None for p in direction.classes)


def test_prove_direction_with_escape(s4):
    f, g = s4
    direction = prove_direction(f, g, S4_CLASSES)
    by_class = {(p.cls.d, p.cls.a): p for p in direction.classes}
    assert by_class[(12, 2)].escape is not None
    assert all(p.escape is None for key, p in by_class.items() if key != (12, 2))


def test_prove_direction_trivial_self_pair():
    f = named_form("S10a")
    direction = prove_direction(f, f, [(1, 0)])
    assert len(direction.classes) == 1
    assert direction.classes[0].report.all_good


def test_prove_direction_incomplete_cover(s4):
    f, g = s4
    with pytest.raises(CoverIncomplete):
        prove_direction(f, g, [(4, 0), (12, 6)])  # residue 2 mod 12 uncovered


def test_prove_direction_unprovable_class():
    f = QuadForm(1, 1, 1, 0, 0, 0)
    g = QuadForm(1, 1, 2, 0, 0, 0)  # represents 7, f does not
    with pytest.raises(ClassUnprovable):
        prove_direction(f, g, [(1, 0)])


def test_build_escape_s4(s4):
    f, g = s4
    cls = ResidueClass(12, 2)
    report = precedes(f, g, cls)
    escape = build_escape(f, g, cls, report)
    assert isinstance(escape, EscapeArgument)
    # defining identity
    G = doubled_gram(g)
    assert _mat.congruence(escape.matrix, G) == _mat.scalar_mul(144, G)
    # every bad coset becomes integral
    assert len(escape.bad) == 32
    for u in escape.bad:
        assert transport(u, escape.matrix, 12) is not None
    # infinite order of matrix / 12
    assert not _mat.is_finite_order_scaled(escape.matrix, 12)
    # exceptional family: base 8 witnessed by a vector of value 8 under f
    assert escape.exceptional_values == (8,)
    for base, witness in escape.f_covers:
        assert evaluate(f, witness) == base
    assert {v for v, _ in escape.eigenvectors} == {Vector3(1, 0, 0)}


def test_displayed_escape_matrix_is_valid(s4):
    f, g = s4
    cls = ResidueClass(12, 2)
    report = precedes(f, g, cls)
    outcome = evaluate_escape_matrix(f, g, cls, report, TTILDE)
    assert isinstance(outcome, EscapeArgument)
    assert outcome.eigenvectors == ((Vector3(1, 0, 0), 12),)


def test_scaled_identity_is_rejected_as_escape(s4):
    f, g = s4
    cls = ResidueClass(12, 2)
    report = precedes(f, g, cls)
    outcome = evaluate_escape_matrix(f, g, cls, report, _mat.scaled_identity(12))
    assert outcome == "finite_order"


def test_escape_requires_bad_cosets(s4):
    f, g = s4
    report = precedes(f, g, ResidueClass(4, 0))
    with pytest.raises(ValueError):
        build_escape(f, g, ResidueClass(4, 0), report)


def test_escape_descent_preserves_values(s4):
    f, g = s4
    cls = ResidueClass(12, 2)
    report = precedes(f, g, cls)
    escape = build_escape(f, g, cls, report)
    rng = random.Random(41)
    for u in escape.bad[:8]:
        for _ in range(3):
            lift = tuple(c + 12 * rng.randint(-2, 2) for c in u)
            image = transport(lift, escape.matrix, 12)
            assert image is not None
            assert evaluate(g, image) == evaluate(g, lift)


def test_prove_pair_structures(s4, s7, s8):
    f7, g7 = s7
    proof = prove_pair(f7, g7, empirical_bound=20000)
    assert isinstance(proof.f_in_g, SubformDirection)
    assert isinstance(proof.g_in_f, CoverDirection)

    f8, g8 = s8
    proof8 = prove_pair(f8, g8, empirical_bound=20000)
    assert isinstance(proof8.f_in_g, CoverDirection)  # no subform either way
    assert isinstance(proof8.g_in_f, CoverDirection)

    f4, _ = s4
    trivial = prove_pair(f4, f4, empirical_bound=1000)
    assert isinstance(trivial.f_in_g, SubformDirection)
    assert trivial.f_in_g.witness == _mat.IDENTITY


def test_prove_pair_with_explicit_lists(s8):
    f, g = s8
    classes = [(4, 0), (12, 2), (12, 6), (36, 10), (36, 22), (36, 34)]
    proof = prove_pair(
        f, g, classes_g_in_f=classes, classes_f_in_g=classes, empirical_bound=20000
    )
    assert [(p.cls.d, p.cls.a) for p in proof.g_in_f.classes] == classes
    assert [(p.cls.d, p.cls.a) for p in proof.f_in_g.classes] == classes
    assert all(p.report.all_good for p in proof.g_in_f.classes)
    assert all(p.report.all_good for p in proof.f_in_g.classes)


def test_search_cover_reports_failure_when_moduli_exhausted(s4, monkeypatch):
    f, g = s4
    monkeypatch.setattr(prover, "AUTO_MODULI", (4,))
    with pytest.raises(CoverIncomplete):
        search_cover(f, g)


def test_prove_pair_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        prove_pair(QuadForm(1, 1, 1, 0, 0, 3), QuadForm(1, 1, 1, 0, 0, 0))


def test_verify_pairwise_mismatch():
    f = QuadForm(1, 1, 1, 0, 0, 0)
    g = QuadForm(1, 1, 2, 0, 0, 0)
    with pytest.raises(MismatchAt) as info:
        verify_pairwise([f, g], 50)
    assert info.value.n == 7  # 7 = 1 + 4 + 2 but not a sum of three squares


def test_verify_table_smoke():
    report = verify_table("S13", bound=20000)
    assert len(report.forms) == 4
    assert report.all_non_isometric
    assert report.value_count > 0
    report2 = verify_table("S2", bound=20000)
    assert len(report2.forms) == 2
    trivial = verify_table("S1", bound=0)  # only the value 0
    assert trivial.value_count == 1
    with pytest.raises(KeyError):
        verify_table("S99")


def test_kaplansky_family_pair_construction():
    p, q = kaplansky_family_pair("iii", 1, 1)
    assert p == QuadForm(1, 1, 1, 1, 0, 0)
    assert q == QuadForm(1, 1, 3, 0, 0, 0)
    p, q = kaplansky_family_pair("iv", 3, 1)
    assert p == QuadForm(3, 3, 3, 1, 1, 1)
    assert q == QuadForm(3, 5, 7, 0, 2, 0)
    with pytest.raises(NotPositiveDefinite):
        kaplansky_family_pair("iii", 1, -1)
    with pytest.raises(ValueError):
        kaplansky_family_pair("v", 1, 1)


def test_kaplansky_family_sets_agree_small():
    from ternrep import represented_set

    for kind, a, b in (("iii", 1, 1), ("iv", 3, 1)):
        p, q = kaplansky_family_pair(kind, a, b)
        assert represented_set(p, 2000) == represented_set(q, 2000)
