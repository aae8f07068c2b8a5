"""Relation compiler: template expansion, tabulated forms, span agreement,
and vanishing of the compiled residuals under the change of generators."""

import pytest

from graphalg.ncpoly import HandleAlgebra
from graphalg.relations import (
    KINDS,
    FreePoly,
    compare_spans,
    compile_template,
    half_power_cross_lines,
    half_power_monodromy_lines,
    instantiate,
    quantum_det_residual,
    relation_catalog,
    tabulated_cross_handle,
    tabulated_mixed_handle,
    tabulated_monodromy_handle,
    tabulated_same_handle,
)
from graphalg.scalars import FormalScalar


def test_template_counts():
    for kind in KINDS:
        assert len(compile_template(kind)) == 16
    assert len(compile_template("reflection", same_matrix=True)) == 16
    with pytest.raises(ValueError):
        compile_template("bogus")


def test_free_poly_algebra():
    a = FreePoly.letter(0)
    b = FreePoly.letter(5)
    q = FormalScalar.q_power(1)
    lhs = (a + b) * (a - b)
    assert lhs.terms[(0, 0)] == FormalScalar.one()
    assert lhs.terms[(5, 0)] == FormalScalar.one()
    assert lhs.terms[(0, 5)] == -FormalScalar.one()
    assert (q * a) * b == a * (q * b)
    assert (a - a).is_zero()


# ---------------------------------------------------------------------------
# span agreement between compiled templates and the hand-tabulated forms
# ---------------------------------------------------------------------------


def test_same_handle_span():
    rep = compare_spans(compile_template("reflection", same_matrix=True),
                        tabulated_same_handle())
    assert rep["equal"]
    assert rep["compiled_rank"] == 6
    assert rep["tabulated_rank"] == 6


def test_mixed_handle_span():
    rep = compare_spans(compile_template("mixed"), tabulated_mixed_handle())
    assert rep["equal"]
    assert rep["compiled_rank"] == 16


def test_cross_handle_span():
    rep = compare_spans(compile_template("commute"), tabulated_cross_handle())
    assert rep["equal"]
    assert rep["compiled_rank"] == 16


def test_monodromy_handle_span():
    rep = compare_spans(compile_template("reflection"), tabulated_monodromy_handle())
    assert rep["equal"]
    assert rep["compiled_rank"] == 16


def test_span_comparison_detects_perturbation():
    # negative control: damage one coefficient and the spans must separate
    tab = tabulated_cross_handle()
    q = FormalScalar.q_power(2)
    bad = tab[:-1] + [tab[-1] * q]
    assert compare_spans(compile_template("commute"), bad)["equal"]  # scaling is harmless
    bad = tab[:-1] + [tab[-1] + FreePoly.letter(0) * FreePoly.letter(4)]
    rep = compare_spans(compile_template("commute"), bad)
    assert not rep["equal"]
    assert not rep["tabulated_inside_compiled"]


# ---------------------------------------------------------------------------
# the compiled residuals vanish under the change of generators
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def alg():
    return HandleAlgebra(mode="formal", with_trace_inverse=False)


def _images(alg, names):
    return [alg.ab(n) for n in names]


A_NAMES = ("a11", "a12", "a21", "a22")
B_NAMES = ("b11", "b12", "b21", "b22")


def test_compiled_aa_vanishes(alg):
    imgs = _images(alg, A_NAMES)
    for res in compile_template("reflection", same_matrix=True):
        assert instantiate(res, imgs, alg.one()).is_zero()


def test_compiled_bb_vanishes(alg):
    imgs = _images(alg, B_NAMES)
    for res in compile_template("reflection", same_matrix=True):
        assert instantiate(res, imgs, alg.one()).is_zero()


def test_compiled_ab_vanishes(alg):
    imgs = _images(alg, A_NAMES) + _images(alg, B_NAMES)
    for res in compile_template("mixed"):
        assert instantiate(res, imgs, alg.one()).is_zero()


def test_det_residuals_vanish(alg):
    for names in (A_NAMES, B_NAMES):
        res = quantum_det_residual()
        assert instantiate(res, _images(alg, names), alg.one()).is_zero()


def test_compiled_ab_vanishes_at_root():
    ralg = HandleAlgebra(mode="root", p=3)
    imgs = [ralg.ab(n) for n in A_NAMES] + [ralg.ab(n) for n in B_NAMES]
    for res in compile_template("mixed"):
        assert instantiate(res, imgs, ralg.one()).is_zero()


# ---------------------------------------------------------------------------
# catalog and half-power data
# ---------------------------------------------------------------------------


def test_catalog_genus_one():
    cat = relation_catalog(1)
    names = [c["name"] for c in cat]
    assert names == ["A1-A1", "B1-B1", "A1-B1", "M1-M1", "M1-A1", "M1-B1"]
    kinds = {c["name"]: c["kind"] for c in cat}
    assert kinds["A1-B1"] == "mixed"
    assert kinds["M1-A1"] == "reflection"


def test_catalog_genus_two():
    cat = relation_catalog(2)
    assert len(cat) == 6 + 6 + 9
    kinds = {c["name"]: c["kind"] for c in cat}
    assert kinds["A1-B2"] == "commute"
    assert kinds["B1-M2"] == "commute"
    assert kinds["M1-M2"] == "reflection"
    assert kinds["M2-B2"] == "reflection"
    # no duplicates
    assert len(kinds) == len(cat)


def test_catalog_genus_three_size():
    assert len(relation_catalog(3)) == 9 + 18 + 18


def test_half_power_lines_shape():
    for line in half_power_cross_lines() + half_power_monodromy_lines():
        for coeff, word in line:
            assert isinstance(coeff, FormalScalar)
            for tok in word:
                assert tok in ("Q", "Qi", "u11", "u12", "u21", "u22",
                               "v11", "v12", "v21", "v22")
