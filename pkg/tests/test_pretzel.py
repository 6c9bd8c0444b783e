"""Defining polynomials, slice certificates, and witnesses for the
(-2, 3, 2n+1) pretzel family."""

import pytest

from knotpoly.exactpoly import MultiPoly, exact_div, is_squarefree_in
from knotpoly.pretzel import (ExpansionBoundError, PretzelKnot,
                              TRACE_WORD_BOUND, WITNESS_BOUND, a_poly,
                              b_poly, closed_form_report, defining_p,
                              defining_q, membership_certificate,
                              pq_resultant, radical_slice_report,
                              resultant_closed_rhs, resultant_report,
                              seidenberg_report, shared_square_factor,
                              slice_p, slice_q, traced_p, traced_q, u_poly,
                              witness_reports, x0_report, x0_slice,
                              a_root_residuals, u_root_residuals)

VARS_XYZ = ("x", "y", "z")
VARS_XY = ("x", "y")


# -- defining polynomials --------------------------------------------------

def test_defining_p_text():
    assert defining_p().to_text() == \
        "-x*y*z^2 + x^2*z + y^2*z + z^3 - x*y + x - 3*z"


def test_defining_q_small_values():
    assert defining_q(1).to_text() == "-x*y*z + y^2 + z^2 + y - 2"
    assert defining_q(2).to_text() == "x*y*z - x^2 - x*z - z^2 + y + 2"


def test_closed_forms_match_traced_rebuild():
    assert traced_p() == defining_p()
    for n in range(-6, 7):
        assert traced_q(n) == defining_q(n), n


def test_closed_form_report_passes():
    rep = closed_form_report(3)
    assert rep.status == "pass"
    assert rep.details == {"p_ok": True, "q_ok": True}


def test_word_expansion_bound():
    with pytest.raises(ExpansionBoundError):
        traced_q(TRACE_WORD_BOUND + 1)
    with pytest.raises(ExpansionBoundError):
        traced_q(-(TRACE_WORD_BOUND + 1))


def test_label():
    assert PretzelKnot(3).label() == "pretzel(-2,3,7)"
    assert PretzelKnot(-2).label() == "pretzel(-2,3,-3)"


# -- resultant -------------------------------------------------------------

def test_resultant_leading_coefficient_and_degree():
    for n in (4, 5, 6):
        res = pq_resultant(n)
        d = res.degree_in("y")
        assert d == 3 * n - 2
        top = {e: c for e, c in res.terms.items() if e[1] == d}
        assert top == {(0, d): 1}
    res = pq_resultant(-5)
    assert res.degree_in("y") == 16


def test_resultant_closed_identity():
    x = MultiPoly.variable("x", VARS_XY)
    y = MultiPoly.variable("y", VARS_XY)
    lhs_factor = (y ** 2 - 4) * (y + 2)
    rhs_factor = y + 2 - x ** 2
    for n in range(-5, 7):
        res = pq_resultant(n)
        assert lhs_factor * res == rhs_factor * resultant_closed_rhs(n), n


def test_resultant_report_shape():
    rep = resultant_report(5)
    assert rep.status == "pass"
    assert rep.details["monic_ok"] and rep.details["identity_ok"]
    assert rep.details["deg_y"] == rep.details["expected_deg_y"] == 13
    assert rep.details["leading_coeff"] == "1"


def test_resultant_frozen_small_case():
    assert pq_resultant(2).to_text() == (
        "-x^6 + 3*x^4*y^2 - x^2*y^4 - x^4*y - 5*x^2*y^3 + y^5 + 4*x^4 "
        "- 3*x^2*y^2 + 4*y^4 + 4*x^2*y + 3*y^3 - 5*x^2 - 4*y^2 - 3*y + 2")


# -- x = 0 slice -----------------------------------------------------------

def test_slice_polynomials():
    y = MultiPoly.variable("y", ("y", "z"))
    z = MultiPoly.variable("z", ("y", "z"))
    assert slice_p() == z * (y ** 2 + z ** 2 - 3)
    a = a_poly(2).extend_to(("y", "z"))
    b = b_poly(2).extend_to(("y", "z"))
    assert slice_q(2) == a + b * z ** 2


def test_slice_coefficient_values():
    assert a_poly(3).to_text() == "y + 2"
    assert b_poly(3).to_text() == "-y - 1"
    assert u_poly(3).to_text() == "y^3 + y^2 - 2*y - 1"
    assert a_poly(4).to_text() == "y^2 + y - 2"


def test_slice_identity_holds_widely():
    for n in range(-6, 13):
        data = x0_slice(n)
        assert data.identity_ok and data.squarefree_ok, n


def test_x0_report():
    rep = x0_report(5)
    assert rep.status == "pass"
    assert rep.details["identity_ok"] and rep.details["squarefree_ok"]


def test_cosine_root_residuals():
    for n in (1, 5, 12):
        assert max(u_root_residuals(n)) < 1e-9
    for n in (3, 8, 12):
        assert max(a_root_residuals(n)) < 1e-9


# -- shared square factor and the seidenberg reports -----------------------

def test_shared_square_factor_arises_periodically():
    # the z-side slice product acquires a repeated factor exactly when
    # n = 1 (mod 3) and n >= 4; the collision is the exact gcd y^2 - 1
    for n in (3, 5, 6, 8, 9, -2, -5):
        assert shared_square_factor(n) is None, n
    for n in (4, 7, 10, 13):
        factor = shared_square_factor(n)
        assert factor is not None and factor.to_text() == "y^2 - 1", n


def test_seidenberg_passes_off_the_collision_set():
    rep = seidenberg_report(3)
    assert rep.status == "numeric-pass"
    assert rep.details["membership_ok"] and rep.details["squarefree_y_ok"]
    assert rep.details["root_count"] == 9
    assert rep.details["min_separation"] > 0.4


def test_seidenberg_fails_honestly_on_the_collision_set():
    for n in (4, 7):
        rep = seidenberg_report(n)
        assert rep.status == "fail", n
        assert rep.details["membership_ok"]
        assert rep.details["min_separation"] <= 1e-9
        assert rep.details["shared_square_factor"] == "y^2 - 1"


def test_seidenberg_trivial_negative_case():
    rep = seidenberg_report(-2)
    assert rep.status == "numeric-pass"


# -- direct radical certificates ------------------------------------------

def test_radical_slice_reports():
    for n in (0, 1, 2):
        rep = radical_slice_report(n)
        assert rep.status == "pass", (n, rep.details)
        assert rep.details["identity_ok"] and rep.details["squarefree_y_ok"]
        assert "z_generator" in rep.details and "z_cofactors" in rep.details
    with pytest.raises(ValueError):
        radical_slice_report(3)


def test_radical_slice_certificate_values():
    rep = radical_slice_report(1)
    assert rep.details["z_generator"] == "z^3 - 2*z"
    # re-check the exhibited cofactors against the generators
    cof_texts = rep.details["z_cofactors"]
    assert len(cof_texts) == 2


def test_membership_certificate_round_trip():
    p0, q0 = slice_p(), slice_q(1)
    z = MultiPoly.variable("z", ("y", "z"))
    target = (z ** 3 - 2 * z).extend_to(("y", "z"))
    cof = membership_certificate(target, (p0, q0))
    assert cof is not None
    rebuilt = cof[0] * p0 + cof[1] * q0
    assert rebuilt == target


def test_membership_certificate_returns_none_when_unreachable():
    p0 = slice_p()
    one = MultiPoly.const(("y", "z"), 1)
    # 1 is not in the ideal generated by a single non-unit
    assert membership_certificate(one, (p0,), bounds=((2, 2),)) is None


# -- representation witnesses ----------------------------------------------

@pytest.mark.parametrize("n", [-2, 0, 1, 3])
def test_witness_reports_pass(n):
    for rep in witness_reports(n):
        assert rep.status == "pass", (n, rep.claim_id, rep.details)


def test_witness_details_include_determinants():
    by_claim = {r.claim_id: r for r in witness_reports(2)}
    assert by_claim["witness-generic-y"].details["det_ok"]
    assert by_claim["witness-y-two"].details["det_ok"]
    assert by_claim["witness-y-minus-two"].details["det_ok"]
    assert by_claim["witness-y-two"].details["scalar_subcases_ok"]
    assert by_claim["witness-y-minus-two"].details["diagonal_subcase_ok"]


def test_witness_bound_error():
    with pytest.raises(ExpansionBoundError):
        witness_reports(WITNESS_BOUND + 1)


# -- slice products stay square-free where claimed -------------------------

def test_au_squarefree_on_the_stated_range():
    for n in list(range(3, 13)) + list(range(-6, 0)):
        au = a_poly(n) * u_poly(n)
        assert is_squarefree_in(au, "y"), n


def test_resultant_between_the_degree_ranges():
    # small |n| sits outside the stated degree formulas but stays monic
    rep = resultant_report(1)
    assert rep.status == "pass"
    assert rep.details["deg_y"] == 4
    assert rep.details["expected_deg_y"] is None
    assert rep.details["monic_ok"] and rep.details["identity_ok"]
