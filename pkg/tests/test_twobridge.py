"""Character polynomials and certificates for the two-bridge family."""

import pytest

from knotpoly.exactpoly import MultiPoly, newton_polygon
from knotpoly.report import InternalInconsistencyError
from knotpoly.twobridge import (IrreducibilityCertificate, TwoBridgeKnot,
                                all_knots, bridge_word,
                                character_polynomial,
                                character_polynomial_even,
                                chebyshev_difference, factor_oracle,
                                irreducibility_certificate,
                                irreducible_over_q, is_prime,
                                leading_term_report, newton_vertex_report,
                                sign_sequence, structural_reports,
                                x_zero_profile)


def knot(p, m):
    return TwoBridgeKnot(p, m)


# -- normal form -----------------------------------------------------------

def test_parameter_validation():
    with pytest.raises(ValueError):
        knot(4, 1)
    with pytest.raises(ValueError):
        knot(5, 2)
    with pytest.raises(ValueError):
        knot(5, 7)
    with pytest.raises(ValueError):
        knot(9, 3)
    k = knot(7, 3)
    assert (k.d, k.c) == (3, 1)
    assert k.label() == "b(7,3)"


def test_all_knots_enumeration():
    assert [(k.p, k.m) for k in all_knots(9)] == [
        (3, 1), (5, 1), (5, 3), (7, 1), (7, 3), (7, 5),
        (9, 1), (9, 5), (9, 7)]


def test_sign_sequences():
    assert sign_sequence(knot(3, 1)) == (1, 1)
    assert sign_sequence(knot(5, 3)) == (1, -1, -1, 1)
    assert sign_sequence(knot(7, 3)) == (1, 1, -1, -1, 1, 1)


def test_sign_sequence_is_palindromic():
    for k in all_knots(17):
        eps = sign_sequence(k)
        assert eps == eps[::-1]
        assert len(eps) == 2 * k.d


def test_bridge_word_alternates_generators():
    word = bridge_word(knot(7, 3))
    gens = [g for g, _ in word.letters]
    assert gens == [g % 2 for g in range(len(gens))]


# -- character polynomials -------------------------------------------------

def test_small_character_polynomials():
    assert character_polynomial(knot(3, 1)).to_text() == "z - 1"
    assert character_polynomial(knot(5, 1)).to_text() == "z^2 - z - 1"
    assert character_polynomial(knot(5, 3)).to_text() == \
        "-x^2*z + 2*x^2 + z^2 - z - 1"


def test_seven_three_character_polynomial():
    k = knot(7, 3)
    assert character_polynomial(k).to_text() == \
        "-x^2*z^2 + 3*x^2*z + z^3 - 2*x^2 - z^2 - 2*z + 1"
    assert character_polynomial_even(k).to_text() == \
        "-X*z^2 + z^3 + 3*X*z - z^2 - 2*X - 2*z + 1"


def test_even_form_substitutes_back():
    for k in (knot(5, 3), knot(9, 5), knot(11, 7)):
        gamma = character_polynomial_even(k)
        phi = character_polynomial(k)
        x = MultiPoly.variable("x", phi.vars)
        lifted = gamma.extend_to(("X",) + phi.vars).substitute(
            "X", (x * x).extend_to(("X",) + phi.vars)).restrict(phi.vars)
        assert lifted == phi


def test_character_polynomial_structure():
    for k in all_knots(15):
        phi = character_polynomial(k)
        d = k.d
        assert phi.degree_in("z") == d
        # monic in z: coefficient of z^d is 1
        top = {e: c for e, c in phi.terms.items() if e[1] == d}
        assert top == {(0, d): 1}
        # only even x powers
        assert all(e[0] % 2 == 0 for e in phi.terms)


def test_x_zero_slice_is_chebyshev_difference():
    for k in all_knots(13):
        rep = x_zero_profile(k)
        assert rep.status == "pass", rep.details


def test_newton_vertices_present():
    for k in all_knots(13):
        rep = newton_vertex_report(k)
        assert rep.status == "pass", rep.details
    hull = newton_polygon(character_polynomial_even(knot(7, 3)))
    assert (0, 3) in hull.vertices and (1, 2) in hull.vertices


def test_leading_terms_of_nested_words():
    for k in (knot(7, 3), knot(9, 5), knot(13, 7)):
        rep = leading_term_report(k)
        assert rep.status == "pass", rep.details


def test_structural_reports_bundle():
    reports = structural_reports(knot(7, 3))
    assert [r.claim_id for r in reports] == [
        "character-structure", "x0-chebyshev", "newton-vertices"]
    assert all(r.status == "pass" for r in reports)


# -- irreducibility --------------------------------------------------------

def test_chebyshev_difference_markers():
    assert chebyshev_difference(1).to_text() == "z - 1"
    assert chebyshev_difference(4).to_text() == "z^4 - z^3 - 3*z^2 + 2*z + 1"


def test_is_prime():
    assert [p for p in range(2, 30) if is_prime(p)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_irreducible_over_q_verdicts():
    assert irreducible_over_q(7)
    assert irreducible_over_q(13)
    assert not irreducible_over_q(9)
    assert not irreducible_over_q(15)
    with pytest.raises(ValueError):
        irreducible_over_q(8)


def test_factor_oracle_on_composite_difference():
    factors = factor_oracle(chebyshev_difference(4))
    assert [f.to_text() for f in factors] == ["z - 1", "z^3 - 3*z - 1"]


def test_factor_oracle_recovers_known_product():
    z = MultiPoly.variable("z", ("z",))
    product = (z ** 2 - 2) * (z ** 3 - 3 * z - 1)
    factors = factor_oracle(product)
    assert sorted(f.to_text() for f in factors) == \
        sorted(["z^2 - 2", "z^3 - 3*z - 1"])
    rebuilt = MultiPoly.const(("z",), 1)
    for f in factors:
        rebuilt = rebuilt * f
    assert rebuilt == product


def test_factor_oracle_requires_monic_integer_input():
    z = MultiPoly.variable("z", ("z",))
    with pytest.raises(ValueError):
        factor_oracle(2 * z + 1)


def test_certificates():
    assert irreducibility_certificate(knot(7, 3)) is \
        IrreducibilityCertificate.GUARANTEED_IRREDUCIBLE_OVER_C
    assert irreducibility_certificate(knot(9, 5)) is \
        IrreducibilityCertificate.UNKNOWN
