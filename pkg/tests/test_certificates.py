"""Tests for the certificate layer: bordered-form checks, trace-field and
stretch-degree certificates, the nonsplitting witness search, the
signature-window criterion, bipartite doubling, and JSON replay."""

import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pa_degree_forge import (
    BorderedCertificate,
    BorderedGram,
    BorderedRefutation,
    CertificationError,
    DegreeCertificate,
    G1Block,
    IntMatrix,
    IntPoly,
    IntersectionGrid,
    KBlock,
    NonsplittingExhaustion,
    RefutationError,
    SmallDegree,
    TorelliG2Block,
    UnknownVerdictError,
    bipartite_degree,
    build_gram,
    certificate_to_json,
    certify_irreducible,
    check_bordered_multi,
    check_bordered_single,
    compose_linear,
    count_roots_greater,
    intersection_grid,
    is_reciprocal,
    ll_criterion,
    nonsplitting_certificate,
    resultant,
    stretch_min_poly,
    stretch_trace_poly,
    trace_field_degree,
    trace_transform,
    verify_json,
)

CHI_G1_12 = IntPoly((44, -16, 1))


def bordered(core, label="test"):
    return BorderedGram(core=IntMatrix(core), c=1, p=1, y_lower=1, label=label)


# -- bordered hypothesis checks ---------------------------------------------------------


def test_single_block_certificate_issues():
    cert = check_bordered_single(G1Block(12).build_bordered())
    assert isinstance(cert, BorderedCertificate)
    assert cert.issued
    assert cert.dim == 2
    assert len(cert.blocks) == 1
    block = cert.blocks[0]
    assert (block.start, block.stop) == (1, 2)
    assert block.alpha == Fraction(1, 2)
    assert block.a1 == 4
    assert block.char_poly == IntPoly((-4, 1))
    assert block.verdict.status == "Irreducible"


def test_multi_block_certificate_issues():
    cert = check_bordered_multi(
        KBlock(2, (12, 13), 5).build_bordered(), [(1, 3), (3, 5)]
    )
    assert cert.issued
    polys = [b.char_poly for b in cert.blocks]
    assert polys == [IntPoly((44, -16, 1)), IntPoly((48, -17, 1))]
    assert all(b.alpha == 1 for b in cert.blocks)


def test_reducible_block_is_refuted():
    r = check_bordered_multi(bordered(((0, 1, 1), (1, 1, 1), (1, 1, 1))), [(1, 3)])
    assert isinstance(r, BorderedRefutation)
    assert not r.issued
    assert r.block_index == 0
    assert "reducible" in r.reason
    assert r.verdict.status == "Reducible"


def test_disconnected_core_is_refuted():
    r = check_bordered_multi(bordered(((0, 1, 0), (1, 1, 0), (0, 0, 2))), [(1, 3)])
    assert isinstance(r, BorderedRefutation)
    assert "not irreducible" in r.reason
    assert r.block_index is None


def test_negative_core_entry_is_refuted():
    r = check_bordered_multi(bordered(((0, 2), (2, -1))), [(1, 2)])
    assert isinstance(r, BorderedRefutation)
    assert "nonnegative" in r.reason


def test_small_leading_entry_is_refuted():
    r = check_bordered_multi(bordered(((0, 0, 2), (0, 0, 1), (2, 1, 0))), [(1, 3)])
    assert isinstance(r, BorderedRefutation)
    assert "leading entry 0" in r.reason


def test_identical_blocks_are_refuted():
    core = (
        (0, 4, 2, 4, 2),
        (4, 4, 2, 0, 0),
        (2, 2, 12, 0, 0),
        (4, 0, 0, 4, 2),
        (2, 0, 0, 2, 12),
    )
    r = check_bordered_multi(bordered(core), [(1, 3), (3, 5)])
    assert isinstance(r, BorderedRefutation)
    assert "not distinct" in r.reason
    assert r.block_index == 1


def test_shape_violations_raise():
    with pytest.raises(ValueError, match="do not decompose"):
        check_bordered_multi(
            bordered(((0, 2, 1), (2, 4, 1), (1, 1, 4))), [(1, 2), (2, 3)]
        )
    with pytest.raises(ValueError, match="not proportional"):
        check_bordered_multi(bordered(((0, 1, 2), (1, 4, 2), (2, 2, 4))), [(1, 3)])
    with pytest.raises(ValueError, match="must cover"):
        check_bordered_multi(bordered(((0, 2, 2), (2, 4, 0), (2, 0, 4))), [(1, 2)])
    with pytest.raises(ValueError, match="partition"):
        check_bordered_multi(bordered(((0, 2, 2), (2, 4, 0), (2, 0, 4))), [(2, 3)])
    with pytest.raises(ValueError, match="zero first row"):
        check_bordered_multi(bordered(((0, 1), (1, 0))), [(1, 2)])


def test_bordered_constructor_validation():
    with pytest.raises(ValueError, match="symmetric"):
        BorderedGram(core=IntMatrix(((0, 1), (2, 4))), c=1, p=1, y_lower=1, label="x")
    with pytest.raises(ValueError, match="zero top-left"):
        BorderedGram(core=IntMatrix(((1, 2), (2, 4))), c=1, p=1, y_lower=1, label="x")


# -- trace field degree -------------------------------------------------------------------


def test_trace_field_degree_of_the_g1_gram():
    cert = trace_field_degree(build_gram(G1Block(12)))
    assert cert.degree == 2
    assert cert.min_poly == CHI_G1_12
    assert cert.removed == ()
    assert cert.verdict.status == "Irreducible"


def test_structural_factors_are_divided_out():
    spec = SmallDegree(6, 2, (4, 4, 4, 8), 5)
    cert = trace_field_degree(build_gram(spec), structural_factors=[(4, 2)])
    assert cert.degree == 3
    assert cert.removed == ((4, 2),)
    assert cert.min_poly * IntPoly((-4, 1)) * IntPoly((-4, 1)) == cert.char_poly


def test_trace_field_error_paths():
    with pytest.raises(ValueError, match="dominant eigenvalue"):
        trace_field_degree(IntMatrix(((4, 0), (0, 2))), structural_factors=[(4, 1)])
    with pytest.raises(RefutationError, match="factors"):
        trace_field_degree(IntMatrix(((2, 0), (0, 3))))
    with pytest.raises(ValueError, match="does not divide"):
        trace_field_degree(IntMatrix(((4, 2), (2, 12))), structural_factors=[(5, 1)])
    with pytest.raises(ValueError, match="nonnegative"):
        trace_field_degree(IntMatrix(((4, -2), (-2, 12))))


def test_exception_hierarchy():
    assert issubclass(RefutationError, CertificationError)
    assert issubclass(UnknownVerdictError, CertificationError)


# -- stretch polynomials ---------------------------------------------------------------------


def test_stretch_trace_values_for_both_sign_patterns():
    same_sign, branch = stretch_trace_poly(CHI_G1_12, 2, 2)
    assert (same_sign, branch) == (IntPoly((580, -60, 1)), -1)
    mixed, branch = stretch_trace_poly(CHI_G1_12, 2, -2)
    assert (mixed, branch) == (IntPoly((836, -68, 1)), 1)


def test_stretch_min_poly_is_the_reciprocal_lift():
    lam = stretch_min_poly(CHI_G1_12, 2, 2)
    assert lam == IntPoly((1, -60, 582, -60, 1))
    assert lam.is_monic and is_reciprocal(lam)
    assert trace_transform(lam) == IntPoly((580, -60, 1))
    assert count_roots_greater(lam, 1) >= 1


def test_non_hyperbolic_words_are_rejected():
    # mu = t - 1  gives trace 2 - ab <= 2 for ab = 1
    with pytest.raises(ValueError, match="hyperbolic"):
        stretch_trace_poly(IntPoly((-1, 1)), 1, 1)


@given(
    st.integers(min_value=2, max_value=40),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
    st.sampled_from((1, -1)),
)
@settings(max_examples=80)
def test_trace_identity_links_lambda_to_mu(m, na, nb, sign):
    mu = IntPoly((-m, 1))
    a, b = 2 * na, 2 * nb * sign
    try:
        t_poly, branch = stretch_trace_poly(mu, a, b)
    except ValueError:
        assume(False)
    assert branch == (1 if a * b < 0 else -1)
    d = mu.degree
    lhs = compose_linear(t_poly, 2 * branch, -branch * a * b, 1)
    assert lhs == mu * IntPoly((((-branch * a * b) ** d),))
    lam = stretch_min_poly(mu, a, b)
    assert lam.degree == 2 * d
    assert trace_transform(lam) == t_poly


# -- nonsplitting certificates ----------------------------------------------------------------


def test_nonsplitting_witness_for_the_g1_block():
    cert = nonsplitting_certificate(CHI_G1_12, epsilon=1)
    assert isinstance(cert, DegreeCertificate)
    assert cert.issued
    assert cert.witness_n == 1
    assert cert.norm_value == 1276  # 44 * 29, not a square
    assert cert.word == (2, 2)
    assert cert.trace_field_degree == 2
    assert cert.stretch_degree == 4
    assert cert.min_poly_lambda == IntPoly((1, -60, 582, -60, 1))
    assert cert.mu_verdict.status == "Irreducible"


def test_nonsplitting_witness_for_the_negative_sign():
    cert = nonsplitting_certificate(CHI_G1_12, epsilon=-1)
    assert cert.witness_n == 1
    assert cert.norm_value == 2684  # 44 * 61
    assert cert.word == (2, -2)
    assert cert.stretch_degree == 4


def test_norm_value_matches_the_resultant_route():
    cert = nonsplitting_certificate(CHI_G1_12, epsilon=1)
    n = cert.witness_n
    assert cert.norm_value == resultant(CHI_G1_12, IntPoly((0, 1))) * resultant(
        CHI_G1_12, IntPoly((-1, n * n))
    )


def test_square_norms_are_skipped_to_exhaustion():
    # p(0) * p(1) = 1 for t^2 - t - 1, so n = 1 gives the square 1
    golden = IntPoly((-1, -1, 1))
    out = nonsplitting_certificate(golden, epsilon=1, n_max=1)
    assert isinstance(out, NonsplittingExhaustion)
    assert not out.issued
    assert out.n_max == 1
    assert out.mu_verdict.status == "Irreducible"


def test_uncertifiable_minimal_polynomial_raises():
    # minimal polynomial of sqrt(2) + sqrt(3): splits modulo every prime
    with pytest.raises(UnknownVerdictError):
        nonsplitting_certificate(IntPoly((1, 0, -10, 0, 1)))


def test_nonsplitting_requires_a_positive_root():
    # t^2 + 3t + 1 is irreducible but both roots are negative
    with pytest.raises(ValueError):
        nonsplitting_certificate(IntPoly((1, 3, 1)))


def test_reducible_minimal_polynomial_is_refuted():
    with pytest.raises(RefutationError):
        nonsplitting_certificate(IntPoly((2, 3, 1)))  # (t + 1)(t + 2)


@given(st.integers(min_value=12, max_value=60), st.sampled_from((1, -1)))
@settings(max_examples=30, deadline=None)
def test_nonsplitting_issues_across_the_g1_family(y, epsilon):
    chi = IntPoly((4 * (y - 1), -(4 + y), 1))
    disc = y * y - 8 * y + 32
    assume(certify_irreducible(chi).status == "Irreducible")
    cert = nonsplitting_certificate(chi, epsilon=epsilon)
    assert cert.issued
    assert cert.stretch_degree == 2 * chi.degree
    assert cert.word == (2 * cert.witness_n, 2 * cert.witness_n * epsilon)
    assert verify_json(certificate_to_json(cert)) == []
    assert disc > 0


# -- signature window --------------------------------------------------------------------------


def test_ll_window_for_the_g1_grid():
    report = ll_criterion(intersection_grid(G1Block(12)), 2)
    assert (report.dim, report.sigma, report.nullity, report.d) == (14, 12, 0, 2)
    assert report.holds


def test_ll_window_needs_strict_inequalities():
    report = ll_criterion(IntersectionGrid(((1,),)), 1)
    assert (report.dim, report.sigma, report.nullity) == (2, 2, 0)
    assert not report.holds


# -- bipartite doubling -------------------------------------------------------------------------


def test_bipartite_degree_of_the_g2_block():
    report = bipartite_degree(build_gram(TorelliG2Block(2)))
    assert report.certified
    assert report.degree == 8
    assert report.doubled_poly.degree == 8
    assert report.doubled_verdict.status == "Irreducible"


def test_bipartite_degree_of_a_single_curve():
    report = bipartite_degree(IntMatrix(((2,),)))
    assert report.certified
    assert report.degree == 2


def test_bipartite_doubling_can_fail_honestly():
    report = bipartite_degree(IntMatrix(((4,),)))
    assert not report.certified
    assert report.degree is None
    assert report.doubled_verdict.status == "Reducible"


def test_bipartite_requires_symmetry():
    with pytest.raises(ValueError):
        bipartite_degree(IntMatrix(((1, 2), (3, 4))))


# -- JSON serialization and replay ----------------------------------------------------------------


def _fresh_certificates():
    yield nonsplitting_certificate(CHI_G1_12, epsilon=1)
    yield nonsplitting_certificate(CHI_G1_12, epsilon=-1)
    yield nonsplitting_certificate(IntPoly((-1, -1, 1)), epsilon=1, n_max=1)
    yield trace_field_degree(build_gram(G1Block(12)))
    yield trace_field_degree(
        build_gram(SmallDegree(6, 2, (4, 4, 4, 8), 5)), structural_factors=[(4, 2)]
    )
    yield ll_criterion(intersection_grid(G1Block(12)), 2)
    yield bipartite_degree(build_gram(TorelliG2Block(2)))
    yield check_bordered_single(G1Block(12).build_bordered())
    yield check_bordered_multi(KBlock(2, (12, 13), 5).build_bordered(), [(1, 3), (3, 5)])
    yield check_bordered_multi(bordered(((0, 1, 1), (1, 1, 1), (1, 1, 1))), [(1, 3)])


@pytest.mark.parametrize("cert", list(_fresh_certificates()), ids=lambda c: type(c).__name__)
def test_fresh_certificates_replay_cleanly(cert):
    blob = certificate_to_json(cert)
    assert isinstance(blob["type"], str)
    # survives a round trip through actual JSON text
    again = json.loads(json.dumps(blob))
    assert verify_json(again) == []


def test_verify_flags_square_norm_values():
    blob = certificate_to_json(nonsplitting_certificate(CHI_G1_12, epsilon=1))
    blob["norm_value"] = 36
    violations = verify_json(blob)
    assert any("norm_value is a square" in v for v in violations)


def test_verify_flags_degree_mismatches():
    blob = certificate_to_json(nonsplitting_certificate(CHI_G1_12, epsilon=1))
    blob["stretch_degree"] = 6
    assert verify_json(blob) != []


def test_verify_flags_tampered_words():
    blob = certificate_to_json(nonsplitting_certificate(CHI_G1_12, epsilon=1))
    blob["word"] = [2, 4]
    assert any("word" in v for v in verify_json(blob))


def test_verify_flags_tampered_lambda():
    blob = certificate_to_json(nonsplitting_certificate(CHI_G1_12, epsilon=1))
    lam = list(blob["min_poly_lambda"])
    lam[1] += 2
    blob["min_poly_lambda"] = lam
    assert verify_json(blob) != []


def test_verify_flags_tampered_trace_field():
    blob = certificate_to_json(
        trace_field_degree(
            build_gram(SmallDegree(6, 2, (4, 4, 4, 8), 5)), structural_factors=[(4, 2)]
        )
    )
    blob["removed"] = [[4, 1]]
    assert verify_json(blob) != []


def test_verify_flags_inconsistent_ll_reports():
    blob = certificate_to_json(ll_criterion(intersection_grid(G1Block(12)), 2))
    blob["sigma"] = blob["sigma"] - 1  # breaks the dim/sigma/nullity parity
    assert verify_json(blob) != []


def test_verify_flags_tampered_bipartite_lift():
    blob = certificate_to_json(bipartite_degree(IntMatrix(((2,),))))
    blob["doubled_poly"] = [-3, 0, 1]
    assert verify_json(blob) != []


def test_verify_flags_tampered_bordered_alpha():
    blob = certificate_to_json(check_bordered_single(G1Block(12).build_bordered()))
    blob["blocks"][0]["alpha"] = [-1, 2]
    assert verify_json(blob) != []


def test_verify_rejects_unknown_types():
    assert verify_json({"type": "no-such-certificate"}) != []
