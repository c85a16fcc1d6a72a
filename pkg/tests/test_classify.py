"""Primeness hierarchy predicates, their residual characterizations, and the
per-lattice classification report."""

import json

import pytest

from multlat import (
    classification_report,
    is_delta_primary,
    is_n_potent_delta_primary,
    is_phi_delta_primary,
    is_phi_primary,
    is_phi_prime,
    is_primary,
    is_prime,
    make_delta,
    make_phi,
    map_leq,
    residual_characterization_A,
    residual_characterization_B,
)
from multlat.classify import (
    compact_pair_violation,
    delta_primary_violation,
    phi_delta_primary_violation,
    phi_prime_violation,
)

DELTA_KINDS = ("d0", "d1")
PHI_KINDS = ("phi0", "phi1", "phi2", "phi3", "phiomega")


def test_prime_frozen(z8, z24):
    assert is_prime(z24, z24.index_of("(3)"))
    assert not is_prime(z24, z24.index_of("(4)"))
    assert not is_prime(z8, z8.index_of("(4)"))
    assert is_primary(z8, z8.index_of("(4)"))


def test_z24_golden_element(z24):
    four = z24.index_of("(4)")
    d0, d1 = make_delta(z24, "d0"), make_delta(z24, "d1")
    phi2 = make_phi(z24, "phi2")
    assert is_phi_delta_primary(z24, d1, phi2, four)
    assert not is_phi_delta_primary(z24, d0, phi2, four)
    assert not is_phi_prime(z24, phi2, four)

    # the classical separating pair: product lands below (4) but not below
    # (4)^2, with neither factor below (4)
    a, b = z24.index_of("(2)"), z24.index_of("(6)")
    ab = z24.mul(a, b)
    assert z24.leq(ab, four)
    assert not z24.leq(ab, phi2.apply(four))
    assert not z24.leq(a, four) and not z24.leq(b, four)


def test_z30_golden_element(z30):
    six = z30.index_of("(6)")
    d0, d1 = make_delta(z30, "d0"), make_delta(z30, "d1")
    phi2 = make_phi(z30, "phi2")
    assert is_phi_delta_primary(z30, d1, phi2, six)
    assert phi2.apply(six) == six  # idempotent, so phi2 excuses everything
    assert not is_delta_primary(z30, d1, six)
    assert delta_primary_violation(z30, d1, six) == (
        z30.index_of("(2)"),
        z30.index_of("(3)"),
    )
    assert not is_n_potent_delta_primary(z30, d0, six, 2)


def test_z8_golden_element(z8):
    four = z8.index_of("(4)")
    d0, d1 = make_delta(z8, "d0"), make_delta(z8, "d1")
    phi2 = make_phi(z8, "phi2")
    assert is_phi_delta_primary(z8, d1, phi2, four)
    assert is_phi_primary(z8, phi2, four)
    assert is_n_potent_delta_primary(z8, d0, four, 2)
    assert not is_prime(z8, four)
    assert z8.power(four, 2) != four


def test_top_is_rejected_everywhere(z8):
    d1, phi2 = make_delta(z8, "d1"), make_phi(z8, "phi2")
    for call in (
        lambda: is_prime(z8, z8.top),
        lambda: is_primary(z8, z8.top),
        lambda: is_delta_primary(z8, d1, z8.top),
        lambda: is_phi_prime(z8, phi2, z8.top),
        lambda: is_phi_delta_primary(z8, d1, phi2, z8.top),
        lambda: is_n_potent_delta_primary(z8, d1, z8.top, 2),
        lambda: residual_characterization_A(z8, d1, phi2, z8.top),
        lambda: residual_characterization_B(z8, d1, phi2, z8.top),
    ):
        with pytest.raises(ValueError):
            call()


def test_potency_exponent_must_be_at_least_two(z8):
    with pytest.raises(ValueError):
        is_n_potent_delta_primary(z8, make_delta(z8, "d1"), z8.index_of("(4)"), 1)


def test_definition_agrees_with_both_characterizations(corpus):
    for L in corpus.lattices():
        for dk in DELTA_KINDS:
            delta = make_delta(L, dk)
            for pk in PHI_KINDS:
                phi = make_phi(L, pk)
                for q in L.proper_elements:
                    d = is_phi_delta_primary(L, delta, phi, q)
                    assert d == residual_characterization_A(L, delta, phi, q)
                    assert d == residual_characterization_B(L, delta, phi, q)


def test_compact_pair_form_matches_all_pairs_form(corpus):
    for L in corpus.lattices():
        delta = make_delta(L, "d1")
        for pk in ("phi0", "phi2"):
            phi = make_phi(L, pk)
            for q in L.proper_elements:
                assert (compact_pair_violation(L, delta, phi, q) is None) == (
                    phi_delta_primary_violation(L, delta, phi, q) is None
                )


def test_delta0_and_delta1_correspondences(corpus):
    for L in corpus.lattices():
        d0, d1 = make_delta(L, "d0"), make_delta(L, "d1")
        for p in L.proper_elements:
            assert is_delta_primary(L, d0, p) == is_prime(L, p)
            assert is_delta_primary(L, d1, p) == is_primary(L, p)


def test_phi_specializations(corpus):
    for L in corpus.lattices():
        d0, d1 = make_delta(L, "d0"), make_delta(L, "d1")
        for pk in PHI_KINDS:
            phi = make_phi(L, pk)
            for p in L.proper_elements:
                assert is_phi_delta_primary(L, d0, phi, p) == is_phi_prime(L, phi, p)
                assert is_phi_delta_primary(L, d1, phi, p) == is_phi_primary(
                    L, phi, p
                )


def test_none_phi_reduces_to_plain_delta_primary(corpus):
    for L in corpus.lattices():
        delta = make_delta(L, "d1")
        none = make_phi(L, "none")
        for p in L.proper_elements:
            assert is_phi_delta_primary(L, delta, none, p) == is_delta_primary(
                L, delta, p
            )


def test_monotone_in_delta_and_phi(corpus):
    for L in corpus.lattices():
        d0, d1 = make_delta(L, "d0"), make_delta(L, "d1")
        assert map_leq(d0, d1)
        phis = [make_phi(L, pk) for pk in PHI_KINDS]
        for p in L.proper_elements:
            for phi in phis:
                if is_phi_delta_primary(L, d0, phi, p):
                    assert is_phi_delta_primary(L, d1, phi, p)
            for g1 in phis:
                for g2 in phis:
                    if map_leq(g1, g2) and is_phi_delta_primary(L, d1, g1, p):
                        assert is_phi_delta_primary(L, d1, g2, p)


def test_violating_pairs_are_lexicographically_first(z8, z24):
    phi2 = make_phi(z24, "phi2")
    assert phi_prime_violation(z24, phi2, z24.index_of("(4)")) == (
        z24.index_of("(2)"),
        z24.index_of("(2)"),
    )
    w = phi_prime_violation(z8, make_phi(z8, "phi2"), z8.index_of("(2)"))
    assert w is None  # (2) is maximal, hence phi2-prime here


def test_classification_report_golden_records(z8, z24, z30):
    rep24 = classification_report(z24, make_delta(z24, "d1"), make_phi(z24, "phi2"))
    rec = rep24.record("(4)")
    assert rec.flags["phi_delta_primary"]
    assert not rec.flags["phi_prime"]
    assert not rec.flags["prime"]
    assert rec.witnesses["phi_prime"] == ("(2)", "(2)")

    rep8 = classification_report(z8, make_delta(z8, "d1"), make_phi(z8, "phi2"))
    rec = rep8.record("(4)")
    assert rec.flags["phi_delta_primary"]
    assert not rec.flags["idempotent"]
    assert rec.flags["2_potent_d0_primary"]

    rep30 = classification_report(z30, make_delta(z30, "d1"), make_phi(z30, "phi2"))
    rec = rep30.record("(6)")
    assert rec.flags["phi_delta_primary"]
    assert not rec.flags["delta_primary"]
    assert not rec.flags["2_potent_d0_primary"]
    assert rec.flags["idempotent"]
    assert rec.witnesses["delta_primary"] == ("(2)", "(3)")


def test_classification_report_shape(z30):
    rep = classification_report(z30, make_delta(z30, "d1"), make_phi(z30, "phi2"))
    assert rep.lattice == "Z30" and rep.delta == "d1" and rep.phi == "phi2"
    assert len(rep.records) == len(z30.proper_elements)
    with pytest.raises(ValueError):
        rep.record("(1)")
    data = rep.to_dict()
    json.dumps(data)  # must be serializable as-is
    labels = [r["element"] for r in data["elements"]]
    assert labels == [z30.label(p) for p in z30.proper_elements]
    for r in data["elements"]:
        for flag, ok in r["flags"].items():
            assert ok == (flag not in r["witnesses"])
