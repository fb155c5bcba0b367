"""Specialization, torsion polynomials, and annulus certification."""

import itertools
import random

import pytest

from helpers import random_presentation
from torsionpoly.laurent import LaurentPoly, determinant, gcd, normalize, reciprocal
from torsionpoly.presentation import parse_presentation, enumerate_epimorphisms, root_bound_c
from torsionpoly.torsion import (
    InvalidEpimorphism,
    annulus_certify,
    scan,
    specialize_jacobian,
    torsion_polynomial,
)

TREFOIL = parse_presentation("gens: x, y\nrel: x y x Y X Y\n")
TORUS = parse_presentation("gens: x, y\nrel: x y X Y\n")
FREE2 = parse_presentation("gens: x, y\n")


def lp(*coeffs, start=0):
    return LaurentPoly.from_coeffs(coeffs, start)


def test_specialize_trefoil():
    jac = specialize_jacobian(TREFOIL, (1, 1))
    p = lp(1, -1, 1)
    assert jac.entries == ((p, -p),)
    assert jac.complexity == 6


def test_specialize_free_presentation():
    jac = specialize_jacobian(parse_presentation("gens: x\n"), (1,))
    assert jac.entries == ()


def test_specialize_torus_both_maps():
    # psi = (1, 0): the x-derivative collapses (its word has weight 0)
    jac = specialize_jacobian(TORUS, (1, 0))
    assert jac.entries == ((LaurentPoly.zero(), lp(-1, 1)),)
    # psi = (1, 1): both derivatives survive
    jac = specialize_jacobian(TORUS, (1, 1))
    assert jac.entries == ((lp(1, -1), lp(-1, 1)),)


def test_specialized_entries_have_integer_coefficients():
    rng = random.Random(14)
    for _ in range(20):
        pres = random_presentation(rng)
        for psi in enumerate_epimorphisms(pres, 2):
            jac = specialize_jacobian(pres, psi)
            for row in jac.entries:
                for q in row:
                    assert all(c.denominator == 1 for c in q.coeffs.values())


def test_minor_cap_falls_back_to_invariant_factors(monkeypatch):
    import torsionpoly.torsion as torsion_mod

    jac = specialize_jacobian(TREFOIL, (1, 1))
    full = torsion_polynomial(jac)
    monkeypatch.setattr(torsion_mod, "MINOR_ENUMERATION_CAP", 0)
    assert torsion_polynomial(jac) == full


def test_specialize_rejects_invalid_psi():
    with pytest.raises(InvalidEpimorphism):
        specialize_jacobian(TREFOIL, (1, 2))
    with pytest.raises(InvalidEpimorphism):
        specialize_jacobian(TREFOIL, (2, 2))


def test_torsion_polynomial_trefoil():
    assert torsion_polynomial(specialize_jacobian(TREFOIL, (1, 1))) == lp(1, -1, 1)


def test_torsion_polynomial_torus():
    assert torsion_polynomial(specialize_jacobian(TORUS, (1, 0))) == lp(-1, 1)
    assert torsion_polynomial(specialize_jacobian(TORUS, (1, 1))) == lp(-1, 1)


def test_torsion_polynomial_free():
    jac = specialize_jacobian(FREE2, (1, 0))
    assert torsion_polynomial(jac) == LaurentPoly.one()


def _all_valid_psis(pres, bound=2):
    return enumerate_epimorphisms(pres, bound)


def test_specialization_norm_bound_on_random():
    rng = random.Random(12)
    checked = 0
    for _ in range(60):
        pres = random_presentation(rng)
        for psi in _all_valid_psis(pres):
            jac = specialize_jacobian(pres, psi)
            assert jac.total_norm() <= jac.complexity
            checked += 1
    assert checked > 30


def _minor_gcd_direct(jac, r):
    acc = LaurentPoly.zero()
    for ri in itertools.combinations(range(jac.num_relators), r):
        for ci in itertools.combinations(range(jac.num_generators), r):
            acc = gcd(acc, determinant([[jac.entries[i][j] for j in ci] for i in ri]))
    return acc


def test_reciprocal_symmetry_and_degree_bound():
    rng = random.Random(13)
    for _ in range(30):
        pres = random_presentation(rng, max_relators=2, max_len=8)
        for psi in _all_valid_psis(pres):
            jac = specialize_jacobian(pres, psi)
            delta = torsion_polynomial(jac)
            neg = torsion_polynomial(specialize_jacobian(pres, tuple(-v for v in psi)))
            assert neg == normalize(reciprocal(delta))
            if delta:
                span_total = sum(q.span() for row in jac.entries for q in row)
                assert delta.span() <= span_total


def test_annulus_trefoil_pass_exact():
    rep = annulus_certify(TREFOIL, (1, 1))
    assert rep.verdict == "pass"
    assert rep.exact_certified
    assert rep.cauchy_radius == 3 and rep.cauchy_radius_reciprocal == 3
    assert rep.c == 73 and rep.complexity == 6
    assert abs(rep.min_modulus - 1) < 1e-10 and abs(rep.max_modulus - 1) < 1e-10


def test_annulus_torus_pass():
    rep = annulus_certify(TORUS, (1, 0))
    assert rep.verdict == "pass"
    assert rep.delta == lp(-1, 1)


def test_annulus_free_vacuous():
    rep = annulus_certify(parse_presentation("gens: x\n"), (1,))
    assert rep.verdict == "vacuous"
    assert rep.roots == ()


def test_annulus_certify_only_is_exact():
    rep = annulus_certify(TREFOIL, (1, 1), certify_only=True)
    assert rep.verdict == "pass"
    assert rep.roots == () and rep.min_modulus is None


def test_scan_trefoil():
    reports = scan(TREFOIL, 3)
    assert len(reports) == 1
    assert reports[0].psi == (1, 1) and reports[0].verdict == "pass"


def test_scan_free_two_generators():
    reports = scan(FREE2, 1)
    assert [r.psi for r in reports] == [(0, 1), (1, -1), (1, 0), (1, 1)]
    assert all(r.verdict == "vacuous" for r in reports)


def test_scan_betti_zero_is_empty():
    assert scan(parse_presentation("gens: x\nrel: x^2\n"), 4) == []


def test_scan_shares_one_constant():
    reports = scan(FREE2, 1)
    c = root_bound_c(FREE2)
    assert all(r.c == c for r in reports)
