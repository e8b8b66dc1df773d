import random

import pytest

from glweights import CasimirPoly, as_monomial, poly_from_json, poly_to_json


def random_poly(rng, max_terms=4, max_index=4, max_factors=3):
    terms = []
    for _ in range(rng.randrange(max_terms + 1)):
        mono = tuple(rng.randrange(max_index + 1) for _ in range(rng.randrange(max_factors + 1)))
        terms.append((mono, rng.randrange(-5, 6)))
    return CasimirPoly(terms)


def test_monomial_normalization():
    assert as_monomial([2, 0, 1]) == (0, 1, 2)
    assert CasimirPoly({(2, 0): 1}) == CasimirPoly({(0, 2): 1})
    with pytest.raises(ValueError):
        as_monomial([-1])


def test_add_cancels_to_zero():
    p = CasimirPoly({(0, 2): 1})
    assert (p + (-1) * p).is_zero
    assert str(p - p) == "0"


def test_scale_and_square():
    assert 2 * CasimirPoly({(1, 1): 1}) == CasimirPoly({(1, 1): 2})
    c1 = CasimirPoly.variable(1)
    assert c1 * c1 == CasimirPoly({(1, 1): 1})


def test_coefficient_lookup():
    p = CasimirPoly({(0, 2): 2, (1, 1): -2})
    assert p.coefficient((1, 1)) == -2
    assert p.coefficient([1, 1]) == -2
    assert p.coefficient((5,)) == 0


def test_rejects_inexact_coefficients():
    with pytest.raises(TypeError):
        CasimirPoly({(1,): 1.5})


def test_ring_axioms_on_random_polys():
    rng = random.Random(20240811)
    for _ in range(200):
        p, q, r = (random_poly(rng) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r


def test_top_homogeneous_part():
    p = CasimirPoly({(0, 1, 2): 3, (3, 3): 5})
    top = p.top_homogeneous_part()
    assert top == CasimirPoly({(0, 1, 2): 3})
    assert top.top_homogeneous_part() == top
    homogeneous = CasimirPoly({(0, 2): 2, (1, 1): -2})
    assert homogeneous.top_homogeneous_part() == homogeneous
    with pytest.raises(ValueError):
        CasimirPoly().top_homogeneous_part()


def test_top_part_idempotent_on_random_polys():
    rng = random.Random(7)
    for _ in range(100):
        p = random_poly(rng)
        if p.is_zero:
            continue
        top = p.top_homogeneous_part()
        assert top.top_homogeneous_part() == top


def test_substitute_c0():
    p = CasimirPoly({(0, 2): 2})
    assert p.substitute_c0(3) == CasimirPoly({(2,): 6})
    assert CasimirPoly({(0, 0): 1}).substitute_c0(0).is_zero
    q = CasimirPoly({(0, 0, 2): 4, (0, 1, 1): -4})
    assert q.substitute_c0(2) == CasimirPoly({(2,): 16, (1, 1): -8})


def test_canonical_order_and_str():
    p = CasimirPoly({(3, 3): 5, (0, 1, 2): 3, (1, 1): -2})
    assert [m for m, _ in p.items()] == [(0, 1, 2), (1, 1), (3, 3)]
    assert str(p) == "3*c0*c1*c2 - 2*c1^2 + 5*c3^2"
    assert str(CasimirPoly({(): -7})) == "-7"


def test_json_round_trip_and_determinism():
    rng = random.Random(99)
    for _ in range(50):
        p = random_poly(rng)
        text = poly_to_json(p)
        assert poly_from_json(text) == p
        assert poly_to_json(poly_from_json(text)) == text
    big = CasimirPoly({(70,) * 2: 10**40})
    assert poly_from_json(poly_to_json(big)) == big


def test_json_format_uses_decimal_strings():
    text = poly_to_json(CasimirPoly({(0, 2): 2, (1, 1): -2}))
    assert text == '[{"indices":[0,2],"coeff":"2"},{"indices":[1,1],"coeff":"-2"}]\n'
