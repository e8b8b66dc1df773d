"""Exact power-series expansion of the dimension generating functions for
diagrams with one, two or three more trivalent vertices than legs.

All series have the shape numerator / product(1 - x^d); expansion is the
iterated stride-d prefix sum, so every coefficient is an exact integer.
"""

from __future__ import annotations

from collections.abc import Sequence


def series_coefficients(numerator: Sequence[int], denominator_degrees: Sequence[int], count: int) -> list[int]:
    """First ``count`` Taylor coefficients of numerator / prod_d (1 - x^d)."""
    if count < 0:
        raise ValueError("count must be non-negative")
    for d in denominator_degrees:
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise ValueError("denominator degrees must be positive integers")
    coeffs = [int(numerator[i]) if i < len(numerator) else 0 for i in range(count)]
    for d in denominator_degrees:
        for i in range(d, count):
            coeffs[i] += coeffs[i - d]
    return coeffs


def _require_even(u: int) -> None:
    if not isinstance(u, int) or isinstance(u, bool) or u < 0 or u % 2:
        raise ValueError("u must be even and non-negative")


def k1_dimension(u: int) -> int:
    """floor(u/6) + 1, the dimension one trivalent vertex above the leg count."""
    _require_even(u)
    return u // 6 + 1


def k2_dimension(u: int) -> int:
    """floor((u^2 + 12u)/48) + 1, the dimension two trivalent vertices above."""
    _require_even(u)
    return (u * u + 12 * u) // 48 + 1


def k1_gf_coefficients(count: int) -> list[int]:
    """1 / ((1-x^2)(1-x^6))."""
    return series_coefficients([1], [2, 6], count)


def k2_gf_coefficients(count: int) -> list[int]:
    """1 / ((1-x^2)(1-x^4)(1-x^6))."""
    return series_coefficients([1], [2, 4, 6], count)


def k3_lower_bound_coefficients(count: int) -> list[int]:
    """(1 + x^8) / ((1-x^2)(1-x^4)(1-x^6)(1-x^10)), the proved lower bound."""
    return series_coefficients([1, 0, 0, 0, 0, 0, 0, 0, 1], [2, 4, 6, 10], count)


def k3_conjecture_coefficients(count: int) -> list[int]:
    """(1 + x^2 + x^8 - x^10) / ((1-x^2)(1-x^4)(1-x^6)(1-x^10)).

    CONJECTURE: matches the tabulated dimensions up to x^16; no claim beyond.
    """
    return series_coefficients([1, 0, 1, 0, 0, 0, 0, 0, 1, 0, -1], [2, 4, 6, 10], count)
