"""Exact integer rank computation and the triangular independence certificate."""

from __future__ import annotations

from typing import NamedTuple

from .casimir import CasimirPoly, Monomial, term_sort_key
from .families import enumerate_params, pont_neuf_cd_closed_form


def coefficient_matrix(polys: list[CasimirPoly]) -> tuple[list[list[int]], list[Monomial]]:
    """Rows = polynomials, columns = union of their monomials in canonical order."""
    columns = sorted({m for p in polys for m in p.monomials()}, key=term_sort_key)
    matrix = [[p.coefficient(m) for m in columns] for p in polys]
    return matrix, columns


def rank_exact(matrix: list[list[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    Row updates are 2x2 determinants divided by the previous pivot; the
    divisions are exact, so everything stays in arbitrary-precision integers
    and no floating point is involved.  Pivots take the first column with a
    non-zero entry, breaking ties by largest absolute value.
    """
    work = [list(row) for row in matrix]
    for row in work:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError("matrix entries must be int")
    n_rows = len(work)
    n_cols = len(work[0]) if n_rows else 0
    if any(len(row) != n_cols for row in work):
        raise ValueError("ragged matrix")

    rank = 0
    previous_pivot = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        best = -1
        best_abs = 0
        for r in range(rank, n_rows):
            value = abs(work[r][col])
            if value > best_abs:
                best, best_abs = r, value
        if best < 0:
            continue
        work[rank], work[best] = work[best], work[rank]
        pivot_row = work[rank]
        pivot = pivot_row[col]
        for r in range(rank + 1, n_rows):
            row = work[r]
            factor = row[col]
            for c in range(col + 1, n_cols):
                row[c] = (row[c] * pivot - factor * pivot_row[c]) // previous_pivot
            row[col] = 0
        previous_pivot = pivot
        rank += 1
    return rank


class IndependenceReport(NamedTuple):
    size: int
    rank: int
    triangular_ok: bool


def independence_check(k: int, u: int) -> IndependenceReport:
    """Verify that the closed-form top polynomials over all (a_1..a_k, b) with
    sum(a) + 2b = u are linearly independent.

    ``rank`` is the exact rank of their coefficient matrix and should equal
    ``size``.  ``triangular_ok`` checks the stronger staircase witness: for
    each parameter tuple, the monomial c_{a_1}...c_{a_k} c_b^2 has a non-zero
    coefficient in its own polynomial and coefficient zero in the polynomial
    of every lexicographically smaller tuple.
    """
    if u % 2:
        raise ValueError("u must be even")
    params = enumerate_params(k, u)
    polys = [pont_neuf_cd_closed_form(p) for p in params]
    matrix, _ = coefficient_matrix(polys)
    rank = rank_exact(matrix) if polys else 0

    triangular_ok = True
    for i, p in enumerate(params):
        witness = tuple(sorted(p.a + (p.b, p.b)))
        if polys[i].coefficient(witness) == 0:
            triangular_ok = False
            break
        if any(polys[j].coefficient(witness) != 0 for j in range(i)):
            triangular_ok = False
            break
    return IndependenceReport(len(params), rank, triangular_ok)
