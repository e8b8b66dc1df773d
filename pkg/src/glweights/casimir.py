"""Exact sparse polynomials in the commuting variables c_0, c_1, c_2, ...

A monomial is a sorted tuple of variable indices (``(0, 1, 1)`` stands for
c_0 * c_1**2), so repeated factors are explicit and indices are unbounded.
Coefficients are arbitrary-precision integers; no operation ever rounds.
The variable c_0 plays the role of the matrix size N and can be substituted
by an integer with :meth:`CasimirPoly.substitute_c0`.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from itertools import groupby

Monomial = tuple[int, ...]


def as_monomial(indices: Iterable[int]) -> Monomial:
    """Normalize an index multiset into the canonical sorted tuple."""
    mono = tuple(sorted(indices))
    for j in mono:
        if not isinstance(j, int) or isinstance(j, bool) or j < 0:
            raise ValueError(f"monomial indices must be non-negative integers, got {j!r}")
    return mono


def term_sort_key(mono: Monomial) -> tuple[int, Monomial]:
    """Canonical term order: more factors first, then lexicographic."""
    return (-len(mono), mono)


class CasimirPoly:
    """Integer-coefficient polynomial stored as {sorted index tuple: coeff}.

    Instances behave as immutable values: all arithmetic returns new
    polynomials and zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | Iterable[tuple[Iterable[int], int]] = ()):
        data: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for indices, coeff in items:
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise TypeError(f"coefficients must be int, got {type(coeff).__name__}")
            mono = as_monomial(indices)
            value = data.get(mono, 0) + coeff
            if value:
                data[mono] = value
            elif mono in data:
                del data[mono]
        self._terms = data

    @classmethod
    def zero(cls) -> "CasimirPoly":
        return cls()

    @classmethod
    def one(cls) -> "CasimirPoly":
        return cls({(): 1})

    @classmethod
    def variable(cls, index: int) -> "CasimirPoly":
        """The single variable c_index."""
        return cls({(index,): 1})

    # -- queries ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, indices: Iterable[int]) -> int:
        """Exact coefficient of the given monomial, 0 if absent."""
        return self._terms.get(as_monomial(indices), 0)

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=term_sort_key)

    def items(self) -> list[tuple[Monomial, int]]:
        """Terms in the canonical order (factor count desc, then lex)."""
        return [(m, self._terms[m]) for m in self.monomials()]

    def max_factor_count(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no factor count")
        return max(len(m) for m in self._terms)

    # -- ring operations -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CasimirPoly):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # mutable-dict backed; value equality only

    def __neg__(self) -> "CasimirPoly":
        return CasimirPoly({m: -c for m, c in self._terms.items()})

    def __add__(self, other: "CasimirPoly") -> "CasimirPoly":
        if not isinstance(other, CasimirPoly):
            return NotImplemented
        data = dict(self._terms)
        for m, c in other._terms.items():
            value = data.get(m, 0) + c
            if value:
                data[m] = value
            elif m in data:
                del data[m]
        out = CasimirPoly.__new__(CasimirPoly)
        out._terms = data
        return out

    def __sub__(self, other: "CasimirPoly") -> "CasimirPoly":
        if not isinstance(other, CasimirPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "CasimirPoly | int") -> "CasimirPoly":
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 0:
                return CasimirPoly()
            return CasimirPoly({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, CasimirPoly):
            return NotImplemented
        data: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(sorted(m1 + m2))
                value = data.get(mono, 0) + c1 * c2
                if value:
                    data[mono] = value
                elif mono in data:
                    del data[mono]
        out = CasimirPoly.__new__(CasimirPoly)
        out._terms = data
        return out

    __rmul__ = __mul__

    # -- structure -------------------------------------------------------

    def top_homogeneous_part(self) -> "CasimirPoly":
        """Terms with the maximal number of factors (each c_j counts one)."""
        top = self.max_factor_count()
        out = CasimirPoly.__new__(CasimirPoly)
        out._terms = {m: c for m, c in self._terms.items() if len(m) == top}
        return out

    def substitute_c0(self, n: int) -> "CasimirPoly":
        """Replace every c_0 factor by the integer ``n``."""
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("substitution value must be int")
        data: dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            zeros = 0
            while zeros < len(mono) and mono[zeros] == 0:
                zeros += 1
            coeff *= n ** zeros
            if not coeff:
                continue
            rest = mono[zeros:]
            value = data.get(rest, 0) + coeff
            if value:
                data[rest] = value
            elif rest in data:
                del data[rest]
        out = CasimirPoly.__new__(CasimirPoly)
        out._terms = data
        return out

    # -- rendering and serialization --------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for mono, coeff in self.items():
            factors = "*".join(
                f"c{j}" if k == 1 else f"c{j}^{k}" for j, grp in groupby(mono) for k in (len(list(grp)),)
            )
            if mono:
                body = factors if abs(coeff) == 1 else f"{abs(coeff)}*{factors}"
            else:
                body = str(abs(coeff))
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"CasimirPoly({dict(self.items())!r})"

    def to_terms(self) -> list[dict]:
        """Serializable term list; coefficients as decimal strings."""
        return [{"indices": list(m), "coeff": str(c)} for m, c in self.items()]

    @classmethod
    def from_terms(cls, terms: Iterable[Mapping]) -> "CasimirPoly":
        return cls((entry["indices"], int(entry["coeff"])) for entry in terms)


def poly_to_json(poly: CasimirPoly) -> str:
    """Canonical single-line JSON rendering; identical polynomials give identical bytes."""
    return json.dumps(poly.to_terms(), separators=(",", ":")) + "\n"


def poly_from_json(text: str) -> CasimirPoly:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("polynomial file must contain a JSON list of terms")
    return CasimirPoly.from_terms(data)
