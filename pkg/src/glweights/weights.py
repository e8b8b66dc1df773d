"""Signed state sums evaluating the top-weight gl(N) weight system.

For a connected diagram the weight polynomial is the sum over all 2^t sign
assignments to the t trivalent vertices of (-1)^(number of -1 signs) times
the boundary monomial of the thickened surface.  The sum is evaluated with
an incrementally updated face permutation (one vertex flips per step, Gray
code order), optionally split over worker processes; integer exactness makes
the result independent of how the state space is partitioned.
"""

from __future__ import annotations

import multiprocessing

from .casimir import CasimirPoly
from .diagram import Diagram, InvalidDiagramError, is_connected, validate

DEFAULT_STATE_CAP = 24


class StateCapError(Exception):
    """Refusal to enumerate more states than the caller allowed."""

    def __init__(self, needed: int, cap: int):
        self.needed = needed
        self.cap = cap
        super().__init__(
            f"state sum needs 2^{needed} states but the cap allows 2^{cap}; "
            f"raise the cap explicitly to proceed"
        )


class ZeroWeightError(ValueError):
    """The weight polynomial vanished, so it has no top homogeneous part."""


def _prepare(diagram: Diagram):
    violations = validate(diagram)
    if violations:
        raise InvalidDiagramError(violations)
    if not is_connected(diagram):
        raise InvalidDiagramError(["diagram is not connected"])
    partner = [0] * diagram.dart_count
    for x, y in diagram.edges:
        partner[x] = y
        partner[y] = x
    leg = [0] * diagram.dart_count
    for dart in diagram.univalent:
        leg[dart] = 1
    return diagram.dart_count, partner, diagram.trivalent, leg


def proper_vertices(diagram: Diagram) -> tuple[int, ...]:
    """Indices of trivalent vertices with no univalent neighbour."""
    partner = {x: y for x, y in diagram.edges} | {y: x for x, y in diagram.edges}
    legs = set(diagram.univalent)
    return tuple(
        v for v, triple in enumerate(diagram.trivalent)
        if not any(partner[d] in legs for d in triple)
    )


def _accumulate(dart_count, partner, triples, leg, vary, preset_minus, acc) -> None:
    """Add the signed boundary profile of every state over ``vary`` into ``acc``.

    Vertices in ``preset_minus`` are pinned to -1, all other non-varying
    vertices to +1.  ``acc`` maps sorted missing-point tuples to signed counts.
    """
    rotation = list(range(dart_count))
    for a, b, c in triples:
        rotation[a] = b
        rotation[b] = c
        rotation[c] = a
    nxt = [rotation[partner[d]] for d in range(dart_count)]
    sign = 1
    for v in preset_minus:
        a, b, c = triples[v]
        nxt[partner[a]] = c
        nxt[partner[b]] = a
        nxt[partner[c]] = b
        sign = -sign
    # per varying vertex: write positions and the values for each sign
    writes = []
    for v in vary:
        a, b, c = triples[v]
        writes.append((partner[a], partner[b], partner[c], b, c, a, c, a, b))
    flipped = [False] * len(vary)
    seen = [0] * dart_count
    stamp = 0
    darts = range(dart_count)
    get = acc.get
    for i in range(1 << len(vary)):
        if i:
            v = (i & -i).bit_length() - 1
            pa, pb, pc, plus_a, plus_b, plus_c, minus_a, minus_b, minus_c = writes[v]
            if flipped[v]:
                nxt[pa] = plus_a
                nxt[pb] = plus_b
                nxt[pc] = plus_c
                flipped[v] = False
            else:
                nxt[pa] = minus_a
                nxt[pb] = minus_b
                nxt[pc] = minus_c
                flipped[v] = True
            sign = -sign
        stamp += 1
        counts = []
        for start in darts:
            if seen[start] != stamp:
                points = 0
                d = start
                while seen[d] != stamp:
                    seen[d] = stamp
                    points += leg[d]
                    d = nxt[d]
                counts.append(points)
        counts.sort()
        key = tuple(counts)
        acc[key] = get(key, 0) + sign


def _worker(payload):
    dart_count, partner, triples, leg, vary, preset_minus = payload
    acc: dict = {}
    _accumulate(dart_count, partner, triples, leg, vary, preset_minus, acc)
    return acc


def _signed_sum(dart_count, partner, triples, leg, vary, jobs) -> dict:
    jobs = 1 if jobs is None else int(jobs)
    t = len(vary)
    if jobs <= 1 or t < 14:
        acc: dict = {}
        _accumulate(dart_count, partner, triples, leg, vary, (), acc)
        return {k: v for k, v in acc.items() if v}
    # pin the top bits per chunk, Gray-walk the rest inside each worker
    bits = min(t, max(1, (2 * jobs - 1).bit_length()))
    low, high = vary[: t - bits], vary[t - bits:]
    payloads = [
        (dart_count, partner, triples, leg, low,
         tuple(high[i] for i in range(bits) if pattern >> i & 1))
        for pattern in range(1 << bits)
    ]
    if "fork" in multiprocessing.get_all_start_methods():
        ctx = multiprocessing.get_context("fork")
    else:
        ctx = multiprocessing.get_context()
    with ctx.Pool(processes=jobs) as pool:
        parts = pool.map(_worker, payloads, chunksize=1)
    acc = {}
    for part in parts:
        for key, value in part.items():
            acc[key] = acc.get(key, 0) + value
    return {k: v for k, v in acc.items() if v}


def gl_weight(diagram: Diagram, *, state_cap: int = DEFAULT_STATE_CAP, jobs: int | None = 1) -> CasimirPoly:
    """Exact signed sum over all states of the boundary monomial.

    Refuses (rather than truncates) when the diagram has more trivalent
    vertices than ``state_cap``, since the sum has 2^t terms.
    """
    dart_count, partner, triples, leg = _prepare(diagram)
    t = len(triples)
    if t > state_cap:
        raise StateCapError(t, state_cap)
    acc = _signed_sum(dart_count, partner, triples, leg, tuple(range(t)), jobs)
    return CasimirPoly(acc)


def gl_weight_top(diagram: Diagram, *, state_cap: int = DEFAULT_STATE_CAP, jobs: int | None = 1) -> CasimirPoly:
    """Top homogeneous part (maximal factor count) of :func:`gl_weight`."""
    weight = gl_weight(diagram, state_cap=state_cap, jobs=jobs)
    if weight.is_zero:
        raise ZeroWeightError("the weight polynomial is zero, so no top part exists")
    return weight.top_homogeneous_part()


def gl_weight_top_fast(diagram: Diagram, *, state_cap: int = DEFAULT_STATE_CAP, jobs: int | None = 1) -> CasimirPoly:
    """Doubling shortcut for the top polynomial of planar 3-connected diagrams.

    Pins every trivalent vertex without univalent neighbour to +1, varies
    only the leg attachment vertices and doubles the result.  The caller is
    responsible for the planarity / 3-connectivity hypothesis; it is not
    checked here, and the shortcut is wrong for diagrams where every
    trivalent vertex touches a leg (e.g. wheels), which are rejected.
    """
    dart_count, partner, triples, leg = _prepare(diagram)
    proper = set(proper_vertices(diagram))
    if not proper:
        raise ValueError("no proper vertices: every trivalent vertex touches a leg, use the full sum")
    vary = tuple(v for v in range(len(triples)) if v not in proper)
    if len(vary) > state_cap:
        raise StateCapError(len(vary), state_cap)
    acc = _signed_sum(dart_count, partner, triples, leg, vary, jobs)
    return 2 * CasimirPoly(acc)
