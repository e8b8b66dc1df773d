"""Wheel and Pont Neuf diagram families and their closed-form top polynomials.

Both families are built with a fixed planar-counterclockwise embedding, and
every leg is attached so that under the all-(+1) state its marked point lands
on the outer face; flipping an attachment vertex moves the point across the
host edge.  The wheel closed form and the Pont Neuf closed form double as
convention oracles: the test suite checks them against the full state sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .casimir import CasimirPoly
from .diagram import Diagram


def wheel(u: int) -> Diagram:
    """Circle of ``u`` trivalent vertices, each carrying one outward leg.

    Vertex i owns darts 3i (leg), 3i+1 (forward along the circle) and
    3i+2 (backward); leg i ends at the univalent dart 3u+i.
    """
    if not isinstance(u, int) or isinstance(u, bool) or u < 1:
        raise ValueError("a wheel needs at least one leg")
    trivalent = tuple((3 * i, 3 * i + 1, 3 * i + 2) for i in range(u))
    edges = [(3 * i + 1, 3 * ((i + 1) % u) + 2) for i in range(u)]
    edges += [(3 * i, 3 * u + i) for i in range(u)]
    univalent = tuple(range(3 * u, 4 * u))
    return Diagram(4 * u, tuple(edges), trivalent, univalent)


def wheel_closed_form(u: int) -> CasimirPoly:
    """sum_{j=0}^{u} (-1)^j C(u, j) c_j c_{u-j}, with mirror terms merged."""
    if not isinstance(u, int) or isinstance(u, bool) or u < 2 or u % 2:
        raise ValueError("the wheel closed form needs an even leg count >= 2")
    return CasimirPoly(((j, u - j), (-1) ** j * comb(u, j)) for j in range(u + 1))


@dataclass(frozen=True)
class PontNeufParams:
    """Leg distribution (a_1 <= ... <= a_k <= b) of a Pont Neuf diagram.

    ``a[i]`` legs sit on arch i of a k-arch bridge and ``2*b`` legs sit on
    the road edge closing the bridge outline; the total leg count is even.
    """

    a: tuple[int, ...]
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if len(self.a) < 1:
            raise ValueError("at least one arch is required (k >= 1)")
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 0 for x in self.a):
            raise ValueError("arch leg counts must be non-negative integers")
        if not isinstance(self.b, int) or isinstance(self.b, bool) or self.b < 0:
            raise ValueError("b must be a non-negative integer")
        if any(x > y for x, y in zip(self.a, self.a[1:])):
            raise ValueError("a not weakly increasing")
        if self.a[-1] > self.b:
            raise ValueError(f"largest arch count {self.a[-1]} exceeds b = {self.b}")
        if self.u % 2:
            raise ValueError(f"total leg count {self.u} is odd")

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def u(self) -> int:
        return sum(self.a) + 2 * self.b

    @property
    def degree(self) -> int:
        return self.u + self.k

    @property
    def trivalent_count(self) -> int:
        return self.u + 2 * self.k


class _Builder:
    """Accumulates darts, edges and counterclockwise vertex triples."""

    def __init__(self):
        self.counter = 0
        self.edges: list[tuple[int, int]] = []
        self.trivalent: list[tuple[int, int, int]] = []
        self.univalent: list[int] = []

    def dart(self) -> int:
        self.counter += 1
        return self.counter - 1

    def chain(self, start: int, end: int, legs: int, outer_side: str) -> None:
        """Subdivide the edge start -> end with ``legs`` attachment vertices.

        ``outer_side`` says on which side of the travel direction the legs
        point ("left" or "right"); that is the face collecting their marked
        points under the +1 state.
        """
        prev = start
        for _ in range(legs):
            inward = self.dart()
            outward = self.dart()
            leg = self.dart()
            tip = self.dart()
            self.edges.append((prev, inward))
            if outer_side == "right":
                self.trivalent.append((leg, outward, inward))
            else:
                self.trivalent.append((leg, inward, outward))
            self.edges.append((leg, tip))
            self.univalent.append(tip)
            prev = outward
        self.edges.append((prev, end))

    def build(self) -> Diagram:
        return Diagram(self.counter, tuple(self.edges), tuple(self.trivalent), tuple(self.univalent))


def _theta_with_legs(a1: int, b: int) -> Diagram:
    # two vertices joined by three edges: arch (a1 legs), deck, road (2b legs)
    bld = _Builder()
    l_arch, l_deck, l_road = bld.dart(), bld.dart(), bld.dart()
    r_road, r_deck, r_arch = bld.dart(), bld.dart(), bld.dart()
    bld.trivalent.append((l_arch, l_road, l_deck))
    bld.trivalent.append((r_arch, r_deck, r_road))
    bld.chain(l_arch, r_arch, a1, "left")    # over the top, outer face above
    bld.edges.append((l_deck, r_deck))
    bld.chain(l_road, r_road, 2 * b, "right")  # underneath, outer face below
    return bld.build()


def pont_neuf(params: PontNeufParams) -> Diagram:
    """Bridge-shaped cubic diagram with legs, embedded planar-counterclockwise.

    The outline is a cycle of k arch edges p_0 p_1, ..., p_{k-1} p_k over the
    top plus one road edge p_k p_0 returning underneath; inside, a pillar
    path q_0 ... q_{k-2} is joined to the outline by spokes (for k = 1 the
    path is empty and a single deck edge joins p_0 to p_1, giving a theta
    graph; k = 2 gives the tetrahedron, k = 3 the triangular prism).  The
    underlying cubic graph is planar and 3-connected, arch i carries the
    a[i] legs and the road edge carries the 2b legs, all pointing into the
    outer face.
    """
    k, b = params.k, params.b
    if k == 1:
        return _theta_with_legs(params.a[0], b)

    bld = _Builder()
    # p_0, ..., p_k along the top of the bridge
    p_arch_out = [0] * k        # dart at p_{i} starting arch i+1 (i = 0..k-1)
    p_arch_in = [0] * (k + 1)   # dart at p_i ending arch i (i = 1..k)
    p_spoke = [0] * (k + 1)
    road_out = road_in = 0
    for i in range(k + 1):
        if i == 0:
            p_arch_out[0] = bld.dart()
            road_out = bld.dart()
            p_spoke[0] = bld.dart()
            bld.trivalent.append((p_arch_out[0], road_out, p_spoke[0]))
        elif i < k:
            p_arch_out[i] = bld.dart()
            p_arch_in[i] = bld.dart()
            p_spoke[i] = bld.dart()
            bld.trivalent.append((p_arch_out[i], p_arch_in[i], p_spoke[i]))
        else:
            p_arch_in[k] = bld.dart()
            p_spoke[k] = bld.dart()
            road_in = bld.dart()
            bld.trivalent.append((p_arch_in[k], p_spoke[k], road_in))

    # pillar path q_0, ..., q_{k-2} under the arches
    q_from_p = [0] * (k + 1)    # dart at some q receiving the spoke from p_i
    q_left = [0] * (k - 1)
    q_right = [0] * (k - 1)
    for j in range(k - 1):
        if k == 2:
            q_from_p[2] = bld.dart()
            q_from_p[1] = bld.dart()
            q_from_p[0] = bld.dart()
            bld.trivalent.append((q_from_p[2], q_from_p[1], q_from_p[0]))
        elif j == 0:
            q_right[0] = bld.dart()
            q_from_p[1] = bld.dart()
            q_from_p[0] = bld.dart()
            bld.trivalent.append((q_right[0], q_from_p[1], q_from_p[0]))
        elif j < k - 2:
            q_right[j] = bld.dart()
            q_from_p[j + 1] = bld.dart()
            q_left[j] = bld.dart()
            bld.trivalent.append((q_right[j], q_from_p[j + 1], q_left[j]))
        else:
            q_from_p[k] = bld.dart()
            q_from_p[k - 1] = bld.dart()
            q_left[j] = bld.dart()
            bld.trivalent.append((q_from_p[k], q_from_p[k - 1], q_left[j]))

    for i in range(k + 1):
        bld.edges.append((p_spoke[i], q_from_p[i]))
    for j in range(k - 2):
        bld.edges.append((q_right[j], q_left[j + 1]))

    # arches over the top: outer face is above, i.e. left of the travel direction
    for i in range(k):
        bld.chain(p_arch_out[i], p_arch_in[i + 1], params.a[i], "left")
    # road underneath: outer face is below, i.e. right of the travel direction
    bld.chain(road_out, road_in, 2 * b, "right")
    return bld.build()


def pont_neuf_cd_closed_form(params: PontNeufParams) -> CasimirPoly:
    """Top polynomial of a Pont Neuf diagram, as a binomial sum.

    2 * sum over (j_1..j_k, l) of (-1)^{sum j + l} C(a_1,j_1)...C(a_k,j_k)
    C(2b,l) c_{j_1}...c_{j_k} c_l c_{u - sum j - l}, like monomials merged.
    """
    u = params.u
    terms: dict[tuple[int, ...], int] = {}
    stack: list[tuple[tuple[int, ...], int, int]] = [((), 0, 1)]
    for a_i in params.a:
        stack = [
            (js + (j,), total + j, coeff * comb(a_i, j))
            for js, total, coeff in stack
            for j in range(a_i + 1)
        ]
    two_b = 2 * params.b
    for js, total, coeff in stack:
        for l in range(two_b + 1):
            mono = tuple(sorted(js + (l, u - total - l)))
            value = terms.get(mono, 0) + (-1) ** (total + l) * 2 * coeff * comb(two_b, l)
            if value:
                terms[mono] = value
            elif mono in terms:
                del terms[mono]
    return CasimirPoly(terms)


def enumerate_params(k: int, u: int) -> list[PontNeufParams]:
    """All (a_1 <= ... <= a_k <= b) with sum(a) + 2b = u, ascending lexicographic in a."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError("k must be a positive integer")
    if not isinstance(u, int) or isinstance(u, bool) or u < 0 or u % 2:
        raise ValueError("u must be even and non-negative")
    out: list[PontNeufParams] = []

    def extend(prefix: tuple[int, ...], lo: int, total: int) -> None:
        if len(prefix) == k:
            rest = u - total
            if rest % 2 == 0 and rest // 2 >= prefix[-1]:
                out.append(PontNeufParams(prefix, rest // 2))
            return
        for x in range(lo, u - total + 1):
            extend(prefix + (x,), x, total + x)

    extend((), 0, 0)
    return out
