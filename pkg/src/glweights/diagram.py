"""Open Jacobi diagrams as oriented combinatorial maps.

A diagram is stored on darts (half-edges) ``0 .. dart_count-1``: a perfect
matching pairs darts into edges, every trivalent vertex is an ordered dart
triple giving the counterclockwise cyclic order, and every univalent vertex
holds a single dart.  Thickening the diagram under a choice of signs for the
trivalent vertices produces an oriented surface whose boundary components are
the cycles of (rotation composed with the edge involution); a ``+1`` vertex
keeps its stored cyclic order, a ``-1`` vertex reverses it, and every
univalent vertex leaves one marked ("missing") point on the boundary
component that passes it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


class InvalidDiagramError(ValueError):
    """Raised when an operation needs a structurally valid diagram but got violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def _rotate_min_first(triple: tuple[int, int, int]) -> tuple[int, int, int]:
    # cyclic rotation only: [a, b, c] ~ [b, c, a], never the reversal
    k = triple.index(min(triple))
    return triple[k:] + triple[:k]


@dataclass(frozen=True)
class Diagram:
    """Dart-based diagram with trivalent (cyclically ordered) and univalent vertices."""

    dart_count: int
    edges: tuple[tuple[int, int], ...]
    trivalent: tuple[tuple[int, int, int], ...]
    univalent: tuple[int, ...]

    def __post_init__(self):
        edges = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        trivalent = tuple(_rotate_min_first(tuple(t)) for t in self.trivalent)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "trivalent", trivalent)
        object.__setattr__(self, "univalent", tuple(sorted(self.univalent)))

    @property
    def num_trivalent(self) -> int:
        return len(self.trivalent)

    @property
    def num_univalent(self) -> int:
        return len(self.univalent)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def degree(self) -> int:
        """Half the total vertex count."""
        return (len(self.trivalent) + len(self.univalent)) // 2


def validate(diagram: Diagram) -> list[str]:
    """Return every violated structural invariant (empty list means valid)."""
    violations = []
    d = diagram
    seen_in_edges: dict[int, int] = {}
    for pair in d.edges:
        for dart in pair:
            seen_in_edges[dart] = seen_in_edges.get(dart, 0) + 1
        if pair[0] == pair[1]:
            violations.append(f"matching not perfect: edge pairs dart {pair[0]} with itself")
    out_of_range = sorted(x for x in seen_in_edges if not 0 <= x < d.dart_count)
    if out_of_range:
        violations.append(f"dart index out of range in edges: {out_of_range}")
    doubled = sorted(x for x, n in seen_in_edges.items() if n > 1)
    if doubled:
        violations.append(f"matching not perfect: darts {doubled} appear in more than one edge")
    missing = [x for x in range(d.dart_count) if x not in seen_in_edges]
    if missing:
        violations.append(f"matching not perfect: darts {missing} appear in no edge")

    seen_at_vertices: dict[int, int] = {}
    for triple in d.trivalent:
        for dart in triple:
            seen_at_vertices[dart] = seen_at_vertices.get(dart, 0) + 1
    for dart in d.univalent:
        seen_at_vertices[dart] = seen_at_vertices.get(dart, 0) + 1
    out_of_range = sorted(x for x in seen_at_vertices if not 0 <= x < d.dart_count)
    if out_of_range:
        violations.append(f"dart index out of range at vertices: {out_of_range}")
    doubled = sorted(x for x, n in seen_at_vertices.items() if n > 1)
    if doubled:
        violations.append(f"darts {doubled} appear at more than one vertex")
    missing = [x for x in range(d.dart_count) if x not in seen_at_vertices]
    if missing:
        violations.append(f"darts {missing} appear at no vertex")

    if d.dart_count != 2 * len(d.edges):
        violations.append(f"dart count {d.dart_count} is not twice the edge count {len(d.edges)}")
    if d.dart_count != 3 * len(d.trivalent) + len(d.univalent):
        violations.append(
            f"dart count {d.dart_count} is not 3*{len(d.trivalent)} trivalent + {len(d.univalent)} univalent"
        )
    if (len(d.trivalent) + len(d.univalent)) % 2:
        violations.append("total vertex count is odd, so the degree is not an integer")
    return violations


def is_connected(diagram: Diagram) -> bool:
    """Whether the dart adjacency graph (vertices linked by edges) is connected."""
    vertex_of: dict[int, int] = {}
    for v, triple in enumerate(diagram.trivalent):
        for dart in triple:
            vertex_of[dart] = v
    base = len(diagram.trivalent)
    for v, dart in enumerate(diagram.univalent):
        vertex_of[dart] = base + v
    total = base + len(diagram.univalent)
    if total <= 1:
        return True
    adjacency: dict[int, list[int]] = {v: [] for v in range(total)}
    for x, y in diagram.edges:
        adjacency[vertex_of[x]].append(vertex_of[y])
        adjacency[vertex_of[y]].append(vertex_of[x])
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == total


@dataclass(frozen=True)
class BState:
    """Assignment of +1 / -1 to the trivalent vertices, indexed by list position."""

    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("state entries must be +1 or -1")

    @classmethod
    def all_plus(cls, count: int) -> "BState":
        return cls((1,) * count)

    @property
    def weight(self) -> int:
        """Number of -1 entries."""
        return sum(1 for s in self.signs if s == -1)

    def conjugate(self) -> "BState":
        return BState(tuple(-s for s in self.signs))


@dataclass(frozen=True)
class Face:
    """One boundary component: its dart cycle and the marked points left on it."""

    darts: tuple[int, ...]
    missing_points: int


@dataclass(frozen=True)
class SurfaceTrace:
    """Boundary structure of the thickened diagram under one state."""

    faces: tuple[Face, ...]
    genus: int
    num_vertices: int
    num_edges: int

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def total_missing_points(self) -> int:
        return sum(f.missing_points for f in self.faces)


def trace_surface(diagram: Diagram, state: BState) -> SurfaceTrace:
    """Trace the boundary components of the thickened diagram under ``state``.

    The rotation at a trivalent vertex is its stored cyclic order for sign
    +1 and the reversed order for sign -1; univalent vertices rotate their
    single dart to itself.  Faces are the cycles of d -> rotation(partner(d)),
    and the genus comes from the Euler relation of the closed-up surface,
    which is why the diagram must be connected.
    """
    violations = validate(diagram)
    if violations:
        raise InvalidDiagramError(violations)
    if len(state.signs) != len(diagram.trivalent):
        raise ValueError(
            f"state has {len(state.signs)} signs but the diagram has {len(diagram.trivalent)} trivalent vertices"
        )
    if not is_connected(diagram):
        raise InvalidDiagramError(["diagram is not connected"])

    d_count = diagram.dart_count
    partner = [0] * d_count
    for x, y in diagram.edges:
        partner[x] = y
        partner[y] = x
    rotation = list(range(d_count))
    for (a, b, c), sign in zip(diagram.trivalent, state.signs):
        if sign == 1:
            rotation[a], rotation[b], rotation[c] = b, c, a
        else:
            rotation[a], rotation[b], rotation[c] = c, a, b
    is_leg = [False] * d_count
    for dart in diagram.univalent:
        is_leg[dart] = True

    faces = []
    seen = [False] * d_count
    for start in range(d_count):
        if seen[start]:
            continue
        cycle = []
        missing = 0
        dart = start
        while not seen[dart]:
            seen[dart] = True
            cycle.append(dart)
            if is_leg[dart]:
                missing += 1
            dart = rotation[partner[dart]]
        faces.append(Face(tuple(cycle), missing))

    num_vertices = len(diagram.trivalent) + len(diagram.univalent)
    num_edges = len(diagram.edges)
    double_genus = num_edges - num_vertices + 2 - len(faces)
    if double_genus < 0 or double_genus % 2:
        raise RuntimeError(f"Euler relation violated: 2g = {double_genus}")
    return SurfaceTrace(tuple(faces), double_genus // 2, num_vertices, num_edges)


def boundary_monomial(trace: SurfaceTrace) -> tuple[int, ...]:
    """Sorted multiset of per-face missing-point counts (the c-variable indices)."""
    return tuple(sorted(f.missing_points for f in trace.faces))


# -- file format -----------------------------------------------------------

def diagram_to_dict(diagram: Diagram) -> dict:
    return {
        "darts": diagram.dart_count,
        "edges": [list(e) for e in diagram.edges],
        "trivalent": [list(t) for t in diagram.trivalent],
        "univalent": list(diagram.univalent),
    }


def diagram_from_dict(obj: dict) -> Diagram:
    try:
        return Diagram(
            dart_count=int(obj["darts"]),
            edges=tuple(tuple(int(x) for x in e) for e in obj["edges"]),
            trivalent=tuple(tuple(int(x) for x in t) for t in obj["trivalent"]),
            univalent=tuple(int(x) for x in obj["univalent"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed diagram object: {exc}") from exc


def diagram_to_json(diagram: Diagram) -> str:
    """Canonical single-line JSON; identical diagrams give identical bytes."""
    return json.dumps(diagram_to_dict(diagram), separators=(",", ":")) + "\n"


def diagram_from_json(text: str) -> Diagram:
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("diagram file must contain a JSON object")
    return diagram_from_dict(obj)


def save_diagram(diagram: Diagram, path) -> None:
    Path(path).write_text(diagram_to_json(diagram))


def load_diagram(path) -> Diagram:
    return diagram_from_json(Path(path).read_text())
