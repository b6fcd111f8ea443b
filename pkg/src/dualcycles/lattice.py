"""Exact integer arithmetic on cycles over a fixed dual graph.

A dual graph is a weighted simple graph: vertices are exceptional curves,
the weight of a vertex is its self-intersection number, and an edge means
the two curves meet transversally in one point.  A cycle is an integer
coefficient vector over the vertices.  Everything here is exact integer
arithmetic; coefficients may be negative (differences of cycles are
legitimate lattice elements), positivity is enforced by callers that
need it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

Cycle = tuple[int, ...]


class DimensionError(ValueError):
    """A cycle's length does not match the graph's vertex count."""


class CycleError(ValueError):
    """A cycle violates a precondition (negativity, not anti-nef, ...)."""


@dataclass(frozen=True)
class DualGraph:
    """Weighted simple graph carrying the intersection form.

    ``weights[i]`` is the self-intersection of vertex i (normally <= -2 on
    a minimal resolution; the constructor does not enforce that, the
    validator reports it).  ``edges`` holds unordered pairs (i, j) with
    i < j, each meaning intersection number 1.  Vertices are 0-based here;
    all I/O uses 1-based labels.
    """

    weights: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    _neighbors: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __init__(self, weights, edges):
        weights = tuple(int(w) for w in weights)
        if not weights:
            raise ValueError("a dual graph needs at least one vertex")
        r = len(weights)
        norm = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i + 1}")
            if not (0 <= i < r and 0 <= j < r):
                raise ValueError(f"edge ({i + 1},{j + 1}) out of range")
            pair = (i, j) if i < j else (j, i)
            if pair in norm:
                raise ValueError(f"duplicate edge ({pair[0] + 1},{pair[1] + 1})")
            norm.add(pair)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "edges", frozenset(norm))
        nbrs: list[list[int]] = [[] for _ in range(r)]
        for i, j in sorted(norm):
            nbrs[i].append(j)
            nbrs[j].append(i)
        object.__setattr__(self, "_neighbors", tuple(tuple(sorted(n)) for n in nbrs))

    @property
    def vertex_count(self) -> int:
        return len(self.weights)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self._neighbors[i]

    def intersection_matrix(self) -> list[list[int]]:
        r = self.vertex_count
        m = [[0] * r for _ in range(r)]
        for i in range(r):
            m[i][i] = self.weights[i]
        for i, j in self.edges:
            m[i][j] = 1
            m[j][i] = 1
        return m

    def check_cycle(self, z: Cycle) -> Cycle:
        z = tuple(int(a) for a in z)
        if len(z) != self.vertex_count:
            raise DimensionError(
                f"cycle has {len(z)} coefficients, graph has {self.vertex_count} vertices"
            )
        return z

    def zero(self) -> Cycle:
        return (0,) * self.vertex_count

    def unit(self, i: int) -> Cycle:
        z = [0] * self.vertex_count
        z[i] = 1
        return tuple(z)


def support(z: Cycle) -> frozenset[int]:
    """Vertices with strictly positive coefficient."""
    return frozenset(i for i, a in enumerate(z) if a > 0)


def add(z: Cycle, w: Cycle) -> Cycle:
    return tuple(a + b for a, b in zip(z, w, strict=True))


def sub(z: Cycle, w: Cycle) -> Cycle:
    return tuple(a - b for a, b in zip(z, w, strict=True))


def scale(k: int, z: Cycle) -> Cycle:
    return tuple(k * a for a in z)


def pairing_vector(g: DualGraph, z: Cycle) -> Cycle:
    """The vector (Z.E_1, ..., Z.E_r), i.e. the intersection matrix applied to Z."""
    z = g.check_cycle(z)
    out = []
    for i in range(g.vertex_count):
        s = g.weights[i] * z[i]
        for j in g.neighbors(i):
            s += z[j]
        out.append(s)
    return tuple(out)


def intersection(g: DualGraph, z: Cycle, w: Cycle) -> int:
    """Intersection number Z.W of two cycles (symmetric, bilinear)."""
    z = g.check_cycle(z)
    w = g.check_cycle(w)
    s = sum(g.weights[i] * z[i] * w[i] for i in range(g.vertex_count))
    for i, j in g.edges:
        s += z[i] * w[j] + z[j] * w[i]
    return s


def canonical_degree(g: DualGraph, z: Cycle) -> int:
    """K.Z where K is the canonical divisor, using K.E_i = -E_i^2 - 2.

    Zero whenever every weight is -2, so this measures exactly the
    contribution of the (-3)-or-worse vertices.
    """
    z = g.check_cycle(z)
    return sum(a * (-w - 2) for a, w in zip(z, g.weights))


def virtual_genus(g: DualGraph, z: Cycle) -> int:
    """p_a(Z) = (Z^2 + K.Z)/2 + 1, always an exact integer."""
    z = g.check_cycle(z)
    q = intersection(g, z, z) + canonical_degree(g, z)
    if q % 2 != 0:
        raise AssertionError("parity violation: Z^2 + K.Z is odd (malformed graph)")
    return q // 2 + 1


def is_anti_nef(g: DualGraph, z: Cycle) -> bool:
    """True iff Z.E_i <= 0 for every vertex.  Requires Z >= 0."""
    z = g.check_cycle(z)
    if any(a < 0 for a in z):
        raise CycleError("anti-nef test requires a nonnegative cycle")
    return all(v <= 0 for v in pairing_vector(g, z))


def inf_cycles(z: Cycle, w: Cycle) -> Cycle:
    """Componentwise minimum.  Preserves anti-nefness of anti-nef inputs."""
    return tuple(min(a, b) for a, b in zip(z, w, strict=True))


class Order(Enum):
    EQUAL = "equal"
    LESS_EQ = "less_eq"
    GREATER_EQ = "greater_eq"
    INCOMPARABLE = "incomparable"


def compare(z: Cycle, w: Cycle) -> Order:
    """Componentwise partial-order verdict."""
    if len(z) != len(w):
        raise DimensionError("cycles live on different graphs")
    le = all(a <= b for a, b in zip(z, w))
    ge = all(a >= b for a, b in zip(z, w))
    if le and ge:
        return Order.EQUAL
    if le:
        return Order.LESS_EQ
    if ge:
        return Order.GREATER_EQ
    return Order.INCOMPARABLE
