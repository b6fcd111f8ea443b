"""Construction and validation of dual graphs.

Provides the ADE families, cyclic quotient chains via Hirzebruch-Jung
continued fractions, a line-oriented text format for user-supplied graphs,
and a structural validator (connectedness, negative definiteness, tree
shape, rationality, Gorenstein-ness).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .lattice import DualGraph, virtual_genus

ADE_FAMILIES = ("A", "D", "E")


class GraphFormatError(ValueError):
    """Malformed graph text (carries a 1-based line number when known)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def build_ade(family: str, index: int) -> DualGraph:
    """Dual graph of the rational double point of the given ADE type.

    All weights are -2.  A_n is the path E_1 - ... - E_n; D_n is the path
    E_1 - ... - E_{n-2} with E_{n-1} and E_n both joined to E_{n-2}; E_n
    (n in {6,7,8}) is the path E_1 - ... - E_{n-1} with E_n joined to E_3.
    """
    family = family.upper()
    n = int(index)
    if family == "A":
        if n < 1:
            raise ValueError(f"A_n requires n >= 1, got {n}")
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "D":
        if n < 4:
            raise ValueError(f"D_n requires n >= 4, got {n}")
        edges = [(i, i + 1) for i in range(n - 3)]
        edges += [(n - 3, n - 2), (n - 3, n - 1)]
    elif family == "E":
        if n not in (6, 7, 8):
            raise ValueError(f"E_n requires n in {{6, 7, 8}}, got {n}")
        edges = [(i, i + 1) for i in range(n - 2)]
        edges.append((2, n - 1))
    else:
        raise ValueError(f"unknown family {family!r}, expected one of A, D, E")
    return DualGraph((-2,) * n, edges)


def hj_expansion(n: int, q: int) -> list[int]:
    """Hirzebruch-Jung continued fraction of n/q.

    Returns the unique [b_1, ..., b_r] with every b_i >= 2 and
    n/q = b_1 - 1/(b_2 - 1/(... - 1/b_r)).  Each step takes the ceiling
    b = ceil(n/q) and recurses on (q, b*q - n).
    """
    n, q = int(n), int(q)
    if not 1 <= q < n:
        raise ValueError(f"need 1 <= q < n, got q={q}, n={n}")
    if math.gcd(n, q) != 1:
        raise ValueError(f"n={n} and q={q} are not coprime")
    out = []
    while q > 0:
        b = -(-n // q)
        out.append(b)
        n, q = q, b * q - n
    return out


def build_cyclic(n: int, q: int) -> DualGraph:
    """Dual graph of the cyclic quotient singularity of type (1/n)(1, q):
    a chain with weights (-b_1, ..., -b_r) from the expansion of n/q.
    """
    bs = hj_expansion(n, q)
    edges = [(i, i + 1) for i in range(len(bs) - 1)]
    return DualGraph(tuple(-b for b in bs), edges)


def parse_graph(text: str) -> DualGraph:
    """Parse the line-oriented graph format.

    '#' starts a comment, blank lines are ignored.  Directives:
      vertices <r>        required first, r >= 1
      weight <i> <w>      optional, 1-based i, integer w <= -2 (default -2)
      edge <i> <j>        1-based, i != j, at most once per unordered pair
    """
    r: int | None = None
    weights: list[int] = []
    weight_seen: set[int] = set()
    edges: list[tuple[int, int]] = []
    edge_seen: set[tuple[int, int]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        directive, args = parts[0], parts[1:]
        if directive == "vertices":
            if r is not None:
                raise GraphFormatError("duplicate 'vertices' directive", lineno)
            r = _int_arg(args, 0, 1, "vertices", lineno)
            if r < 1:
                raise GraphFormatError(f"vertex count must be >= 1, got {r}", lineno)
            weights = [-2] * r
            continue
        if r is None:
            raise GraphFormatError("'vertices' must be the first directive", lineno)
        if directive == "weight":
            i = _int_arg(args, 0, 2, "weight", lineno)
            w = _int_arg(args, 1, 2, "weight", lineno)
            if not 1 <= i <= r:
                raise GraphFormatError(f"vertex {i} out of range 1..{r}", lineno)
            if i in weight_seen:
                raise GraphFormatError(f"duplicate weight for vertex {i}", lineno)
            if w > -2:
                raise GraphFormatError(
                    f"weight must be <= -2 on a minimal resolution, got {w}", lineno
                )
            weight_seen.add(i)
            weights[i - 1] = w
        elif directive == "edge":
            i = _int_arg(args, 0, 2, "edge", lineno)
            j = _int_arg(args, 1, 2, "edge", lineno)
            if i == j:
                raise GraphFormatError(f"self-loop at vertex {i}", lineno)
            if not (1 <= i <= r and 1 <= j <= r):
                raise GraphFormatError(f"edge {i} {j} out of range 1..{r}", lineno)
            pair = (min(i, j) - 1, max(i, j) - 1)
            if pair in edge_seen:
                raise GraphFormatError(f"duplicate edge {i} {j}", lineno)
            edge_seen.add(pair)
            edges.append(pair)
        else:
            raise GraphFormatError(f"unknown directive {directive!r}", lineno)

    if r is None:
        raise GraphFormatError("missing 'vertices' directive")
    return DualGraph(weights, edges)


def _int_arg(args: list[str], pos: int, want: int, directive: str, lineno: int) -> int:
    if len(args) != want:
        raise GraphFormatError(
            f"'{directive}' takes {want} argument(s), got {len(args)}", lineno
        )
    try:
        return int(args[pos])
    except ValueError:
        raise GraphFormatError(
            f"'{directive}' argument {args[pos]!r} is not an integer", lineno
        ) from None


@dataclass
class ValidationReport:
    """Structural verdicts on a dual graph.

    ``rational`` and ``gorenstein`` are only meaningful when the graph is
    connected and negative definite; otherwise they are False and a
    finding explains why they are undetermined.  ``multiplicity`` is
    -Z_0^2 whenever the fundamental cycle is computable, else None.
    """

    connected: bool = False
    negative_definite: bool = False
    tree: bool = False
    rational: bool = False
    gorenstein: bool = False
    multiplicity: int | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def is_connected(g: DualGraph, vertices: frozenset[int] | None = None) -> bool:
    """Graph search on the induced subgraph (whole graph by default)."""
    verts = set(range(g.vertex_count)) if vertices is None else set(vertices)
    if not verts:
        return False
    stack = [next(iter(verts))]
    seen = set()
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(u for u in g.neighbors(v) if u in verts and u not in seen)
    return seen == verts


def _leading_minors(m: list[list[int]]) -> list[int]:
    """Leading principal minors det(m[:k][:k]) for k=1..r, exact integers."""
    return [_det([row[: k + 1] for row in m[: k + 1]]) for k in range(len(m))]


def _det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(m)
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_negative_definite(g: DualGraph) -> bool:
    """Sylvester's criterion on -M: all leading principal minors positive."""
    neg = [[-x for x in row] for row in g.intersection_matrix()]
    return all(d > 0 for d in _leading_minors(neg))


def graph_determinant(g: DualGraph) -> int:
    """det(-M), the order of the discriminant group (n for (1/n)(1,q))."""
    return _det([[-x for x in row] for row in g.intersection_matrix()])


def validate(g: DualGraph) -> ValidationReport:
    """Full structural report; never raises, all findings are collected."""
    from .invariants import fundamental_cycle, multiplicity  # cycle-level layer

    rep = ValidationReport()
    rep.connected = is_connected(g)
    if not rep.connected:
        rep.failures.append("graph is not connected")
    rep.negative_definite = is_negative_definite(g)
    if not rep.negative_definite:
        rep.failures.append("intersection matrix is not negative definite")
    rep.tree = rep.connected and len(g.edges) == g.vertex_count - 1
    bad_weights = [i + 1 for i, w in enumerate(g.weights) if w > -2]
    if bad_weights:
        rep.failures.append(
            f"weights > -2 at vertices {bad_weights} (not a minimal resolution)"
        )

    if rep.connected and rep.negative_definite:
        z0 = fundamental_cycle(g)
        rep.multiplicity = multiplicity(g, z0)
        rep.rational = virtual_genus(g, z0) == 0
        if not rep.rational:
            rep.failures.append(
                f"not rational: fundamental cycle has virtual genus {virtual_genus(g, z0)}"
            )
        rep.gorenstein = rep.multiplicity == 2
        if rep.gorenstein and not rep.rational:
            rep.failures.append(
                "multiplicity 2 but not rational: outside this tool's scope"
            )
    else:
        rep.failures.append(
            "rationality/Gorenstein-ness undetermined (needs a connected, "
            "negative definite graph)"
        )
    return rep
