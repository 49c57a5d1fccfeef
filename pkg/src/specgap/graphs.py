"""Connected regular simple graphs: validation, named examples, generation, IO.

Every graph handled by this package is a connected (q+1)-regular simple
undirected graph on n >= 2 vertices with q >= 1.  Construction always goes
through :func:`validate`, so downstream code can rely on those facts.

Edge-list file format (UTF-8 text): lines starting with '#' are comments,
every data line is "u v" with 0 <= u < v, one undirected edge per line,
whitespace separated.  The vertex count is inferred as 1 + max index.
"""

import random
import re
from collections import deque

import numpy as np

from .exact import IntMatrix


class GraphValidationError(ValueError):
    """Raised when a candidate adjacency matrix is not a valid graph.

    ``reason`` is a stable machine-readable code, one of: not-square,
    not-binary, not-symmetric, nonzero-diagonal, irregular, disconnected,
    too-few-vertices, degree-too-small.
    """

    def __init__(self, reason, message):
        super().__init__(message)
        self.reason = reason


class GraphGenerationError(RuntimeError):
    """Raised when the random generator exhausts its rejection budget."""


class RegularGraph:
    """Validated connected (q+1)-regular simple graph with a dense 0/1 adjacency.

    Instances are immutable; build them with :func:`validate`,
    :func:`named_graph`, :func:`random_regular` or :func:`parse_edge_list`.
    """

    __slots__ = ("n", "q", "adjacency", "source")

    def __init__(self, n, q, adjacency, source="validated"):
        self.n = n
        self.q = q
        self.adjacency = adjacency
        self.source = source

    @property
    def degree(self):
        return self.q + 1

    def edges(self):
        """Sorted list of undirected edges (u, v) with u < v."""
        a = self.adjacency.data
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if a[u, v] == 1
        ]

    def neighbors(self, u):
        a = self.adjacency.data
        return [v for v in range(self.n) if a[u, v] == 1]

    def __eq__(self, other):
        if not isinstance(other, RegularGraph):
            return NotImplemented
        return self.n == other.n and self.q == other.q and self.adjacency == other.adjacency

    __hash__ = None

    def __repr__(self):
        return f"RegularGraph(n={self.n}, degree={self.degree}, source={self.source!r})"


def _is_connected(rows, n):
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in range(n):
            if rows[u][v] and not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == n


def validate(candidate, source="validated"):
    """Check a square 0/1 matrix and wrap it as a :class:`RegularGraph`.

    Accepts a list of rows, a numpy array, or an :class:`IntMatrix`.
    The degree is derived from the first row sum; q = degree - 1.
    """
    if isinstance(candidate, IntMatrix):
        rows = candidate.data.tolist()
    elif isinstance(candidate, np.ndarray):
        if candidate.ndim != 2 or candidate.shape[0] != candidate.shape[1]:
            raise GraphValidationError("not-square", "adjacency matrix must be square")
        rows = candidate.tolist()
    else:
        rows = [list(r) for r in candidate]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise GraphValidationError("not-square", "adjacency matrix must be square")
    if n < 2:
        raise GraphValidationError("too-few-vertices", f"need at least 2 vertices, got {n}")
    for i in range(n):
        for j in range(n):
            v = rows[i][j]
            if isinstance(v, bool) or v not in (0, 1):
                raise GraphValidationError(
                    "not-binary", f"entry ({i},{j}) is {v!r}, expected 0 or 1"
                )
    for i in range(n):
        if rows[i][i] != 0:
            raise GraphValidationError(
                "nonzero-diagonal", f"vertex {i} carries a self-loop"
            )
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise GraphValidationError(
                    "not-symmetric", f"entries ({i},{j}) and ({j},{i}) differ"
                )
    degree = sum(rows[0])
    for i in range(1, n):
        d = sum(rows[i])
        if d != degree:
            raise GraphValidationError(
                "irregular", f"vertex {i} has degree {d}, vertex 0 has degree {degree}"
            )
    q = degree - 1
    if q < 1:
        raise GraphValidationError(
            "degree-too-small", f"degree must be at least 2, got {degree}"
        )
    if not _is_connected(rows, n):
        raise GraphValidationError("disconnected", "graph is not connected")
    data = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            data[i, j] = int(rows[i][j])
    return RegularGraph(n, q, IntMatrix(data), source=source)


def _from_edges(n, edges, source):
    rows = [[0] * n for _ in range(n)]
    for u, v in edges:
        rows[u][v] = 1
        rows[v][u] = 1
    return validate(rows, source=source)


def _utility():
    # complete bipartite 3+3
    return _from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)], "utility")


def _cube():
    edges = [
        (u, u ^ (1 << b))
        for u in range(8)
        for b in range(3)
        if u < (u ^ (1 << b))
    ]
    return _from_edges(8, edges, "cube")


_CHVATAL_EDGES = [
    (0, 1), (0, 4), (0, 6), (0, 9),
    (1, 2), (1, 5), (1, 7),
    (2, 3), (2, 6), (2, 8),
    (3, 4), (3, 7), (3, 9),
    (4, 5), (4, 8),
    (5, 10), (5, 11),
    (6, 10), (6, 11),
    (7, 8), (7, 11),
    (8, 10),
    (9, 10), (9, 11),
]


def _petersen():
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return _from_edges(10, [(min(u, v), max(u, v)) for u, v in edges], "petersen")


def _complete(k):
    if k < 3:
        raise GraphValidationError(
            "degree-too-small", f"complete({k}) is not at least 2-regular"
        )
    return _from_edges(k, [(u, v) for u in range(k) for v in range(u + 1, k)], f"complete({k})")


def _cycle(k):
    if k < 3:
        raise GraphValidationError("too-few-vertices", f"cycle({k}) needs k >= 3")
    edges = [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]
    return _from_edges(k, edges, f"cycle({k})")


_PARAMETRIC = re.compile(r"^(complete|cycle)\((\d+)\)$")


def named_graph(name):
    """A canonical graph by name.

    Known names: utility (complete bipartite 3+3), cube, chvatal, petersen,
    complete(k) for k >= 3, cycle(k) for k >= 3.
    """
    key = name.strip().lower()
    if key == "utility":
        return _utility()
    if key == "cube":
        return _cube()
    if key == "chvatal":
        return _from_edges(12, _CHVATAL_EDGES, "chvatal")
    if key == "petersen":
        return _petersen()
    m = _PARAMETRIC.match(key)
    if m:
        k = int(m.group(2))
        return _complete(k) if m.group(1) == "complete" else _cycle(k)
    raise ValueError(f"unknown graph name: {name!r}")


def random_regular(n, q, seed, max_attempts=3000):
    """Random connected (q+1)-regular simple graph via the pairing model.

    Stubs are paired uniformly at random; pairings producing loops or
    repeated edges are rejected wholesale, as are disconnected results.
    Deterministic for a fixed seed.
    """
    d = q + 1
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if n < q + 2:
        raise ValueError(f"need n >= q+2 = {q + 2} for a simple {d}-regular graph, got n={n}")
    if (n * d) % 2 != 0:
        raise ValueError(f"n*(q+1) = {n * d} is odd; no {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        rows = [[0] * n for _ in range(n)]
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or rows[u][v]:
                ok = False
                break
            rows[u][v] = 1
            rows[v][u] = 1
        if ok and _is_connected(rows, n):
            return validate(rows, source=f"random(n={n}, q={q}, seed={seed})")
    raise GraphGenerationError(
        f"no simple connected graph found in {max_attempts} pairing attempts (n={n}, q={q})"
    )


def parse_edge_list(text):
    """Parse the edge-list format into a validated graph."""
    edges = []
    seen = set()
    max_vertex = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: vertex indices must be integers: {raw!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex index: {raw!r}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop {u} {v} is not allowed")
        if u > v:
            raise ValueError(f"line {lineno}: expected u < v, got {raw!r}")
        if (u, v) in seen:
            raise ValueError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
        max_vertex = max(max_vertex, v)
    if not edges:
        raise ValueError("no edges found")
    return _from_edges(max_vertex + 1, edges, source="edge-list")


def write_edge_list(graph, header=False):
    """Render a graph in the edge-list format; inverse of parse_edge_list.

    One "u v" line per edge, sorted; with header=True a leading '#' comment
    records n and the degree.
    """
    lines = []
    if header:
        lines.append(f"# {graph.n} vertices, degree {graph.degree}")
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"
