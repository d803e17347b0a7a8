"""Named graph families, the graph-spec mini-language and edge-list files.

Spec grammar (whitespace-insensitive)::

    spec := family ':' int (',' int)* | 'petersen' | 'file:' path

Labelling conventions:

* path:n          vertices 1..n in order
* cycle:n         1..n around the cycle
* star:n          K_{1,n}, centre is vertex 1
* bipartite:m,n   parts {1..m} and {m+1..m+n}
* npartite:a,b,.. consecutive blocks of sizes a, b, ...
* friendship:k    k triangles {2t-1, 2t, 2k+1}; hub is vertex 2k+1
* wheel:n         rim cycle 1..n-1, hub is vertex n
* tree:d,L        homogeneous tree T_d cut at depth L, breadth-first order,
                  root = 1.  Flagged approximate (leaves have degree 1).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .algebra import Graph
from .errors import IngestionError, SpecError

MAX_VERTICES = 10**6

FAMILIES = (
    "complete", "path", "cycle", "star", "bipartite", "npartite",
    "friendship", "wheel", "petersen", "tree", "file",
)

# family -> (min params, max params)
_ARITY = {
    "complete": (1, 1),
    "path": (1, 1),
    "cycle": (1, 1),
    "star": (1, 1),
    "bipartite": (2, 2),
    "npartite": (2, None),
    "friendship": (1, 1),
    "wheel": (1, 1),
    "petersen": (0, 0),
    "tree": (2, 2),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()
    path: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpecError(f"unknown family {self.family!r}")
        if self.family == "file":
            if not self.path:
                raise SpecError("file spec needs a path")
            return
        lo, hi = _ARITY[self.family]
        k = len(self.params)
        if k < lo or (hi is not None and k > hi):
            want = f"exactly {lo}" if lo == hi else f"at least {lo}"
            raise SpecError(f"{self.family} takes {want} parameter(s), got {k}")
        for p in self.params:
            if not isinstance(p, int) or p < 1:
                raise SpecError(f"{self.family} parameters must be positive integers, got {p!r}")

    @property
    def approximate(self) -> bool:
        return self.family == "tree"


def render_spec(spec: FamilySpec) -> str:
    if spec.family == "file":
        return f"file:{spec.path}"
    if spec.family == "petersen":
        return "petersen"
    return f"{spec.family}:" + ",".join(str(p) for p in spec.params)


_WORD = re.compile(r"[A-Za-z_]+")
_INT = re.compile(r"[+-]?\d+")


def parse_graph_spec(text: str) -> FamilySpec:
    """Parse ``"bipartite:6,4"``-style text into a :class:`FamilySpec`."""
    i = 0
    n = len(text)

    def skip_ws():
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    skip_ws()
    m = _WORD.match(text, i)
    if not m:
        raise SpecError(f"expected a family name in {text!r}", i)
    family = m.group(0).lower()
    if family not in FAMILIES:
        raise SpecError(f"unknown family {family!r}", i)
    i = m.end()
    skip_ws()
    if family == "petersen":
        if i != n:
            raise SpecError("petersen takes no parameters", i)
        return FamilySpec("petersen")
    if i >= n or text[i] != ":":
        raise SpecError(f"expected ':' after {family!r}", i)
    i += 1
    if family == "file":
        path = text[i:].strip()
        if not path:
            raise SpecError("missing path after 'file:'", i)
        return FamilySpec("file", path=path)
    params = []
    while True:
        skip_ws()
        m = _INT.match(text, i)
        if not m:
            raise SpecError(f"expected an integer parameter in {text!r}", i)
        value = int(m.group(0))
        if value < 1:
            raise SpecError(f"parameter must be a positive integer, got {value}", i)
        params.append(value)
        i = m.end()
        skip_ws()
        if i == n:
            break
        if text[i] != ",":
            raise SpecError(f"unexpected {text[i]!r} in {text!r}", i)
        i += 1
    try:
        return FamilySpec(family, tuple(params))
    except SpecError as exc:
        raise SpecError(str(exc), 0) from None


def family_vertex_count(spec: FamilySpec) -> int:
    f, p = spec.family, spec.params
    if f in ("complete", "path", "cycle", "wheel"):
        return p[0]
    if f == "star":
        return p[0] + 1
    if f in ("bipartite", "npartite"):
        return sum(p)
    if f == "friendship":
        return 2 * p[0] + 1
    if f == "petersen":
        return 10
    if f == "tree":
        d, depth = p
        count, level = 1, d + 1
        for _ in range(depth):
            count += level
            level *= d
            if count > MAX_VERTICES:
                break
        return count
    raise SpecError(f"no vertex count for {f}")


def _multipartite_edges(sizes):
    blocks = []
    start = 1
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    for a, b in combinations(blocks, 2):
        for u in a:
            for v in b:
                yield u, v


def build_family(spec: FamilySpec) -> Graph:
    if spec.family == "file":
        return load_edge_list(spec.path)
    f, p = spec.family, spec.params
    n = family_vertex_count(spec)
    if n > MAX_VERTICES:
        raise SpecError(f"{render_spec(spec)} has {n} vertices (limit {MAX_VERTICES})")
    name = render_spec(spec)
    if f == "complete":
        edges = combinations(range(1, n + 1), 2)
    elif f == "path":
        edges = ((i, i + 1) for i in range(1, n))
    elif f == "cycle":
        if n < 3:
            raise SpecError("cycle needs at least 3 vertices")
        edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    elif f == "star":
        edges = ((1, v) for v in range(2, n + 1))
    elif f in ("bipartite", "npartite"):
        edges = _multipartite_edges(p)
    elif f == "friendship":
        k = p[0]
        hub = 2 * k + 1
        edges = []
        for t in range(1, k + 1):
            a, b = 2 * t - 1, 2 * t
            edges += [(a, b), (a, hub), (b, hub)]
    elif f == "wheel":
        if n < 4:
            raise SpecError("wheel needs at least 4 vertices")
        rim = n - 1
        edges = [(i, i % rim + 1) for i in range(1, rim + 1)] + [(i, n) for i in range(1, rim + 1)]
    elif f == "petersen":
        edges = [(i, i % 5 + 1) for i in range(1, 6)]
        edges += [(i, i + 5) for i in range(1, 6)]
        edges += [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    elif f == "tree":
        d, depth = p
        edges = []
        frontier = [1]
        nxt = 2
        for level in range(depth):
            new = []
            for v in frontier:
                for _ in range(d + 1 if level == 0 else d):
                    edges.append((v, nxt))
                    new.append(nxt)
                    nxt += 1
            frontier = new
    else:  # pragma: no cover - guarded by FamilySpec
        raise SpecError(f"unknown family {f}")
    return Graph.from_edges(n, edges, name=name, approximate=spec.approximate)


def build_graph(text: str) -> Graph:
    return build_family(parse_graph_spec(text))


def load_edge_list(path) -> Graph:
    """Read ``u v`` lines (1-based, ``#`` comments, ``u == v`` is a loop)."""
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise IngestionError(f"cannot read {path}: {exc.strerror or exc}") from None
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        if len(body) != 2:
            raise IngestionError(f"expected two vertex indices, got {len(body)} tokens", lineno)
        try:
            u, v = int(body[0]), int(body[1])
        except ValueError:
            raise IngestionError(f"non-integer token in {raw.strip()!r}", lineno) from None
        if u < 1 or v < 1:
            raise IngestionError(f"vertex index must be >= 1, got {min(u, v)}", lineno)
        edges.append((u, v))
    if not edges:
        raise IngestionError(f"{path} contains no edges")
    n = max(max(e) for e in edges)
    if n > MAX_VERTICES:
        raise IngestionError(f"vertex index {n} exceeds limit {MAX_VERTICES}")
    return Graph.from_edges(n, edges, name=f"file:{path}")
