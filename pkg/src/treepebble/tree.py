"""Undirected trees on named vertices, and the text formats that carry them.

Vertices are arbitrary non-whitespace name tokens. Names map to dense
indices in sorted-name order, and every iteration order in this package is
sorted-by-name, so all derived output is deterministic. Trees and the value
maps defined on them are immutable after construction; every operation is a
pure function of its inputs and safe to share across threads.

File formats (UTF-8, newline separated, full-line '#' comments):

* tree documents: one edge ``u v`` per line; a bare name on a line declares
  an isolated vertex (only useful for the single-vertex tree).
* vertex-valued maps (weights, distributions): lines ``v k`` with ``k`` a
  nonnegative decimal integer; vertices absent from the file take value 0.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping, Union

from .errors import TreeFormatError, UnknownVertexError


def _check_name(name: str) -> str:
    if not isinstance(name, str) or not name:
        raise TreeFormatError(f"vertex name must be a nonempty string, got {name!r}")
    if any(ch.isspace() for ch in name):
        raise TreeFormatError(f"vertex name {name!r} contains whitespace")
    if name.startswith("#"):
        raise TreeFormatError(f"vertex name {name!r} starts with '#' (reserved for comments)")
    return name


class Tree:
    """An immutable undirected tree.

    Attributes:
        names: all vertex names, sorted.
        index: name -> dense index (the position in ``names``).
        edges: unordered edges as ``(u, v)`` pairs with ``u < v``, sorted.
    """

    __slots__ = ("names", "index", "edges", "_adj")

    def __init__(self, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()):
        norm: list[tuple[str, str]] = []
        names: set[str] = set()
        seen: set[tuple[str, str]] = set()
        for u, v in edges:
            _check_name(u)
            _check_name(v)
            if u == v:
                raise TreeFormatError(f"self-loop at vertex '{u}'")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise TreeFormatError(f"duplicate edge {pair[0]} {pair[1]}")
            seen.add(pair)
            norm.append(pair)
            names.add(u)
            names.add(v)
        for v in vertices:
            names.add(_check_name(v))
        if not names:
            raise TreeFormatError("empty input: a tree needs at least one vertex")

        self.names: tuple[str, ...] = tuple(sorted(names))
        self.index: dict[str, int] = {name: i for i, name in enumerate(self.names)}
        self.edges: tuple[tuple[str, str], ...] = tuple(sorted(norm))

        adj: list[list[int]] = [[] for _ in self.names]
        for u, v in self.edges:
            iu, iv = self.index[u], self.index[v]
            adj[iu].append(iv)
            adj[iv].append(iu)
        # sorted names make index order equal name order
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

        if not self._connected():
            raise TreeFormatError("edges do not form a connected graph (disconnected)")
        if len(self.edges) != len(self.names) - 1:
            raise TreeFormatError("cycle detected: edge count exceeds vertex count - 1")

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.names)

    def has_vertex(self, name: str) -> bool:
        return name in self.index

    def _require(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex '{name}'") from None

    def neighbors(self, name: str) -> tuple[str, ...]:
        return tuple(self.names[j] for j in self._adj[self._require(name)])

    def degree(self, name: str) -> int:
        return len(self._adj[self._require(name)])

    def leaves(self) -> tuple[str, ...]:
        """Degree-1 vertices in name order; a single-vertex tree is its own leaf."""
        if len(self.names) == 1:
            return self.names
        return tuple(name for i, name in enumerate(self.names) if len(self._adj[i]) == 1)

    # -- distances -----------------------------------------------------

    def _bfs(self, start: int) -> list[int]:
        dist = [-1] * len(self.names)
        dist[start] = 0
        queue: deque[int] = deque((start,))
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def _connected(self) -> bool:
        return all(d >= 0 for d in self._bfs(0))

    def _parents(self, root: int) -> list[int]:
        parent = [-1] * len(self.names)
        parent[root] = root
        queue: deque[int] = deque((root,))
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if parent[y] < 0:
                    parent[y] = x
                    queue.append(y)
        return parent

    def distance(self, u: str, v: str) -> int:
        """Number of edges on the unique u-v path."""
        iu, iv = self._require(u), self._require(v)
        if iu == iv:
            return 0
        return self._bfs(iu)[iv]

    def distances_from(self, v: str) -> dict[str, int]:
        """Distance from ``v`` to every vertex, keyed by name."""
        row = self._bfs(self._require(v))
        return {name: row[i] for i, name in enumerate(self.names)}

    # -- subtrees and orientations --------------------------------------

    def minimal_subtree(self, v: str, others: Iterable[str] = ()) -> "Tree":
        """Smallest connected subtree containing ``v`` and all of ``others``.

        With no extra vertices this is the single-vertex tree on ``v``.
        """
        iv = self._require(v)
        targets = sorted({self._require(u) for u in others})
        if not targets:
            return Tree((), (v,))
        parent = self._parents(iv)
        keep: set[int] = {iv}
        for it in targets:
            x = it
            while x not in keep:
                keep.add(x)
                x = parent[x]
        edges = []
        for x in keep:
            if x == iv:
                continue
            p = parent[x]
            a, b = self.names[x], self.names[p]
            edges.append((a, b) if a < b else (b, a))
        return Tree(edges, (v,))

    def orient_toward(self, sink: Union["Tree", Iterable[str]]) -> "DirectedForest":
        """Direct every edge outside ``sink`` one step along its path into ``sink``.

        ``sink`` may be a Tree (a subtree of this one) or a collection of
        vertex names inducing a connected subtree.
        """
        if isinstance(sink, Tree):
            sink_names = set(sink.names)
            edge_set = set(self.edges)
            for name in sink.names:
                self._require(name)
            for e in sink.edges:
                if e not in edge_set:
                    raise ValueError(f"sink edge {e[0]} {e[1]} is not an edge of the tree")
        else:
            sink_names = {name for name in sink}
            if not sink_names:
                raise ValueError("sink must contain at least one vertex")
            for name in sink_names:
                self._require(name)

        idxs = {self.index[s] for s in sink_names}
        # connectivity of the induced sink inside this tree
        first = min(idxs)
        reached = {first}
        queue: deque[int] = deque((first,))
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y in idxs and y not in reached:
                    reached.add(y)
                    queue.append(y)
        if reached != idxs:
            raise ValueError("sink is not connected inside the tree")

        arcs: list[tuple[str, str]] = []
        visited = set(idxs)
        queue = deque(sorted(idxs))
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in visited:
                    visited.add(y)
                    arcs.append((self.names[y], self.names[x]))
                    queue.append(y)
        return DirectedForest(self, arcs, sorted(sink_names))

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.names == other.names and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.names, self.edges))

    def __repr__(self) -> str:
        return f"Tree({len(self.names)} vertices, {len(self.edges)} edges)"


class DirectedForest:
    """Arcs of a host tree, each pointing one step toward a sink subtree.

    No vertex has two outgoing arcs, and following arcs from any vertex
    always ends inside ``sinks``.
    """

    __slots__ = ("tree", "arcs", "sinks", "_out")

    def __init__(self, tree: Tree, arcs: Iterable[tuple[str, str]], sinks: Iterable[str]):
        self.tree = tree
        self.arcs: tuple[tuple[str, str], ...] = tuple(sorted((a, b) for a, b in arcs))
        self.sinks: tuple[str, ...] = tuple(sorted(sinks))
        edge_set = set(tree.edges)
        sink_set = set(self.sinks)
        for name in self.sinks:
            tree._require(name)
        out: dict[str, str] = {}
        for src, dst in self.arcs:
            tree._require(src)
            tree._require(dst)
            pair = (src, dst) if src < dst else (dst, src)
            if pair not in edge_set:
                raise ValueError(f"arc {src}->{dst} is not over an edge of the host tree")
            if src in out:
                raise ValueError(f"vertex '{src}' has two outgoing arcs")
            if src in sink_set:
                raise ValueError(f"sink vertex '{src}' has an outgoing arc")
            out[src] = dst
        # every chain must terminate in the sink set
        settled: set[str] = set(sink_set)
        for src in out:
            chain: list[str] = []
            on_chain: set[str] = set()
            x = src
            while x not in settled:
                if x in on_chain:
                    raise ValueError("arcs contain a directed cycle")
                if x not in out:
                    raise ValueError(f"arc chain from '{src}' dead-ends outside the sinks")
                chain.append(x)
                on_chain.add(x)
                x = out[x]
            settled.update(chain)
        self._out = out

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def out_neighbor(self, name: str) -> str | None:
        """Target of the unique outgoing arc of ``name``, or None."""
        return self._out.get(name)

    def __repr__(self) -> str:
        return f"DirectedForest({len(self.arcs)} arcs -> {{{', '.join(self.sinks)}}})"


class _VertexValues:
    """Sparse nonnegative per-vertex integers; absent vertices count as 0."""

    __slots__ = ("_values",)
    kind = "value"

    def __init__(self, values: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = values.items() if isinstance(values, Mapping) else values
        store: dict[str, int] = {}
        for name, count in items:
            if not isinstance(count, int) or isinstance(count, bool):
                raise ValueError(f"{self.kind} for '{name}' must be an integer, got {count!r}")
            if count < 0:
                raise ValueError(f"negative {self.kind} for '{name}'")
            if count:
                store[name] = store.get(name, 0) + count
        self._values = store

    def __getitem__(self, name: str) -> int:
        return self._values.get(name, 0)

    def items(self) -> tuple[tuple[str, int], ...]:
        return tuple(sorted(self._values.items()))

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(sorted(self._values))

    @property
    def total(self) -> int:
        return sum(self._values.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _VertexValues):
            return NotImplemented
        return type(self) is type(other) and self._values == other._values

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self.items())
        return f"{type(self).__name__}({{{inner}}})"


class WeightFunction(_VertexValues):
    """Per-vertex demand: how many pebbles each vertex must end up holding."""

    kind = "demand"


class Distribution(_VertexValues):
    """Pebbles currently sitting on each vertex."""

    kind = "pebble count"

    @property
    def size(self) -> int:
        return self.total

    def dominates(self, demand: WeightFunction) -> bool:
        """True when this distribution meets the demand pointwise."""
        return all(self[name] >= k for name, k in demand.items())


# -- document parsing and serialization ---------------------------------


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_tree(text: str) -> Tree:
    """Parse an edge-list document into a Tree.

    Raises TreeFormatError on duplicate edges, self-loops, cycles,
    disconnected input, or an empty document.
    """
    edges: list[tuple[str, str]] = []
    seen: set[frozenset[str]] = set()
    singles: list[str] = []
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) == 1:
            singles.append(tokens[0])
            continue
        if len(tokens) != 2:
            raise TreeFormatError(
                f"line {lineno}: expected 'u v' or a bare vertex name, got {len(tokens)} tokens"
            )
        u, v = tokens
        if u == v:
            raise TreeFormatError(f"line {lineno}: self-loop at vertex '{u}'")
        key = frozenset((u, v))
        if key in seen:
            raise TreeFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    if not edges and not singles:
        raise TreeFormatError("empty input: no vertices declared")
    return Tree(edges, singles)


def serialize_tree(tree: Tree) -> str:
    """Edge-list document for ``tree``; reparsing yields an equal tree."""
    lines = [f"{u} {v}" for u, v in tree.edges]
    connected = {x for e in tree.edges for x in e}
    lines.extend(name for name in tree.names if name not in connected)
    return "\n".join(lines) + "\n"


def tree_id(tree: Tree) -> str:
    """One-line canonical identifier (the serialized edge list, ';'-joined)."""
    return serialize_tree(tree).strip().replace("\n", ";")


def parse_vertex_map(text: str, tree: Tree) -> dict[str, int]:
    """Parse ``v k`` lines into a name -> nonnegative int map over ``tree``."""
    values: dict[str, int] = {}
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise TreeFormatError(f"line {lineno}: expected 'vertex count'")
        name, raw = tokens
        tree._require(name)
        if name in values:
            raise TreeFormatError(f"line {lineno}: duplicate entry for vertex '{name}'")
        try:
            count = int(raw, 10)
        except ValueError:
            raise TreeFormatError(f"line {lineno}: '{raw}' is not a decimal integer") from None
        if count < 0:
            raise TreeFormatError(f"line {lineno}: negative count for vertex '{name}'")
        values[name] = count
    return values


def parse_weights(text: str, tree: Tree) -> WeightFunction:
    return WeightFunction(parse_vertex_map(text, tree))


def parse_distribution(text: str, tree: Tree) -> Distribution:
    return Distribution(parse_vertex_map(text, tree))
