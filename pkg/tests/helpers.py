"""Shared test machinery: tree families, random instances, reference folds.

Everything here is deliberately independent of the package internals it is
used to check; trees are built through the public constructors only.
"""

from __future__ import annotations

import heapq
import itertools
import random
from functools import lru_cache

from treepebble import Distribution, Tree, WeightFunction


def tree(text: str) -> Tree:
    """Parse a compact ';'-separated edge list, e.g. ``"a b;b c"``."""
    from treepebble import parse_tree

    return parse_tree(text.replace(";", "\n"))


def decode_pruefer(sequence: tuple[int, ...], names: list[str]) -> Tree:
    n = len(names)
    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((names[leaf], names[x]))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((names[heapq.heappop(leaves)], names[heapq.heappop(leaves)]))
    return Tree(edges)


def canonical_shape(t: Tree):
    """AHU canonical form rooted at the tree center(s); equal iff isomorphic."""
    adj = {v: set(t.neighbors(v)) for v in t.names}
    remaining = set(t.names)
    layer = [v for v in t.names if len(adj[v]) <= 1]
    while len(remaining) > 2:
        next_layer = []
        for v in layer:
            remaining.discard(v)
            for u in adj[v]:
                adj[u].discard(v)
                if u in remaining and len(adj[u]) == 1:
                    next_layer.append(u)
        layer = next_layer

    def ahu(v, parent):
        return tuple(sorted(ahu(u, v) for u in t.neighbors(v) if u != parent))

    return min(ahu(c, None) for c in sorted(remaining))


@lru_cache(maxsize=None)
def all_unlabeled_trees(max_n: int) -> tuple[Tree, ...]:
    """One representative per isomorphism class, for every size up to max_n."""
    trees: list[Tree] = []
    for n in range(1, max_n + 1):
        names = [f"v{i}" for i in range(1, n + 1)]
        if n == 1:
            candidates = [Tree((), names)]
        elif n == 2:
            candidates = [Tree([(names[0], names[1])])]
        else:
            candidates = [
                decode_pruefer(seq, names)
                for seq in itertools.product(range(n), repeat=n - 2)
            ]
        seen: dict = {}
        for t in candidates:
            seen.setdefault(canonical_shape(t), t)
        trees.extend(seen.values())
    return tuple(trees)


def weight_functions(t: Tree, max_entry: int = 2, max_total: int = 4):
    """Every demand map with entries up to max_entry, 1 <= total <= max_total."""
    for combo in itertools.product(range(max_entry + 1), repeat=t.n):
        total = sum(combo)
        if 1 <= total <= max_total:
            yield WeightFunction({v: k for v, k in zip(t.names, combo) if k})


def random_distribution(t: Tree, size: int, rng: random.Random) -> Distribution:
    counts: dict[str, int] = {}
    for _ in range(size):
        v = rng.choice(t.names)
        counts[v] = counts.get(v, 0) + 1
    return Distribution(counts)


def random_weights(t: Tree, total: int, rng: random.Random) -> WeightFunction:
    counts: dict[str, int] = {}
    for _ in range(total):
        v = rng.choice(t.names)
        counts[v] = counts.get(v, 0) + 1
    return WeightFunction(counts)


def random_path_partition(forest, rng: random.Random) -> list[list[str]]:
    """A uniform-ish valid path partition: arc-disjoint directed paths covering all arcs."""
    out = {src: dst for src, dst in forest.arcs}
    incoming: dict[str, list[str]] = {}
    for src, dst in forest.arcs:
        incoming.setdefault(dst, []).append(src)
    remaining = set(out)
    paths: list[list[str]] = []
    while remaining:
        start = rng.choice(sorted(remaining))
        remaining.discard(start)
        path = [start, out[start]]
        while path[-1] in remaining and rng.random() < 0.7:
            src = path[-1]
            remaining.discard(src)
            path.append(out[src])
        while rng.random() < 0.5:
            predecessors = [p for p in incoming.get(path[0], ()) if p in remaining]
            if not predecessors:
                break
            p = rng.choice(sorted(predecessors))
            remaining.discard(p)
            path.insert(0, p)
        paths.append(path)
    return paths


def fold_hat_random_order(
    t: Tree, dist: Distribution, weights: WeightFunction, root: str, rng: random.Random
) -> int:
    """Collapse onto root eliminating random leaves, with an independent fold."""
    adj = {v: set(t.neighbors(v)) for v in t.names}
    values = {v: dist[v] - weights[v] for v in t.names}
    alive = set(t.names)
    while len(alive) > 1:
        leaves = sorted(v for v in alive if len(adj[v]) == 1 and v != root)
        v = rng.choice(leaves)
        (u,) = adj[v]
        c = values.pop(v)
        values[u] += c // 2 if c >= 0 else 2 * c
        adj[u].discard(v)
        del adj[v]
        alive.discard(v)
    return values[root]
