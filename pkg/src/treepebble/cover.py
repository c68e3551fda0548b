"""Closed-form pebbling numbers of trees.

``t_pebbling_number`` prices delivering k pebbles to a single vertex;
``cover_pebbling_number`` prices meeting a whole nonnegative demand map at
once. Both reduce to scores over maximum path partitions of oriented
forests, and ``extremal_distribution`` realizes the matching lower bound
with an unsolvable distribution one pebble short.
"""

from __future__ import annotations

from dataclasses import dataclass

from .checked import checked, pow2
from .partition import PathPartition, max_path_partition, partition_score
from .tree import Distribution, Tree, WeightFunction


@dataclass(frozen=True)
class TPebblingResult:
    value: int
    partition: PathPartition


@dataclass(frozen=True)
class CoverResult:
    """Cover pebbling number with its per-vertex score table.

    ``argmax_root`` is the name-smallest vertex attaining ``gamma``; it is
    None only in the degenerate empty-demand case, where ``gamma`` is 0 and
    the table is empty.
    """

    gamma: int
    argmax_root: str | None
    per_vertex_s: dict[str, int]


def t_pebbling_number(tree: Tree, v: str, k: int = 1) -> TPebblingResult:
    """Minimum pebble count that guarantees moving ``k`` pebbles onto ``v``.

    Orients every edge toward ``v`` and scores the maximum path partition.
    A single-vertex tree needs exactly ``k`` pebbles.
    """
    if k < 1:
        raise ValueError("pebble target k must be at least 1")
    tree._require(v)
    part = max_path_partition(tree.orient_toward((v,)))
    if not part.sizes:
        return TPebblingResult(k, part)
    return TPebblingResult(partition_score(part.sizes, k), part)


def t_pebbling_global(tree: Tree, k: int = 1) -> tuple[int, str]:
    """Worst-case target: max of ``t_pebbling_number`` with its argmax vertex."""
    best_value = -1
    best_root = tree.names[0]
    for name in tree.names:
        value = t_pebbling_number(tree, name, k).value
        if value > best_value:
            best_value = value
            best_root = name
    return best_value, best_root


def _demand_term(tree: Tree, weights: WeightFunction, v: str) -> int:
    dist = tree.distances_from(v)
    total = 0
    for u in weights.support:
        total = checked(
            total + checked(weights[u] * pow2(dist[u], "demand term"), "demand term"),
            "cover score",
        )
    return total


def s_omega_at(tree: Tree, weights: WeightFunction, v: str) -> int:
    """Score of root ``v``: demand cost by distance plus the remainder charge.

    The remainder forest is everything outside the minimal subtree spanning
    ``v`` and the demand support, oriented toward it; each path of its
    maximum partition contributes 2^size - 1.
    """
    if not weights.support:
        raise ValueError("demand has empty support")
    tree._require(v)
    sink = tree.minimal_subtree(v, weights.support)
    part = max_path_partition(tree.orient_toward(sink))
    total = _demand_term(tree, weights, v)
    for a in part.sizes:
        total = checked(total + pow2(a, "remainder term") - 1, "cover score")
    return total


def cover_pebbling_number(tree: Tree, weights: WeightFunction) -> CoverResult:
    """Minimum N so that every N-pebble distribution can meet the demand.

    An all-zero demand is degenerate: every distribution already meets it,
    so gamma is 0 and no score table is produced.
    """
    if not weights.support:
        return CoverResult(0, None, {})
    table = {name: s_omega_at(tree, weights, name) for name in tree.names}
    gamma = max(table.values())
    argmax = next(name for name in tree.names if table[name] == gamma)
    return CoverResult(gamma, argmax, table)


def extremal_distribution(tree: Tree, weights: WeightFunction) -> Distribution:
    """Unsolvable distribution of size gamma - 1 witnessing the lower bound.

    At the argmax root: each remainder path gets 2^size - 1 pebbles on its
    source endpoint, and the root gets the demand term minus one.
    """
    if not weights.support:
        raise ValueError("demand has empty support")
    result = cover_pebbling_number(tree, weights)
    root = result.argmax_root
    assert root is not None
    sink = tree.minimal_subtree(root, weights.support)
    part = max_path_partition(tree.orient_toward(sink))
    counts: dict[str, int] = {}
    for path, a in zip(part.paths, part.sizes):
        source = path[0]
        counts[source] = counts.get(source, 0) + pow2(a, "extremal pile") - 1
    counts[root] = counts.get(root, 0) + _demand_term(tree, weights, root) - 1
    return Distribution(counts)
