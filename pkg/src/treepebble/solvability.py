"""Deciding whether a pebble distribution can meet a per-vertex demand.

The decision procedure works on the signed value map C = D - demand. It
collapses the tree onto a chosen root, one leaf at a time: a removed leaf
with surplus c >= 0 adds floor(c/2) to its neighbor (pebbles moved in), a
leaf in deficit c < 0 charges 2*c to its neighbor (pebbles that must be
sent out). The sign of the single remaining value answers solvability from
that root, and replaying the folds produces an explicit move sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .checked import checked
from .errors import IllegalMoveError, NotSolvableError
from .tree import Distribution, Tree, WeightFunction, _content_lines


@dataclass(frozen=True)
class PebblingMove:
    """Take two pebbles off ``src`` and put one on the adjacent ``dst``."""

    src: str
    dst: str

    def __str__(self) -> str:
        return f"{self.src} {self.dst}"


@dataclass(frozen=True)
class GeneralizedDistribution:
    """Signed per-vertex values over exactly one (sub)tree's vertex set."""

    values: Mapping[str, int]

    @classmethod
    def from_difference(
        cls, tree: Tree, dist: Distribution, weights: WeightFunction
    ) -> "GeneralizedDistribution":
        vals = _initial_values(tree, dist, weights)
        return cls({name: vals[i] for i, name in enumerate(tree.names)})

    def __getitem__(self, name: str) -> int:
        return self.values[name]


@dataclass(frozen=True)
class SolvabilityCertificate:
    """Outcome of the all-roots collapse.

    ``solvable`` holds exactly when some root's collapsed value is
    nonnegative; ``witness_root`` is the name-smallest such root.
    """

    solvable: bool
    witness_root: str | None
    hat_values: dict[str, int]


def _initial_values(tree: Tree, dist: Distribution, weights: WeightFunction) -> list[int]:
    for name in dist.support:
        tree._require(name)
    for name in weights.support:
        tree._require(name)
    return [checked(dist[name] - weights[name], "initial value") for name in tree.names]


def _rooted(tree: Tree, root: int) -> tuple[list[int], list[int]]:
    """Post-order (children in name order, root last) and parent array."""
    n = len(tree.names)
    parent = [-1] * n
    seen = [False] * n
    seen[root] = True
    order: list[int] = []
    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        for y in tree._adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)
    order.reverse()
    return order, parent


def _fold(value: int) -> int:
    return value // 2 if value >= 0 else 2 * value


def reduce_leaf(
    values: GeneralizedDistribution, tree: Tree, leaf: str
) -> tuple[Tree, GeneralizedDistribution]:
    """Delete ``leaf`` and fold its value into its unique neighbor."""
    if tree.n < 2:
        raise ValueError("cannot reduce a single-vertex tree")
    iv = tree._require(leaf)
    if len(tree._adj[iv]) != 1:
        raise ValueError(f"vertex '{leaf}' is not a leaf")
    if set(values.values) != set(tree.names):
        raise ValueError("values must be defined on exactly the tree's vertex set")
    neighbor = tree.names[tree._adj[iv][0]]
    new_values = {name: v for name, v in values.values.items() if name != leaf}
    new_values[neighbor] = checked(new_values[neighbor] + _fold(values[leaf]), "induced value")
    smaller = Tree([e for e in tree.edges if leaf not in e], (neighbor,))
    return smaller, GeneralizedDistribution(new_values)


def hat_c(tree: Tree, dist: Distribution, weights: WeightFunction, root: str) -> int:
    """Collapse the whole tree onto ``root`` and return the remaining value.

    Equivalent to reducing every leaf other than ``root`` in deterministic
    post-order until only ``root`` is left, without building the
    intermediate trees.
    """
    ir = tree._require(root)
    values = _initial_values(tree, dist, weights)
    order, parent = _rooted(tree, ir)
    for x in order[:-1]:
        values[parent[x]] = checked(values[parent[x]] + _fold(values[x]), "induced value")
    return values[ir]


def is_solvable(tree: Tree, dist: Distribution, weights: WeightFunction) -> SolvabilityCertificate:
    """Decide solvability, reporting the collapsed value at every root."""
    hats = {name: hat_c(tree, dist, weights, name) for name in tree.names}
    witness = next((name for name in tree.names if hats[name] >= 0), None)
    return SolvabilityCertificate(witness is not None, witness, hats)


def solve_witness(
    tree: Tree, dist: Distribution, weights: WeightFunction, root: str
) -> list[PebblingMove]:
    """Explicit move list that meets the demand, built from the root's collapse.

    Two phases: surplus vertices first send floor(c/2) pebbles to their
    parent in post-order (leaves inward), then deficit vertices receive
    -c pebbles from their parent in pre-order (root outward), so a parent's
    own deficit is always settled before it feeds a child. Requires the
    root's collapsed value to be nonnegative.
    """
    ir = tree._require(root)
    values = _initial_values(tree, dist, weights)
    order, parent = _rooted(tree, ir)
    fold_value = [0] * len(values)
    for x in order[:-1]:
        fold_value[x] = values[x]
        values[parent[x]] = checked(values[parent[x]] + _fold(values[x]), "induced value")
    if values[ir] < 0:
        raise NotSolvableError(
            f"root '{root}' cannot be satisfied (collapsed value {values[ir]})"
        )

    names = tree.names
    moves: list[PebblingMove] = []
    for x in order[:-1]:
        cv = fold_value[x]
        if cv >= 0 and cv // 2:
            moves.extend([PebblingMove(names[x], names[parent[x]])] * (cv // 2))

    pre: list[int] = []
    stack = [ir]
    while stack:
        x = stack.pop()
        pre.append(x)
        children = [y for y in tree._adj[x] if parent[y] == x]
        stack.extend(reversed(children))
    for x in pre:
        if x == ir:
            continue
        cv = fold_value[x]
        if cv < 0:
            moves.extend([PebblingMove(names[parent[x]], names[x])] * (-cv))
    return moves


def simulate(tree: Tree, dist: Distribution, moves: Iterable[PebblingMove]) -> Distribution:
    """Apply moves in order; each needs two pebbles on its source.

    Raises IllegalMoveError (with the offending index) on a non-adjacent
    move or an underfunded source.
    """
    counts = [0] * tree.n
    for name, k in dist.items():
        counts[tree._require(name)] = k
    for i, mv in enumerate(moves):
        iu = tree._require(mv.src)
        iv = tree._require(mv.dst)
        if iu == iv or iv not in tree._adj[iu]:
            raise IllegalMoveError(i, f"'{mv.src}' and '{mv.dst}' are not adjacent")
        if counts[iu] < 2:
            raise IllegalMoveError(i, f"source '{mv.src}' has {counts[iu]} pebbles")
        counts[iu] -= 2
        counts[iv] += 1
    return Distribution({tree.names[j]: c for j, c in enumerate(counts) if c})


def parse_moves(text: str, tree: Tree) -> list[PebblingMove]:
    """Parse ``from to`` lines into moves over ``tree``'s vertices."""
    moves: list[PebblingMove] = []
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'from to'")
        src, dst = tokens
        tree._require(src)
        tree._require(dst)
        moves.append(PebblingMove(src, dst))
    return moves


def serialize_moves(moves: Sequence[PebblingMove]) -> str:
    """Replayable ``from to`` document; empty for an empty move list."""
    if not moves:
        return ""
    return "\n".join(str(mv) for mv in moves) + "\n"
