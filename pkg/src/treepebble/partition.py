"""Maximum path partitions of directed forests and the score they carry.

A path partition splits all arcs of a forest into arc-disjoint directed
paths. Partitions are ordered by comparing their nonincreasing size
sequences at the first differing index; the greedy longest-path extraction
below produces the maximum one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import zip_longest
from typing import Sequence

from .checked import checked, pow2
from .tree import DirectedForest


@dataclass(frozen=True)
class PathPartition:
    """Arc-disjoint directed paths covering a forest, longest first.

    ``paths[i]`` is a vertex-name sequence along arcs (source first) and
    ``sizes[i]`` is its edge count; sizes are nonincreasing.
    """

    paths: tuple[tuple[str, ...], ...]
    sizes: tuple[int, ...]

    @classmethod
    def from_paths(cls, paths: Sequence[Sequence[str]]) -> "PathPartition":
        ordered = sorted((tuple(p) for p in paths), key=len, reverse=True)
        for p in ordered:
            if len(p) < 2:
                raise ValueError("a partition path needs at least one arc")
        return cls(tuple(ordered), tuple(len(p) - 1 for p in ordered))

    @property
    def path_count(self) -> int:
        return len(self.sizes)


def max_path_partition(forest: DirectedForest, rng: random.Random | None = None) -> PathPartition:
    """Greedily extract a longest remaining directed path until no arcs remain.

    The resulting size sequence majorizes the size sequence of every valid
    path partition of ``forest``. Ties between equally long candidates break
    to the lexicographically smallest vertex-name sequence; pass ``rng`` to
    randomize the tie-break instead (the size sequence does not change, only
    which paths realize it).
    """
    out = dict(forest._out)
    paths: list[tuple[str, ...]] = []
    sizes: list[int] = []
    while out:
        # longest chain length starting at each arc source
        length: dict[str, int] = {}
        for u in out:
            chase: list[str] = []
            x = u
            while x in out and x not in length:
                chase.append(x)
                x = out[x]
            base = length.get(x, 0)
            for y in reversed(chase):
                base += 1
                length[y] = base
        best = max(length.values())
        if best == 1:
            # nothing chains anymore: every remaining arc is its own path,
            # and the tie-break would emit them in sorted order one by one
            for src in sorted(out):
                paths.append((src, out[src]))
                sizes.append(1)
            out.clear()
            break
        candidates = sorted(u for u, l in length.items() if l == best)

        def walk(start: str) -> tuple[str, ...]:
            seq = [start]
            for _ in range(best):
                seq.append(out[seq[-1]])
            return tuple(seq)

        if rng is None:
            path = min(walk(u) for u in candidates)
        else:
            path = walk(rng.choice(candidates))
        for name in path[:-1]:
            del out[name]
        paths.append(path)
        sizes.append(best)
    return PathPartition(tuple(paths), tuple(sizes))


def _require_nonincreasing(seq: Sequence[int], label: str) -> None:
    for a, b in zip(seq, seq[1:]):
        if a < b:
            raise ValueError(f"{label} size sequence is not nonincreasing: {tuple(seq)}")


def majorize_cmp(x: Sequence[int], y: Sequence[int]) -> int:
    """Compare nonincreasing size sequences; 1 when ``x`` majorizes ``y``.

    The shorter sequence is padded with trailing zeros, then the sequences
    are compared at the first differing index. Returns -1, 0 or 1.
    """
    _require_nonincreasing(x, "left")
    _require_nonincreasing(y, "right")
    for a, b in zip_longest(x, y, fillvalue=0):
        if a != b:
            return 1 if a > b else -1
    return 0


def partition_score(sizes: Sequence[int], t: int) -> int:
    """t*2^{a_1} + sum_{i>=2} 2^{a_i} - n + 1, in checked 64-bit arithmetic."""
    if t < 1:
        raise ValueError("pebble target t must be at least 1")
    seq = tuple(sizes)
    if not seq:
        raise ValueError("partition score needs a nonempty size sequence")
    _require_nonincreasing(seq, "score")
    total = checked(t * pow2(seq[0], "partition score"), "partition score")
    for a in seq[1:]:
        total = checked(total + pow2(a, "partition score"), "partition score")
    return checked(total - len(seq) + 1, "partition score")
