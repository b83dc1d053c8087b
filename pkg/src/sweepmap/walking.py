"""Walks on ranked tableaux that reconstruct sweep preimages.

Each walk visits the tableau and writes a sequence of indices.  Spelling
the family's letters along that sequence -- an S letter on every top-row
index, a W on every other index -- gives the SW-word of the unique preimage
of the filled path under the sweep map.  All three walks, and the digraph
restatement of the plain one, run in time linear in the number of entries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import (
    KIND_K,
    KIND_KMINUS,
    KIND_KPLUS,
    KIND_RATIONAL,
    FamilySpec,
    PathError,
    StepSequence,
    SWWord,
    from_minus,
    from_plus,
    validate,
)
from .ranking import RankTableau, rank_tableau
from .tableau import Tableau, TableauPlus, extend_plus, fill, is_minus_admissible

VARIANTS = ("plain", "plus", "minus", "graph")


class WalkError(ValueError):
    """Raised when a walk cannot run or cannot complete on its input."""


@dataclass(frozen=True)
class SweepPermutation:
    """The order in which a walk writes the tableau indices."""

    sigma: tuple[int, ...]
    variant: str

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise WalkError(f"unknown walk variant {self.variant!r}")
        object.__setattr__(self, "sigma", tuple(int(v) for v in self.sigma))

    def __len__(self) -> int:
        return len(self.sigma)

    def __iter__(self):
        return iter(self.sigma)

    def __getitem__(self, i):
        return self.sigma[i]

    def to_json(self) -> dict:
        return {"variant": self.variant, "sigma": list(self.sigma)}


def _positions(columns) -> dict[int, tuple[int, int]]:
    """Map each entry to its (column, row) box, both 0-based."""
    pos: dict[int, tuple[int, int]] = {}
    for c, col in enumerate(columns):
        for row, v in enumerate(col):
            if v in pos:
                raise WalkError(f"entry {v} appears twice")
            pos[v] = (c, row)
    return pos


def _rank_stacks(by_index) -> dict[int, list[int]]:
    # ascending index lists per rank; popping the back yields the largest
    # unwritten index of that rank in O(1)
    stacks: dict[int, list[int]] = {}
    for v, r in enumerate(by_index, start=1):
        stacks.setdefault(r, []).append(v)
    return stacks


def walk(t: Tableau, r: RankTableau) -> SweepPermutation:
    """Plain walk.

    Start by writing the largest rank-0 entry.  From a first-row box move
    to the bottom of its column, from any other box move up one box; read
    the rank there and write the largest not-yet-written entry of that
    rank.  Stop when no such entry remains; a complete run writes every
    entry exactly once.
    """
    cols = t.columns
    size = t.size
    if len(r.by_index) != size or tuple(len(c) for c in r.columns) != tuple(
        len(c) for c in cols
    ):
        raise WalkError("rank tableau does not match the tableau's shape")
    by_index = r.by_index
    pos = _positions(cols)
    stacks = _rank_stacks(by_index)
    bucket = stacks.get(0)
    if not bucket:
        raise WalkError("no rank-0 entry to start from")
    out = []
    cur = bucket.pop()
    out.append(cur)
    while True:
        c, row = pos[cur]
        if row == 0:
            probe = cols[c][-1]  # bottom box of the column
        else:
            probe = cols[c][row - 1]  # box directly above
        bucket = stacks.get(by_index[probe - 1])
        if not bucket:
            break
        cur = bucket.pop()
        out.append(cur)
    if len(out) != size:
        raise WalkError(f"walk stopped after {len(out)} of {size} writes")
    return SweepPermutation(tuple(out), "plain")


def walk_plus(tp: TableauPlus) -> SweepPermutation:
    """Walk for the plus family.

    Entries one more than a designated bottom are flagged.  Start by
    writing 1.  From a first-row box read the designated bottom b of the
    column and write entry b+1 -- written even when b+1 is flagged.  From
    any other box step up one box; a normal entry there is written, a
    flagged entry r slides down to r-1, r-2, ... until a normal entry
    appears, and that one is written.  The walk stops when its next write
    would repeat an index, having written every entry exactly once.
    """
    cols = tp.columns
    size = tp.size
    pos = _positions(cols)
    if pos.get(1) != (0, 0):
        raise WalkError("entry 1 must top the first column")
    bottoms = tp.bottom_row
    flagged = frozenset(b + 1 for b in bottoms if (b + 1) in pos)
    written = [False] * (size + 1)
    out = [1]
    written[1] = True
    cur = 1
    for _ in range(size + 1):
        c, row = pos[cur]
        if row == 0:
            target = bottoms[c] + 1
        else:
            target = cols[c][row - 1]
            while target in flagged:
                target -= 1
        if target < 1 or target > size:
            raise WalkError(f"walk left the tableau at entry {target}")
        if written[target]:
            break
        written[target] = True
        out.append(target)
        cur = target
    else:  # pragma: no cover - the repeat check always fires first
        raise WalkError("walk failed to terminate")
    if len(out) != size:
        raise WalkError(f"walk wrote {len(out)} of {size} entries")
    return SweepPermutation(tuple(out), "plus")


def walk_minus(t: Tableau) -> SweepPermutation:
    """Walk for the minus family, the mirror image of walk_plus.

    Requires a minus-admissible tableau.  Entries one less than a bottom
    are flagged; first-row boxes jump to their column bottom b and write
    b-1 unconditionally; flagged entries reached from below slide upward
    to the next normal entry.  Exactly one entry stays unwritten.
    """
    if not is_minus_admissible(t):
        raise WalkError("tableau violates the strict top-row bounds")
    cols = t.columns
    size = t.size
    pos = _positions(cols)
    if pos.get(1) != (0, 0):
        raise WalkError("entry 1 must top the first column")
    bottoms = t.bottom_row
    flagged = frozenset(b - 1 for b in bottoms if (b - 1) in pos)
    written = [False] * (size + 1)
    out = [1]
    written[1] = True
    cur = 1
    for _ in range(size + 1):
        c, row = pos[cur]
        if row == 0:
            target = bottoms[c] - 1
        else:
            target = cols[c][row - 1]
            while target in flagged:
                target += 1
        if target < 1 or target > size:
            raise WalkError(f"walk left the tableau at entry {target}")
        if written[target]:
            break
        written[target] = True
        out.append(target)
        cur = target
    else:  # pragma: no cover - the repeat check always fires first
        raise WalkError("walk failed to terminate")
    if len(out) != size - 1:
        raise WalkError(f"walk wrote {len(out)} of the expected {size - 1} entries")
    return SweepPermutation(tuple(out), "minus")


@dataclass(frozen=True)
class RankDigraph:
    """One edge per tableau index, between ranks.

    A top-row index of rank a in a column of rise k contributes the edge
    a -> a+k; every other index of rank b contributes b -> b-1.  Vertex r
    owns the ascending list indices_by_rank[r] of indices at rank r.
    """

    edge_target: tuple[int, ...]  # edge_target[i-1] = target rank of index i
    rank_of: tuple[int, ...]
    indices_by_rank: tuple[tuple[int, ...], ...]
    top_indices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.edge_target)

    def balance(self) -> dict[int, tuple[int, int, int]]:
        """Per-vertex (in-degree, out-degree, #indices at the rank)."""
        n_ranks = len(self.indices_by_rank)
        indeg = [0] * n_ranks
        outdeg = [0] * n_ranks
        for v, tgt in enumerate(self.edge_target, start=1):
            outdeg[self.rank_of[v - 1]] += 1
            indeg[tgt] += 1
        return {
            r: (indeg[r], outdeg[r], len(self.indices_by_rank[r]))
            for r in range(n_ranks)
        }

    @property
    def is_balanced(self) -> bool:
        return all(i == o == s for i, o, s in self.balance().values())


def build_rank_digraph(t: Tableau, r: RankTableau) -> RankDigraph:
    """The rank digraph of a ranked tableau."""
    by_index = r.by_index
    size = t.size
    if len(by_index) != size:
        raise WalkError("rank tableau does not match the tableau's shape")
    top_of = dict(zip(t.top_row, t.k))
    max_rank = max(by_index)
    targets = []
    for v in range(1, size + 1):
        rv = by_index[v - 1]
        if v in top_of:
            tgt = rv + top_of[v]
        else:
            tgt = rv - 1
        if tgt < 0 or tgt > max_rank:
            raise WalkError(f"edge of index {v} leaves the rank range")
        targets.append(tgt)
    by_rank: list[list[int]] = [[] for _ in range(max_rank + 1)]
    for v, rv in enumerate(by_index, start=1):
        by_rank[rv].append(v)
    return RankDigraph(
        tuple(targets),
        tuple(by_index),
        tuple(tuple(s) for s in by_rank),
        frozenset(top_of),
    )


def walk_graph(g: RankDigraph) -> SweepPermutation:
    """The plain walk restated on the rank digraph.

    Mark the largest index at rank 0, then repeatedly follow the edge of
    the just-marked index and mark the largest unmarked index at the target
    rank, stopping when that rank is exhausted.
    """
    stacks = [list(s) for s in g.indices_by_rank]
    if not stacks or not stacks[0]:
        raise WalkError("no rank-0 index to start from")
    out = [stacks[0].pop()]
    while True:
        tgt = g.edge_target[out[-1] - 1]
        bucket = stacks[tgt]
        if not bucket:
            break
        out.append(bucket.pop())
    if len(out) != g.size:
        raise WalkError(f"walk stopped after {len(out)} of {g.size} writes")
    return SweepPermutation(tuple(out), "graph")


_VARIANTS_FOR_KIND = {
    KIND_K: ("plain", "graph"),
    KIND_KPLUS: ("plus",),
    KIND_KMINUS: ("minus",),
}


def sigma_to_preimage(
    sigma: SweepPermutation, t: Tableau, family: FamilySpec
) -> StepSequence:
    """Spell the preimage path along a walk's output.

    Position j of the word gets the family's scaled S letter of column i
    when sigma[j] is the top index t_i, and a W letter otherwise.  The
    result is validated against the permutation-closed family.
    """
    if family.kind == KIND_RATIONAL:
        raise PathError("rational paths have no walk-based preimage")
    allowed = _VARIANTS_FOR_KIND[family.kind]
    if sigma.variant not in allowed:
        raise WalkError(
            f"variant {sigma.variant!r} does not fit family kind {family.kind!r}"
        )
    k = t.k
    n = len(k)
    if sorted(k) != sorted(family.k):
        raise WalkError("tableau heights do not permute the family's rise vector")
    if family.kind == KIND_K:
        rises = k
        drop = 1
        expected_len = t.size
    elif family.kind == KIND_KPLUS:
        rises = tuple(n * v + 1 for v in k)
        drop = n
        expected_len = t.size + 1
    else:
        rises = tuple(n * v - 1 for v in k)
        drop = n
        expected_len = t.size - 1
    if len(sigma) != expected_len:
        raise WalkError(f"expected {expected_len} writes, got {len(sigma)}")
    rise_at = dict(zip(t.top_row, rises))
    letters = []
    for v in sigma:
        rise = rise_at.get(v)
        letters.append(("S", rise) if rise is not None else ("W", drop))
    out = SWWord(tuple(letters)).steps()
    d = validate(out, family, permute_k=True)
    if not d:
        raise WalkError(f"reconstruction is not a valid family member: {d}")
    return out


def invert(steps: StepSequence, family: FamilySpec) -> StepSequence:
    """The unique sweep preimage of a path, by fill, rank, and walk.

    Accepts any member of the permutation-closed family.  Plus and minus
    paths are unscaled to their underlying plain path before filling; minus
    inversion additionally needs the filled tableau to be minus-admissible,
    which holds exactly when that underlying path returns to level zero
    only once.
    """
    if family.kind == KIND_RATIONAL:
        raise PathError("inversion is not available for rational paths")
    d = validate(steps, family, permute_k=True)
    if not d:
        raise PathError(f"not a member of the family: {d}")
    if family.kind == KIND_K:
        skeleton = steps
    elif family.kind == KIND_KPLUS:
        skeleton = from_plus(steps)
    else:
        skeleton = from_minus(steps)
    t = fill(SWWord.from_steps(skeleton))
    if family.kind == KIND_K:
        sigma = walk(t, rank_tableau(t))
    elif family.kind == KIND_KPLUS:
        sigma = walk_plus(extend_plus(t))
    else:
        sigma = walk_minus(t)
    return sigma_to_preimage(sigma, t, family)
