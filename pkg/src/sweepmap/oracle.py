"""Exhaustive ground truth for small instances.

Enumerates whole families by depth-first search, inverts the sweep map by
brute-force lookup over a family's permutation closure, and certifies that
the sweep restricted to the closure is a bijection.  Everything here is
deliberately independent of the walk-based inversion so the two can check
each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .paths import KIND_RATIONAL, FamilySpec, StepSequence, emit_steps
from .sweep import sweep

DEFAULT_MAX_N = 5
DEFAULT_MAX_K = 4


class OracleError(ValueError):
    """Raised for exceeded bounds or impossible preimage requests."""


@dataclass(frozen=True)
class FamilyEnumeration:
    """Every path of a family (or its permutation closure), in DFS order."""

    family: FamilySpec
    permuted: bool
    paths: tuple[StepSequence, ...]
    counts: dict[tuple[int, ...], int]  # paths per rise-vector ordering

    @property
    def count(self) -> int:
        return len(self.paths)

    def to_json(self) -> dict:
        return {
            "family": self.family.to_json(),
            "permuted": self.permuted,
            "count": self.count,
            "counts": {
                ",".join(str(v) for v in key): c for key, c in self.counts.items()
            },
            "paths": [list(p) for p in self.paths],
        }


def _check_bounds(family: FamilySpec, max_n: int, max_k: int) -> None:
    if family.kind == KIND_RATIONAL:
        raise OracleError("rational families are not enumerable here")
    if family.n_up > max_n:
        raise OracleError(f"n={family.n_up} exceeds the bound {max_n}")
    if max(family.k) > max_k:
        raise OracleError(f"max k_i={max(family.k)} exceeds the bound {max_k}")


def _paths_for(rises: tuple[int, ...], drop: int, n_down: int):
    """DFS over interleavings with nonnegative running height.

    The up branch is explored before the down branch, so paths come out in
    S-before-W lexicographic order.  Every leaf is valid: once the ups run
    out the height equals drop times the remaining downs.
    """
    n = len(rises)
    path: list[int] = []

    def rec(i_up: int, used_down: int, h: int):
        if i_up == n and used_down == n_down:
            yield StepSequence(tuple(path))
            return
        if i_up < n:
            path.append(rises[i_up])
            yield from rec(i_up + 1, used_down, h + rises[i_up])
            path.pop()
        if used_down < n_down and h >= drop:
            path.append(-drop)
            yield from rec(i_up, used_down + 1, h - drop)
            path.pop()

    yield from rec(0, 0, 0)


def enumerate_family(
    family: FamilySpec,
    permute_k: bool = False,
    max_n: int = DEFAULT_MAX_N,
    max_k: int = DEFAULT_MAX_K,
) -> FamilyEnumeration:
    """All valid paths of the family, deterministically ordered.

    With permute_k the rise vector ranges over all its distinct orderings
    (sorted), and the result is their concatenation.
    """
    _check_bounds(family, max_n, max_k)
    orderings = family.orderings() if permute_k else (family.k,)
    all_paths: list[StepSequence] = []
    counts: dict[tuple[int, ...], int] = {}
    for ordering in orderings:
        fam = family.reordered(ordering)
        ps = tuple(_paths_for(fam.up_rises, fam.down_drop, fam.n_down))
        counts[ordering] = len(ps)
        all_paths.extend(ps)
    return FamilyEnumeration(family, permute_k, tuple(all_paths), counts)


@lru_cache(maxsize=None)
def _sweep_index(
    family: FamilySpec, max_n: int, max_k: int
) -> dict[StepSequence, tuple[StepSequence, ...]]:
    """Image -> preimages over the permutation closure, computed once."""
    enum = enumerate_family(family, permute_k=True, max_n=max_n, max_k=max_k)
    index: dict[StepSequence, list[StepSequence]] = {}
    for p in enum.paths:
        index.setdefault(sweep(p), []).append(p)
    return {img: tuple(ps) for img, ps in index.items()}


def brute_invert(
    steps: StepSequence,
    family: FamilySpec,
    max_n: int = DEFAULT_MAX_N,
    max_k: int = DEFAULT_MAX_K,
) -> StepSequence:
    """Preimage by exhaustive search over the permutation-closed family.

    The closure is swept once per family and memoized; a lookup then finds
    the preimages of the given path.  Zero or several preimages raise.
    """
    base = family.reordered(tuple(sorted(family.k)))
    preimages = _sweep_index(base, max_n, max_k).get(steps, ())
    if not preimages:
        raise OracleError(f"no preimage of {emit_steps(steps)} in the family")
    if len(preimages) > 1:
        raise OracleError(f"multiple preimages of {emit_steps(steps)} in the family")
    return preimages[0]


@dataclass(frozen=True)
class BijectionReport:
    """Result of certifying the sweep map over an enumerated family."""

    family: FamilySpec
    permuted: bool
    count: int
    bijection: bool
    counterexample: dict | None

    def to_json(self) -> dict:
        return {
            "family": self.family.to_json(),
            "count": self.count,
            "bijection": self.bijection,
            "counterexample": self.counterexample,
        }


def certify_bijection(
    family: FamilySpec,
    permute_k: bool = True,
    max_n: int = DEFAULT_MAX_N,
    max_k: int = DEFAULT_MAX_K,
) -> BijectionReport:
    """Sweep the whole enumerated family and verify a bijection onto itself.

    Injectivity plus image-inside-domain over a finite set of equal size is
    a bijection; the first violation of either becomes the counterexample.
    """
    enum = enumerate_family(family, permute_k, max_n=max_n, max_k=max_k)
    domain = set(enum.paths)
    seen: dict[StepSequence, StepSequence] = {}
    counterexample = None
    for p in enum.paths:
        q = sweep(p)
        if q not in domain:
            counterexample = {
                "kind": "image-outside-family",
                "path": emit_steps(p),
                "image": emit_steps(q),
            }
            break
        if q in seen:
            counterexample = {
                "kind": "collision",
                "first": emit_steps(seen[q]),
                "second": emit_steps(p),
                "image": emit_steps(q),
            }
            break
        seen[q] = p
    return BijectionReport(
        family, permute_k, enum.count, counterexample is None, counterexample
    )


def random_path(k, rng: random.Random) -> StepSequence:
    """A pseudo-random plain-family path with the given rises, in order.

    Not uniform over the family; every member has positive probability.
    """
    k = tuple(k)
    n_down = sum(k)
    path: list[int] = []
    i_up, used_down, h = 0, 0, 0
    while i_up < len(k) or used_down < n_down:
        can_up = i_up < len(k)
        can_down = used_down < n_down and h >= 1
        if can_up and (not can_down or rng.random() < 0.5):
            path.append(k[i_up])
            h += k[i_up]
            i_up += 1
        else:
            path.append(-1)
            h -= 1
            used_down += 1
    return StepSequence(tuple(path))
