"""Shared helpers for the test suite."""

import itertools

from sweepmap import FamilySpec, from_minus, from_plus


def k_multisets(max_n, max_k):
    """All sorted rise multisets with at most max_n entries, each <= max_k."""
    out = []
    for n in range(1, max_n + 1):
        out.extend(itertools.combinations_with_replacement(range(1, max_k + 1), n))
    return out


def family_grid(max_n, max_k):
    """One family per kind and multiset over the small grid.

    The minus kind is skipped where a scaled rise would collapse to zero.
    """
    fams = []
    for ms in k_multisets(max_n, max_k):
        fams.append(FamilySpec.vector(ms))
        fams.append(FamilySpec.plus(ms))
        if all(len(ms) * v >= 2 for v in ms):
            fams.append(FamilySpec.minus(ms))
    return fams


def skeleton_of(path, family):
    """The plain path a family member unscales to (identity for the k kind)."""
    if family.kind == "kplus":
        return from_plus(path)
    if family.kind == "kminus":
        return from_minus(path)
    return path
