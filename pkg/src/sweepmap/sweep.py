"""The sweep map: rearrange a path's steps by increasing starting level.

Steps are stably ordered by (starting level, position), with positions
compared right-to-left inside a level, and the path is rebuilt in that
order.  The map is defined for any valid step sequence; for the supported
families it is a bijection, inverted in walking.py.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import PathError, StepSequence, dyck_diagnostic, ranks


@dataclass(frozen=True)
class SweepOrder:
    """A permutation of step positions (1-based) in sweep order."""

    order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, i):
        return self.order[i]


def sweep_order(steps: StepSequence) -> SweepOrder:
    """Positions sorted by starting level, later positions first within a level."""
    d = dyck_diagnostic(steps)
    if not d:
        raise PathError(str(d))
    r = ranks(steps).ranks
    order = sorted(range(len(r)), key=lambda i: (r[i], -i))
    return SweepOrder(tuple(i + 1 for i in order))


def sweep(steps: StepSequence) -> StepSequence:
    """Image of the path under the sweep map."""
    s = steps.steps
    return StepSequence(tuple(s[i - 1] for i in sweep_order(steps)))
