"""Path data model: step sequences, SW-words, rank sequences, and families.

A generalized Dyck path is stored as the sequence of its signed rises:
positive entries are up steps, negative entries are down steps, every prefix
sum stays nonnegative, and the total is zero.  Fractional rises of the
plus/minus families are kept exact by scaling everything by the number of
up steps, so all arithmetic stays integral.  Indices in public data are
1-based throughout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from itertools import permutations

KIND_K = "k"
KIND_KPLUS = "kplus"
KIND_KMINUS = "kminus"
KIND_RATIONAL = "rational"

_K_KINDS = (KIND_K, KIND_KPLUS, KIND_KMINUS)
_ALL_KINDS = _K_KINDS + (KIND_RATIONAL,)

_STEP_TOKEN = re.compile(r"[+-]?\d+")
_S_TOKEN = re.compile(r"S(\d+)")


class PathError(ValueError):
    """Raised for structurally invalid paths, words, families, or text."""


@dataclass(frozen=True)
class Diagnostic:
    """Outcome of a validation check; truthy exactly when the input is valid."""

    ok: bool
    reason: str = ""
    index: int | None = None  # 1-based position of the first offense, if any

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        if self.index is None:
            return self.reason
        return f"{self.reason} (index {self.index})"


VALID = Diagnostic(True)


@dataclass(frozen=True)
class StepSequence:
    """A path as the tuple of its signed rises, in path order."""

    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        steps = tuple(int(a) for a in self.steps)
        if not steps:
            raise PathError("empty path")
        for j, a in enumerate(steps, start=1):
            if a == 0:
                raise PathError(f"zero rise at index {j}")
        object.__setattr__(self, "steps", steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def rises(self) -> tuple[int, ...]:
        """The up-step rises, in path order."""
        return tuple(a for a in self.steps if a > 0)

    @property
    def n_up(self) -> int:
        return sum(1 for a in self.steps if a > 0)


@dataclass(frozen=True)
class RankSequence:
    """The starting level of every step of a path."""

    ranks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.ranks)

    def __iter__(self):
        return iter(self.ranks)

    def __getitem__(self, i):
        return self.ranks[i]


@dataclass(frozen=True)
class SWWord:
    """Letter view of a path: ("S", rise) for up steps, ("W", drop) for down.

    The textual form spells S letters with a mandatory exponent ("S2", "S1")
    and W letters bare; the drop carried by W is context the text does not
    record, so parsing takes it as an argument.
    """

    letters: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        letters = tuple((kind, int(size)) for kind, size in self.letters)
        for j, (kind, size) in enumerate(letters, start=1):
            if kind not in ("S", "W"):
                raise PathError(f"bad letter kind {kind!r} at index {j}")
            if size <= 0:
                raise PathError(f"zero rise at index {j}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    @classmethod
    def from_steps(cls, steps: StepSequence) -> "SWWord":
        return cls(tuple(("S", a) if a > 0 else ("W", -a) for a in steps))

    def steps(self) -> StepSequence:
        return StepSequence(
            tuple(size if kind == "S" else -size for kind, size in self.letters)
        )

    def exponents(self) -> tuple[int, ...]:
        """Exponents of the S letters, in word order."""
        return tuple(size for kind, size in self.letters if kind == "S")

    def text(self) -> str:
        return " ".join(
            f"S{size}" if kind == "S" else "W" for kind, size in self.letters
        )

    @classmethod
    def from_text(cls, text: str, down: int = 1) -> "SWWord":
        """Parse "S2 W W" style text; every W letter gets the given drop."""
        if down <= 0:
            raise PathError(f"down drop must be positive, got {down}")
        tokens = text.split()
        if not tokens:
            raise PathError("empty word")
        letters: list[tuple[str, int]] = []
        for j, tok in enumerate(tokens, start=1):
            if tok == "W":
                letters.append(("W", down))
                continue
            m = _S_TOKEN.fullmatch(tok)
            if m is None:
                raise PathError(f"malformed token {tok!r} at index {j}")
            size = int(m.group(1))
            if size == 0:
                raise PathError(f"zero rise at index {j}")
            letters.append(("S", size))
        return cls(tuple(letters))


@dataclass(frozen=True)
class FamilySpec:
    """Which family a path belongs to.

    For the three k-vector kinds, ``k`` lists the defining positive rises;
    the plus/minus kinds store their fractional rises scaled by ``n`` so
    that everything stays an integer.  The rational kind is a pair (m, n):
    n up steps of rise m, m down steps of drop n.
    """

    kind: str
    k: tuple[int, ...] = ()
    m: int = 0
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _ALL_KINDS:
            raise PathError(f"unknown family kind {self.kind!r}")
        if self.kind in _K_KINDS:
            k = tuple(int(v) for v in self.k)
            if not k:
                raise PathError("family needs a nonempty rise vector")
            if any(v <= 0 for v in k):
                raise PathError("rise vector entries must be positive")
            if self.kind == KIND_KMINUS and any(len(k) * v < 2 for v in k):
                # a scaled rise of n*k_i - 1 = 0 would be a zero-length step
                raise PathError(
                    "minus family needs n*k_i >= 2 for every entry"
                )
            object.__setattr__(self, "k", k)
        else:
            if self.k:
                raise PathError("rational families take (m, n), not a rise vector")
            if self.m <= 0 or self.n <= 0:
                raise PathError("rational family needs positive m and n")

    @classmethod
    def vector(cls, k) -> "FamilySpec":
        return cls(KIND_K, k=tuple(k))

    @classmethod
    def plus(cls, k) -> "FamilySpec":
        return cls(KIND_KPLUS, k=tuple(k))

    @classmethod
    def minus(cls, k) -> "FamilySpec":
        return cls(KIND_KMINUS, k=tuple(k))

    @classmethod
    def rational(cls, m: int, n: int) -> "FamilySpec":
        return cls(KIND_RATIONAL, m=int(m), n=int(n))

    @property
    def n_up(self) -> int:
        return self.n if self.kind == KIND_RATIONAL else len(self.k)

    @property
    def n_down(self) -> int:
        if self.kind == KIND_RATIONAL:
            return self.m
        total = sum(self.k)
        if self.kind == KIND_KPLUS:
            return total + 1
        if self.kind == KIND_KMINUS:
            return total - 1
        return total

    @property
    def size(self) -> int:
        return self.n_up + self.n_down

    @property
    def scale(self) -> int:
        """Denominator the fractional rises were multiplied by (1 if none)."""
        return len(self.k) if self.kind in (KIND_KPLUS, KIND_KMINUS) else 1

    @property
    def up_rises(self) -> tuple[int, ...]:
        n = len(self.k)
        if self.kind == KIND_K:
            return self.k
        if self.kind == KIND_KPLUS:
            return tuple(n * v + 1 for v in self.k)
        if self.kind == KIND_KMINUS:
            return tuple(n * v - 1 for v in self.k)
        return (self.m,) * self.n

    @property
    def down_drop(self) -> int:
        if self.kind == KIND_K:
            return 1
        if self.kind == KIND_RATIONAL:
            return self.n
        return len(self.k)

    def reordered(self, k) -> "FamilySpec":
        """The same family with its rise vector in a different order."""
        if self.kind == KIND_RATIONAL:
            raise PathError("rational families have no rise vector to reorder")
        k = tuple(k)
        if sorted(k) != sorted(self.k):
            raise PathError("reordering must permute the original rise vector")
        return replace(self, k=k)

    def orderings(self) -> tuple[tuple[int, ...], ...]:
        """All distinct orderings of the rise vector, sorted."""
        if self.kind == KIND_RATIONAL:
            return ()
        return tuple(sorted(set(permutations(self.k))))

    def to_json(self) -> dict:
        if self.kind == KIND_RATIONAL:
            return {"kind": self.kind, "m": self.m, "n": self.n, "scale": 1}
        return {"kind": self.kind, "k": list(self.k), "scale": self.scale}

    @classmethod
    def from_json(cls, obj: dict) -> "FamilySpec":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise PathError("family object needs a 'kind' key")
        kind = obj["kind"]
        if kind == KIND_RATIONAL:
            fam = cls.rational(obj.get("m", 0), obj.get("n", 0))
        elif kind in _K_KINDS:
            fam = cls(kind, k=tuple(obj.get("k", ())))
        else:
            raise PathError(f"unknown family kind {kind!r}")
        if "scale" in obj and obj["scale"] != fam.scale:
            raise PathError(
                f"scale {obj['scale']} does not match the family (expected {fam.scale})"
            )
        return fam


def dyck_diagnostic(steps: StepSequence) -> Diagnostic:
    """Check the nonnegative-prefix and zero-total conditions."""
    h = 0
    for j, a in enumerate(steps, start=1):
        h += a
        if h < 0:
            return Diagnostic(False, f"prefix sum {h} is negative", j)
    if h != 0:
        return Diagnostic(False, f"total rise is {h}, not 0")
    return VALID


def validate(steps: StepSequence, family: FamilySpec, permute_k: bool = False) -> Diagnostic:
    """Check a path against the Dyck condition and the family's rise pattern.

    With ``permute_k`` the up rises may realize any permutation of the
    family's rise vector (the closure check); otherwise they must appear
    exactly in family order.
    """
    d = dyck_diagnostic(steps)
    if not d:
        return d
    if len(steps) != family.size:
        return Diagnostic(
            False, f"expected {family.size} steps, got {len(steps)}"
        )
    drop = family.down_drop
    ups: list[tuple[int, int]] = []
    for j, a in enumerate(steps, start=1):
        if a < 0:
            if -a != drop:
                return Diagnostic(False, f"down step drops {-a}, expected {drop}", j)
        else:
            ups.append((j, a))
    expected = family.up_rises
    if len(ups) != len(expected):
        return Diagnostic(False, f"expected {len(expected)} up steps, got {len(ups)}")
    if permute_k:
        if sorted(a for _, a in ups) != sorted(expected):
            return Diagnostic(False, "up rises do not permute the family's rises")
    else:
        for (j, a), want in zip(ups, expected):
            if a != want:
                return Diagnostic(False, f"up rise {a}, expected {want}", j)
    return VALID


def ranks(steps: StepSequence) -> RankSequence:
    """Starting level of each step (the partial sums of the rises)."""
    out = []
    h = 0
    for j, a in enumerate(steps, start=1):
        out.append(h)
        h += a
        if h < 0:
            raise PathError(f"prefix sum {h} is negative (index {j})")
    return RankSequence(tuple(out))


def to_plus(steps: StepSequence, k) -> StepSequence:
    """Lift a path of the plain family into the plus family.

    Every rise a becomes n*a + 1 and every drop becomes n (the scaled form
    of adding 1/n to each up step), and one extra down step is appended.
    """
    k = tuple(k)
    n = len(k)
    d = validate(steps, FamilySpec.vector(k))
    if not d:
        raise PathError(f"not a valid path for rises {k}: {d}")
    out = [n * a + 1 if a > 0 else -n for a in steps]
    out.append(-n)
    return StepSequence(tuple(out))


def from_plus(steps: StepSequence) -> StepSequence:
    """Inverse of to_plus: unscale the rises and drop the final down step."""
    rises = steps.rises
    n = len(rises)
    if n == 0:
        raise PathError("path has no up steps")
    k = []
    for a in rises:
        if (a - 1) % n != 0 or a - 1 < n:
            raise PathError(f"rise {a} is not n*k+1 for n={n} up steps")
        k.append((a - 1) // n)
    d = validate(steps, FamilySpec.plus(k))
    if not d:
        raise PathError(f"not a valid plus-family path: {d}")
    if steps[-1] > 0:
        raise PathError("path must end with a down step")
    out = [(a - 1) // n if a > 0 else -1 for a in steps[:-1]]
    skeleton = StepSequence(tuple(out))
    d = validate(skeleton, FamilySpec.vector(k))
    if not d:
        raise PathError(f"underlying plain path is invalid: {d}")
    return skeleton


def to_minus(steps: StepSequence, k) -> StepSequence:
    """Lower a path of the plain family into the minus family.

    Defined only for paths whose rank sequence contains a single zero (at
    the start): every rise a becomes n*a - 1, drops become n, and the final
    down step is removed.
    """
    k = tuple(k)
    n = len(k)
    fam = FamilySpec.minus(k)  # raises if some n*k_i < 2
    d = validate(steps, FamilySpec.vector(k))
    if not d:
        raise PathError(f"not a valid path for rises {k}: {d}")
    zeros = [j for j, r in enumerate(ranks(steps), start=1) if r == 0]
    if len(zeros) > 1:
        raise PathError(
            f"rank 0 reappears at index {zeros[1]}; need a single zero rank"
        )
    out = [n * a - 1 if a > 0 else -n for a in steps[:-1]]
    result = StepSequence(tuple(out))
    d = validate(result, fam)
    if not d:  # pragma: no cover - guarded by the checks above
        raise PathError(f"lowering produced an invalid path: {d}")
    return result


def from_minus(steps: StepSequence) -> StepSequence:
    """Inverse of to_minus: unscale the rises and restore the final down step."""
    rises = steps.rises
    n = len(rises)
    if n == 0:
        raise PathError("path has no up steps")
    k = []
    for a in rises:
        if (a + 1) % n != 0:
            raise PathError(f"rise {a} is not n*k-1 for n={n} up steps")
        k.append((a + 1) // n)
    if any(v < 1 for v in k):
        raise PathError("unscaled rises must be positive")
    d = validate(steps, FamilySpec.minus(k))
    if not d:
        raise PathError(f"not a valid minus-family path: {d}")
    out = [(a + 1) // n if a > 0 else -1 for a in steps]
    out.append(-1)
    skeleton = StepSequence(tuple(out))
    d = validate(skeleton, FamilySpec.vector(k))
    if not d:
        raise PathError(f"underlying plain path is invalid: {d}")
    zeros = [j for j, r in enumerate(ranks(skeleton), start=1) if r == 0]
    if len(zeros) > 1:
        raise PathError(
            f"rank 0 reappears at index {zeros[1]} in the underlying path"
        )
    return skeleton


def infer_family(steps: StepSequence, kind: str) -> FamilySpec:
    """Read a family descriptor off a path's own rises."""
    rises = steps.rises
    n = len(rises)
    if n == 0:
        raise PathError("path has no up steps")
    if kind == KIND_K:
        return FamilySpec.vector(rises)
    if kind == KIND_KPLUS:
        if any((a - 1) % n != 0 or a - 1 < n for a in rises):
            raise PathError(f"rises are not of the form n*k+1 for n={n}")
        return FamilySpec.plus(tuple((a - 1) // n for a in rises))
    if kind == KIND_KMINUS:
        if any((a + 1) % n != 0 for a in rises):
            raise PathError(f"rises are not of the form n*k-1 for n={n}")
        return FamilySpec.minus(tuple((a + 1) // n for a in rises))
    if kind == KIND_RATIONAL:
        m = rises[0]
        drops = {-a for a in steps if a < 0}
        if len(set(rises)) != 1 or len(drops) != 1:
            raise PathError("rational paths need constant rises and drops")
        return FamilySpec.rational(m, drops.pop())
    raise PathError(f"unknown family kind {kind!r}")


def parse_steps(text: str) -> StepSequence:
    """Parse comma-separated rises, e.g. "2,-1,-1"."""
    tokens = [t.strip() for t in text.split(",")]
    values = []
    for j, tok in enumerate(tokens, start=1):
        if not _STEP_TOKEN.fullmatch(tok):
            raise PathError(f"malformed step token {tok!r} at index {j}")
        v = int(tok)
        if v == 0:
            raise PathError(f"zero rise at index {j}")
        values.append(v)
    return StepSequence(tuple(values))


def emit_steps(steps: StepSequence) -> str:
    return ",".join(str(a) for a in steps)


def path_to_json(steps: StepSequence, family: FamilySpec | None = None) -> dict:
    return {
        "family": family.to_json() if family is not None else None,
        "steps": list(steps),
    }


def path_from_json(obj: dict) -> tuple[StepSequence, FamilySpec | None]:
    if not isinstance(obj, dict) or "steps" not in obj:
        raise PathError("path object needs a 'steps' key")
    steps = StepSequence(tuple(obj["steps"]))
    fam = obj.get("family")
    family = FamilySpec.from_json(fam) if fam is not None else None
    return steps, family
