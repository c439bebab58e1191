"""Partitions, residue permutations and the predicates the identities talk about.

Parts are kept largest-first, the same order as the rows of a Young diagram.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

# Parts and weights are kept inside the signed 64-bit range.
MAX_PART = 2**63 - 1

BOX = "#"
EMPTY_TEXT = "-"


class NotAPartitionError(ValueError):
    """Raised when a sequence is not a non-increasing list of positive integers."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    weight: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "weight", sum(self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0


EMPTY = Partition(())


def make_partition(raw: Iterable[int]) -> Partition:
    """Build a :class:`Partition`, rejecting anything that is not one."""
    parts = tuple(raw)
    for x in parts:
        if isinstance(x, bool) or not isinstance(x, int):
            raise NotAPartitionError(f"not a partition: {x!r} is not an integer")
        if x < 1:
            raise NotAPartitionError(f"not a partition: part {x} is not positive")
        if x > MAX_PART:
            raise NotAPartitionError(f"not a partition: part {x} exceeds 64-bit range")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise NotAPartitionError(f"not a partition: {a} is followed by larger {b}")
    if sum(parts) > MAX_PART:
        raise NotAPartitionError("not a partition: weight exceeds 64-bit range")
    return Partition(parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"5,4,1"`` notation; ``"-"`` (or blank) is the empty partition."""
    text = text.strip()
    if text in ("", EMPTY_TEXT):
        return EMPTY
    try:
        raw = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise NotAPartitionError(f"not a partition: cannot parse {text!r}") from None
    return make_partition(raw)


def format_partition(lam: Partition | Sequence[int]) -> str:
    parts = tuple(lam)
    return ",".join(map(str, parts)) if parts else EMPTY_TEXT


def check_gap(d: int) -> int:
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ValueError(f"distinctness gap must be a positive integer, got {d!r}")
    return d


def first_gap_violation(lam: Partition, d: int) -> tuple[int, int] | None:
    """Return the first adjacent pair of parts closer than ``d``, if any."""
    p = lam.parts
    for i in range(len(p) - 1):
        if p[i] - p[i + 1] < d:
            return p[i], p[i + 1]
    return None


def is_d_distinct(lam: Partition, d: int) -> bool:
    """True iff any two parts differ by at least ``d``.

    Checking adjacent parts is enough because the parts are sorted.
    """
    return first_gap_violation(lam, d) is None


def is_distinct(lam: Partition) -> bool:
    return is_d_distinct(lam, 1)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: column lengths become the parts."""
    p = lam.parts
    if not p:
        return EMPTY
    cols = []
    k = len(p)
    for j in range(1, p[0] + 1):
        while p[k - 1] < j:
            k -= 1
        cols.append(k)
    return Partition(tuple(cols))


def render_young(lam: Partition | Sequence[int], box: str = BOX) -> str:
    """One line per part, top row is the largest part. Empty partition -> ``""``."""
    return "\n".join(box * x for x in lam)


@dataclass(frozen=True)
class ResiduePermutation:
    """A permutation of the residues ``0..d-1``; ``image[j]`` is the image of ``j``.

    ``image[0]`` names the residue class that sits at the bottom of the
    regrouped stack and carries no threshold condition; ``image[s]`` for
    ``s >= 1`` names the residue class constrained by condition ``c_s``.
    """

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if not image:
            raise ValueError("a residue permutation needs d >= 1 entries")
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"{image} is not a permutation of 0..{len(image) - 1}")

    @property
    def d(self) -> int:
        return len(self.image)

    def __call__(self, j: int) -> int:
        return self.image[j]

    def __str__(self) -> str:
        return ",".join(map(str, self.image))

    def rank_of_residue(self) -> tuple[int, ...]:
        """Inverse permutation: ``rank[r]`` is the ``j`` with ``image[j] == r``."""
        rank = [0] * self.d
        for j, r in enumerate(self.image):
            rank[r] = j
        return tuple(rank)

    @classmethod
    def identity(cls, d: int) -> "ResiduePermutation":
        return cls(tuple(range(check_gap(d))))

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> "ResiduePermutation":
        try:
            image = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse permutation {text!r}") from None
        if d is not None and len(image) != d:
            raise ValueError(f"permutation {text!r} has {len(image)} entries, expected d={d}")
        return cls(image)


def all_permutations(d: int) -> list[ResiduePermutation]:
    """Every permutation of ``0..d-1`` in lexicographic order."""
    return [ResiduePermutation(p) for p in itertools.permutations(range(check_gap(d)))]


# Andrews–Eriksson's theorem and its dual with odd/even roles swapped.
BRESSOUD = ResiduePermutation((1, 0))
BRESSOUD_DUAL = ResiduePermutation((0, 1))


def first_condition_violation(lam: Partition, pi: ResiduePermutation) -> int | None:
    """Index ``s`` of the first failing threshold condition, or ``None``.

    Condition ``s`` asks that every part congruent to ``pi(s)`` exceed ``d``
    times the number of parts congruent to ``pi(0), ..., pi(s-1)``.
    Distinctness is not checked here.
    """
    d = pi.d
    rank = pi.rank_of_residue()
    counts = [0] * d
    smallest = [0] * d
    for x in lam.parts:
        j = rank[x % d]
        counts[j] += 1
        smallest[j] = x  # parts are non-increasing, so the last one seen is smallest
    below = counts[0]
    for s in range(1, d):
        if counts[s] and smallest[s] <= d * below:
            return s
        below += counts[s]
    return None


def satisfies_conditions(lam: Partition, pi: ResiduePermutation) -> bool:
    """1-distinct and every threshold condition ``c_1 .. c_{d-1}`` holds."""
    return is_distinct(lam) and first_condition_violation(lam, pi) is None
