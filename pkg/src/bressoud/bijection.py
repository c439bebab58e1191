"""Generalized Bressoud bijection between d-distinct partitions and
1-distinct partitions satisfying residue threshold conditions.

Forward map on a d-distinct partition a_1 > ... > a_m:

1. strip the staircase: b_i = a_i - ((m - i) d + 1), leaving m nonnegative
   non-increasing values (zeros kept);
2. split the b's into d groups by residue; the group holding values
   congruent to pi(j) - 1 goes to stack level j, level 0 at the bottom,
   each group non-increasing from top to bottom;
3. row r of the stack, counted from the bottom, gets r d + 1 added back,
   which turns residue pi(j) - 1 into pi(j);
4. sort.

The inverse regroups parts by residue pi(j), strips the same staircase
from the stack and succeeds exactly when no group falls below zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Literal, Sequence

from .partition import (
    Partition,
    ResiduePermutation,
    first_gap_violation,
    format_partition,
    is_distinct,
)

Direction = Literal["forward", "inverse"]


class NotDDistinctError(ValueError):
    """Forward map input is not d-distinct."""

    def __init__(self, d: int, pair: tuple[int, int]):
        self.d = d
        self.pair = pair
        super().__init__(f"not {d}-distinct at parts {pair[0]},{pair[1]}")


class NotDistinctError(ValueError):
    """Inverse map input has a repeated part."""

    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"not 1-distinct at parts {pair[0]},{pair[1]}")


class ConditionViolation(ValueError):
    """Inverse map input is 1-distinct but fails threshold condition ``c_s``."""

    def __init__(self, s: int, part: int, bound: int):
        self.s = s
        self.part = part
        self.bound = bound
        super().__init__(f"condition c_{s} violated: part {part} is not greater than {bound}")


def staircase(m: int, d: int) -> tuple[int, ...]:
    """Offsets ``(m-1)d+1, ..., d+1, 1`` aligned with parts largest-first."""
    return tuple((m - 1 - i) * d + 1 for i in range(m))


@dataclass(frozen=True)
class PaddedParts:
    """The m values left after stripping the staircase; may end in zeros."""

    values: tuple[int, ...]
    d: int

    def __post_init__(self):
        v = self.values
        assert all(x >= 0 for x in v), v
        assert all(v[i] >= v[i + 1] for i in range(len(v) - 1)), v

    @property
    def m(self) -> int:
        return len(self.values)

    @property
    def staircase(self) -> tuple[int, ...]:
        return staircase(self.m, self.d)


@dataclass(frozen=True)
class GroupedRows:
    """Residue groups stacked by level; ``groups[j]`` is level ``j`` (0 = bottom).

    Within a group values run non-increasing from top to bottom, so
    ``groups[j][-1]`` is the group's lowest row.
    """

    groups: tuple[tuple[int, ...], ...]
    residues: tuple[int, ...]
    pi: ResiduePermutation

    @property
    def d(self) -> int:
        return self.pi.d

    @property
    def group_sizes(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.groups)

    @property
    def m(self) -> int:
        return sum(self.group_sizes)

    def stack(self) -> tuple[int, ...]:
        """All rows top-first: highest level first, each group top-down."""
        return tuple(x for g in reversed(self.groups) for x in g)

    def top_down(self) -> list[tuple[int, int, tuple[int, ...]]]:
        """``(level, residue, values)`` from the top of the stack down."""
        return [(j, self.residues[j], self.groups[j]) for j in reversed(range(self.d))]


def _stack_offsets(m: int, d: int) -> tuple[int, ...]:
    # stack is top-first, row r from the bottom gets r*d + 1
    return staircase(m, d)


def staircase_subtract(lam: Partition, d: int) -> PaddedParts:
    """Step 1: ``b_i = a_i - ((m-i) d + 1)``."""
    bad = first_gap_violation(lam, d)
    if bad is not None:
        raise NotDDistinctError(d, bad)
    a = lam.parts
    m = len(a)
    b = tuple(x - s for x, s in zip(a, staircase(m, d)))
    for i in range(m - 1):
        assert b[i] - b[i + 1] == a[i] - a[i + 1] - d >= 0
    if m:
        assert b[-1] >= 0
    return PaddedParts(b, d)


def regroup_by_residue(b: PaddedParts, pi: ResiduePermutation) -> GroupedRows:
    """Step 2: level ``j`` collects the values congruent to ``pi(j) - 1``.

    Zeros are residue 0 and therefore go to the level whose target residue is 1.
    """
    d = pi.d
    if b.d != d:
        raise ValueError(f"padded parts built with d={b.d}, permutation has d={d}")
    residues = tuple((pi(j) - 1) % d for j in range(d))
    level_of = {r: j for j, r in enumerate(residues)}
    groups: list[list[int]] = [[] for _ in range(d)]
    for x in b.values:  # already non-increasing, so each group is too
        groups[level_of[x % d]].append(x)
    return GroupedRows(tuple(map(tuple, groups)), residues, pi)


def staircase_add(g: GroupedRows) -> tuple[int, ...]:
    """Step 3: add ``r d + 1`` to the row ``r`` places above the bottom.

    Returns the shifted rows top-first; rows at level ``j`` end up
    congruent to ``pi(j)``. Equal values inside a group are told apart by
    stack position, the lower one getting the smaller offset.
    """
    rows = g.stack()
    return tuple(x + s for x, s in zip(rows, _stack_offsets(len(rows), g.d)))


def sort_parts(rows: Sequence[int]) -> Partition:
    """Step 4."""
    if any(x < 1 for x in rows):
        raise ValueError(f"cannot sort non-positive rows into a partition: {tuple(rows)}")
    return Partition(tuple(sorted(rows, reverse=True)))


def forward(lam: Partition, pi: ResiduePermutation) -> Partition:
    """Map a d-distinct partition (d = ``pi.d``) to its 1-distinct image."""
    return trace(lam, pi, "forward").output


def inverse(mu: Partition, pi: ResiduePermutation) -> Partition:
    """Preimage of ``mu`` under :func:`forward`.

    Raises :class:`NotDistinctError` for repeated parts and
    :class:`ConditionViolation` naming the first failing ``c_s`` otherwise.
    """
    return trace(mu, pi, "inverse").output


@dataclass(frozen=True)
class StepTrace:
    """Every intermediate stage of one application of the map.

    Stages are stored in forward order whatever the direction: for an
    inverse trace ``output`` is the d-distinct preimage and ``input`` the
    1-distinct partition it came from.
    """

    input: Partition
    after_step1: PaddedParts
    after_step2: GroupedRows
    after_step3: tuple[int, ...]
    output: Partition
    direction: Direction

    @property
    def pi(self) -> ResiduePermutation:
        return self.after_step2.pi

    @property
    def d_distinct_side(self) -> Partition:
        return self.input if self.direction == "forward" else self.output

    @property
    def distinct_side(self) -> Partition:
        return self.output if self.direction == "forward" else self.input

    def to_dict(self) -> dict:
        return {
            "direction": self.direction,
            "d": self.pi.d,
            "pi": list(self.pi.image),
            "input": list(self.input.parts),
            "after_step1": {
                "values": list(self.after_step1.values),
                "staircase": list(self.after_step1.staircase),
            },
            "groups": [
                {"level": j, "residue": r, "target_residue": self.pi(j), "values": list(v)}
                for j, r, v in self.after_step2.top_down()
            ],
            "after_step3": list(self.after_step3),
            "output": list(self.output.parts),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, obj: dict) -> "StepTrace":
        pi = ResiduePermutation(tuple(obj["pi"]))
        d = pi.d
        levels = sorted(obj["groups"], key=lambda g: g["level"])
        groups = tuple(tuple(g["values"]) for g in levels)
        residues = tuple(g["residue"] for g in levels)
        return cls(
            input=Partition(tuple(obj["input"])),
            after_step1=PaddedParts(tuple(obj["after_step1"]["values"]), d),
            after_step2=GroupedRows(groups, residues, pi),
            after_step3=tuple(obj["after_step3"]),
            output=Partition(tuple(obj["output"])),
            direction=obj["direction"],
        )

    def render(self, box: str = "#", sep: str = "|") -> str:
        """Draw each stage as a Young diagram, staircase left of ``sep``.

        Stages are listed in the order the map visits them.
        """
        d = self.pi.d
        b = self.after_step1
        g = self.after_step2
        rows = self.after_step3
        fwd = self.direction == "forward"

        def split(left, right):
            return [box * s + sep + box * v for s, v in zip(left, right)]

        groups = [
            f"  level {j}: residue {r} mod {d} -> {self.pi(j)}: {format_partition(vals)}"
            for j, r, vals in g.top_down()
        ]
        stages = [
            (f"d-distinct partition: {format_partition(self.d_distinct_side)}",
             [_diagram(self.d_distinct_side.parts, box)]),
            (f"staircase | remainder: {format_partition(b.values)}",
             split(b.staircase, b.values)),
            ("remainder regrouped by residue (top to bottom):",
             groups + split(b.staircase, g.stack())),
            (f"stacked rows: {format_partition(rows)}", [box * x for x in rows]),
            (f"distinct partition: {format_partition(self.distinct_side)}",
             [_diagram(self.distinct_side.parts, box)]),
        ]
        if not fwd:
            stages.reverse()
        out = [f"{self.direction} map, d={d}, pi=({self.pi})"]
        for i, (title, body) in enumerate(stages):
            label = "input" if i == 0 else "output" if i == len(stages) - 1 else f"step {i}"
            out.append("")
            out.append(f"{label}, {title}")
            out.extend(body)
        return "\n".join(line.rstrip() for line in out) + "\n"


def _diagram(parts: Sequence[int], box: str) -> str:
    return "\n".join(box * x for x in parts) if parts else "(empty)"


def trace(lam: Partition, pi: ResiduePermutation, direction: Direction = "forward") -> StepTrace:
    if direction == "forward":
        return _trace_forward(lam, pi)
    if direction == "inverse":
        return _trace_inverse(lam, pi)
    raise ValueError(f"unknown direction {direction!r}")


def _trace_forward(lam: Partition, pi: ResiduePermutation) -> StepTrace:
    b = staircase_subtract(lam, pi.d)
    g = regroup_by_residue(b, pi)
    rows = staircase_add(g)
    mu = sort_parts(rows)
    return StepTrace(lam, b, g, rows, mu, "forward")


def _trace_inverse(mu: Partition, pi: ResiduePermutation) -> StepTrace:
    if mu.parts and not is_distinct(mu):
        bad = next((x, y) for x, y in zip(mu.parts, mu.parts[1:]) if x == y)
        raise NotDistinctError(bad)
    d = pi.d
    rank = pi.rank_of_residue()

    # undo step 4: level j gets the parts congruent to pi(j)
    levels: list[list[int]] = [[] for _ in range(d)]
    for x in mu.parts:
        levels[rank[x % d]].append(x)
    rows = tuple(x for grp in reversed(levels) for x in grp)

    # undo step 3 bottom-up; only a group's lowest row can go negative
    below = 0
    shifted: list[tuple[int, ...]] = []
    for j, grp in enumerate(levels):
        if grp and grp[-1] < d * below + 1:
            raise ConditionViolation(j, grp[-1], d * below)
        k = len(grp)
        # lowest row of this group sits at height `below`
        shifted.append(tuple(x - ((below + k - 1 - i) * d + 1) for i, x in enumerate(grp)))
        below += k
    residues = tuple((pi(j) - 1) % d for j in range(d))
    g = GroupedRows(tuple(shifted), residues, pi)

    # undo steps 2 and 1
    b = PaddedParts(tuple(sorted(g.stack(), reverse=True)), d)
    m = b.m
    lam = Partition(tuple(v + s for v, s in zip(b.values, staircase(m, d))))
    return StepTrace(mu, b, g, rows, lam, "inverse")


def check_trace_weights(t: StepTrace) -> bool:
    """Weights reconcile stage by stage."""
    b = t.after_step1
    n = t.d_distinct_side.weight
    return (
        n == sum(b.staircase) + sum(b.values)
        == sum(b.staircase) + sum(t.after_step2.stack())
        == sum(t.after_step3)
        == t.distinct_side.weight
    )
