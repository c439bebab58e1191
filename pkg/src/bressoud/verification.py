"""Exhaustive checks of the partition identities at small n.

Every check enumerates both sides independently, pushes the d-distinct side
through :func:`forward`, and confirms that the image lands in the target set,
that no two partitions collide, and that both round trips are the identity.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bijection import ConditionViolation, NotDistinctError, forward, inverse
from .enumeration import partitions_of
from .partition import (
    Partition,
    ResiduePermutation,
    all_permutations,
    conjugate,
    is_d_distinct,
    satisfies_conditions,
)

MAX_WITNESSES = 10


@dataclass
class VerificationReport:
    n: int
    pi: ResiduePermutation
    count_left: int = 0
    count_right: int = 0
    forward_total: bool = True
    injective: bool = True
    roundtrip_fwd_inv: bool = True
    roundtrip_inv_fwd: bool = True
    witnesses: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def d(self) -> int:
        return self.pi.d

    @property
    def passed(self) -> bool:
        return (
            self.count_left == self.count_right
            and self.forward_total
            and self.injective
            and self.roundtrip_fwd_inv
            and self.roundtrip_inv_fwd
            and not self.witnesses
        )

    def witness(self, kind: str, lam: Partition, **extra) -> None:
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append({"kind": kind, "partition": list(lam.parts), **extra})

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "pi": list(self.pi.image),
            "count_left": self.count_left,
            "count_right": self.count_right,
            "forward_total": self.forward_total,
            "injective": self.injective,
            "roundtrip_fwd_inv": self.roundtrip_fwd_inv,
            "roundtrip_inv_fwd": self.roundtrip_inv_fwd,
            "witnesses": self.witnesses,
            "passed": self.passed,
        }

    def sort_key(self) -> tuple:
        return (self.n, self.d, self.pi.image)


def verify_identity(
    n: int,
    pi: ResiduePermutation,
    partitions: Sequence[Partition] | None = None,
) -> VerificationReport:
    """Check that :func:`forward` bijects the d-distinct partitions of ``n``
    onto the 1-distinct partitions of ``n`` meeting the conditions of ``pi``.

    ``partitions`` may carry a precomputed list of all partitions of ``n``
    so that several permutations can share one enumeration.
    """
    t0 = time.perf_counter()
    if partitions is None:
        partitions = list(partitions_of(n))
    d = pi.d
    rep = VerificationReport(n, pi)

    left = [lam for lam in partitions if is_d_distinct(lam, d)]
    right = [mu for mu in partitions if satisfies_conditions(mu, pi)]
    right_set = set(right)
    rep.count_left = len(left)
    rep.count_right = len(right)
    if rep.count_left != rep.count_right:
        rep.witness("count_mismatch", Partition(()), left=rep.count_left, right=rep.count_right)

    images: set[Partition] = set()
    for lam in left:
        mu = forward(lam, pi)
        if mu.weight != n or len(mu) != len(lam) or mu not in right_set:
            rep.forward_total = False
            rep.witness("forward_out_of_range", lam, image=list(mu.parts))
        if mu in images:
            rep.injective = False
            rep.witness("collision", lam, image=list(mu.parts))
        images.add(mu)
        try:
            back = inverse(mu, pi)
        except (ConditionViolation, NotDistinctError) as exc:
            back = None
            err = str(exc)
        if back != lam:
            rep.roundtrip_fwd_inv = False
            rep.witness("inverse_of_forward", lam, image=list(mu.parts),
                        got=list(back.parts) if back is not None else err)

    for mu in right:
        try:
            lam = inverse(mu, pi)
        except (ConditionViolation, NotDistinctError) as exc:
            rep.roundtrip_inv_fwd = False
            rep.witness("inverse_failed", mu, error=str(exc))
            continue
        if lam.weight != n or not is_d_distinct(lam, d) or forward(lam, pi) != mu:
            rep.roundtrip_inv_fwd = False
            rep.witness("forward_of_inverse", mu, preimage=list(lam.parts))

    rep.seconds = time.perf_counter() - t0
    return rep


@dataclass
class LemmaReport:
    n: int
    m: int
    count_few_parts: int
    count_small_parts: int
    conjugate_bijects: bool

    @property
    def passed(self) -> bool:
        return self.count_few_parts == self.count_small_parts and self.conjugate_bijects

    def __bool__(self) -> bool:
        return self.passed


def verify_lemma_conjugate(
    n: int, m: int, partitions: Sequence[Partition] | None = None
) -> LemmaReport:
    """Partitions of ``n`` with at most ``m`` parts vs. those with every part at most ``m``."""
    if partitions is None:
        partitions = list(partitions_of(n))
    few = {lam for lam in partitions if len(lam) <= m}
    small = {lam for lam in partitions if lam.largest <= m}
    images = {conjugate(lam) for lam in few}
    ok = images == small and len(images) == len(few)
    return LemmaReport(n, m, len(few), len(small), ok)


@dataclass
class RangeSummary:
    n_max: int
    d_max: int
    reports: list[VerificationReport]
    seconds: float

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def failed(self) -> int:
        return sum(not r.passed for r in self.reports)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def summary(self) -> dict:
        return {
            "summary": True,
            "n_max": self.n_max,
            "d_max": self.d_max,
            "checks": self.total,
            "passed": self.total - self.failed,
            "failed": self.failed,
            "all_passed": self.passed,
            "seconds": round(self.seconds, 3),
        }

    def json_lines(self) -> Iterable[str]:
        for r in self.reports:
            yield json.dumps(r.to_dict())
        yield json.dumps(self.summary())


def _verify_n(args: tuple[int, int]) -> list[VerificationReport]:
    n, d_max = args
    parts = list(partitions_of(n))
    return [
        verify_identity(n, pi, parts)
        for d in range(1, d_max + 1)
        for pi in all_permutations(d)
    ]


def verify_range(n_max: int, d_max: int, jobs: int = 1) -> RangeSummary:
    """Run :func:`verify_identity` for every ``n <= n_max``, ``d <= d_max`` and
    every permutation of ``0..d-1``.

    Partitions of each ``n`` are enumerated once and reused across all
    permutations. With ``jobs > 1`` the values of ``n`` are spread over worker
    processes; reports come back sorted by ``(n, d, pi)`` either way.
    """
    if n_max < 0 or d_max < 1:
        raise ValueError("need n_max >= 0 and d_max >= 1")
    t0 = time.perf_counter()
    work = [(n, d_max) for n in range(n_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_verify_n, work))
    else:
        chunks = [_verify_n(w) for w in work]
    reports = sorted((r for c in chunks for r in c), key=VerificationReport.sort_key)
    return RangeSummary(n_max, d_max, reports, time.perf_counter() - t0)
