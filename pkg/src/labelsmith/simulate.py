"""Simulation harness comparing assignment policies.

Replays identical contributor arrival sequences against the deficit-
prioritized policy (the real scheduler ordering) and a uniform-random
baseline, measuring how many submissions it takes until a target fraction
of the corpus reaches its response quota.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from datetime import datetime, timezone

from .scheduler import Candidate, choose_next


@dataclass(frozen=True)
class PolicyRun:
    submissions_to_target: int
    files_at_quota: int


@dataclass(frozen=True)
class SimulationResult:
    files: int
    required: int
    contributors: int
    seeds: int
    target_fraction: float
    prioritized: list[int]
    uniform: list[int]

    @property
    def prioritized_mean(self) -> float:
        return sum(self.prioritized) / len(self.prioritized)

    @property
    def uniform_mean(self) -> float:
        return sum(self.uniform) / len(self.uniform)

    @property
    def non_worse_fraction(self) -> float:
        wins = sum(1 for p, u in zip(self.prioritized, self.uniform) if p <= u)
        return wins / len(self.prioritized)


def _arrival_sequence(rng: random.Random, contributors: int, rounds: int) -> list[int]:
    """Round-robin arrivals with a shuffled contributor order per round."""
    order = list(range(contributors))
    arrivals: list[int] = []
    for _ in range(rounds):
        rng.shuffle(order)
        arrivals.extend(order)
    return arrivals


_EPOCH = datetime(2000, 1, 1, tzinfo=timezone.utc)


def _run_prioritized(
    arrivals: list[int], files: int, required: int, contributors: int, target: int
) -> PolicyRun:
    candidates = [
        Candidate(
            file_id=str(f),
            required=required,
            received=0,
            project_created_at=_EPOCH,
            project_name="corpus",
            relative_path=f"{f:06d}.java",
        )
        for f in range(files)
    ]
    labelled: list[set[int]] = [set() for _ in range(contributors)]
    at_quota = 0
    submissions = 0
    for user in arrivals:
        done = labelled[user]
        if len(done) == files:
            continue
        pick = choose_next(c for f, c in enumerate(candidates) if f not in done)
        if pick is None:
            continue
        f = int(pick.file_id)
        done.add(f)
        refreshed = Candidate(
            file_id=pick.file_id,
            required=required,
            received=pick.received + 1,
            project_created_at=_EPOCH,
            project_name="corpus",
            relative_path=pick.relative_path,
        )
        candidates[f] = refreshed
        submissions += 1
        if refreshed.received == required:
            at_quota += 1
            if at_quota >= target:
                return PolicyRun(submissions, at_quota)
    return PolicyRun(submissions, at_quota)


def _run_uniform(
    arrivals: list[int],
    files: int,
    required: int,
    contributors: int,
    target: int,
    rng: random.Random,
) -> PolicyRun:
    received = [0] * files
    remaining = [list(range(files)) for _ in range(contributors)]
    at_quota = 0
    submissions = 0
    for user in arrivals:
        pool = remaining[user]
        if not pool:
            continue
        idx = rng.randrange(len(pool))
        f = pool[idx]
        pool[idx] = pool[-1]
        pool.pop()
        received[f] += 1
        submissions += 1
        if received[f] == required:
            at_quota += 1
            if at_quota >= target:
                return PolicyRun(submissions, at_quota)
    return PolicyRun(submissions, at_quota)


def run_simulation(
    files: int = 200,
    required: int = 3,
    contributors: int = 20,
    seeds: int = 1000,
    target_fraction: float = 0.5,
) -> SimulationResult:
    """Compare the two policies over ``seeds`` independent runs.

    Both policies in a run see the same arrival sequence; only the uniform
    baseline consumes additional randomness for its file choices.
    """
    target = math.ceil(files * target_fraction)
    prioritized: list[int] = []
    uniform: list[int] = []
    for seed in range(seeds):
        arrival_rng = random.Random(seed)
        arrivals = _arrival_sequence(arrival_rng, contributors, rounds=files)
        p = _run_prioritized(arrivals, files, required, contributors, target)
        choice_rng = random.Random(10_000_019 + seed)
        u = _run_uniform(arrivals, files, required, contributors, target, choice_rng)
        prioritized.append(p.submissions_to_target)
        uniform.append(u.submissions_to_target)
    return SimulationResult(
        files=files,
        required=required,
        contributors=contributors,
        seeds=seeds,
        target_fraction=target_fraction,
        prioritized=prioritized,
        uniform=uniform,
    )
