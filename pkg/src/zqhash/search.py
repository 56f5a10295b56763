"""Parameter search for collision-resistant hash sets.

Random search draws candidate parameter sets with entries in [1, q) (zero
entries only waste a qubit) and keeps the one whose exhaustively certified
epsilon is smallest. Each trial seeds its own generator from (seed, trial
index), so results are reproducible bit for bit regardless of how trials
might be batched or reordered, and any single trial can be replayed alone.

The winning epsilon is recomputed from scratch before returning, so the
result never depends on bookkeeping done during the scan. Exhaustive
search enumerates the whole candidate space in lexicographic order and is
the ground truth the random variant can be checked against on small spaces.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .analysis import ResistanceReport, collision_resistance
from .hashing import MAX_PARAMS, HashForm, ParamSet

MAX_SEARCH_EVALS = 10**10
MAX_EXHAUSTIVE_SPACE = 10**7


@dataclass(frozen=True)
class SearchConfig:
    """Random-search settings. `target_epsilon`, when set, stops the scan
    early once a certified epsilon at or below it is found."""

    q: int
    n: int
    trials: int
    seed: int
    target_epsilon: float | None = None

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"modulus must be at least 2, got {self.q}")
        if not 1 <= self.n <= MAX_PARAMS:
            raise ValueError(
                f"parameter count must be in [1, {MAX_PARAMS}], got {self.n}"
            )
        if self.trials < 1:
            raise ValueError(f"trial count must be positive, got {self.trials}")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if self.target_epsilon is not None and not 0.0 < self.target_epsilon <= 1.0:
            raise ValueError(
                f"target epsilon must be in (0, 1], got {self.target_epsilon}"
            )
        if self.trials * self.q * self.n > MAX_SEARCH_EVALS:
            raise ValueError(
                f"trials * q * n exceeds the {MAX_SEARCH_EVALS:.0e} budget"
            )


@dataclass
class SearchResult:
    """Best certified set found, with the improvement history. `history`
    holds (trial index, epsilon) for each strict improvement, in order."""

    best_set: ParamSet
    report: ResistanceReport
    trials_run: int
    history: list[tuple[int, float]]


def draw_candidate(seed: int, trial: int, q: int, n: int) -> tuple[int, ...]:
    """The candidate examined at a given trial index; entries in [1, q)."""
    rng = np.random.default_rng([seed, trial])
    return tuple(int(v) for v in rng.integers(1, q, size=n))


def _certify(
    elements: tuple[int, ...],
    q: int,
    form: HashForm,
    include_sum_qubit: bool,
) -> tuple[ParamSet, ResistanceReport]:
    params = ParamSet(q, elements)
    return params, collision_resistance(params, form, include_sum_qubit)


def random_search(
    config: SearchConfig, form: HashForm, include_sum_qubit: bool = False
) -> SearchResult:
    """Scan `config.trials` random candidates and return the best. The
    returned report is re-certified by a fresh exhaustive sweep."""
    best_elements: tuple[int, ...] | None = None
    best_epsilon = float("inf")
    history: list[tuple[int, float]] = []
    trials_run = 0
    for trial in range(config.trials):
        trials_run = trial + 1
        elements = draw_candidate(config.seed, trial, config.q, config.n)
        _, report = _certify(elements, config.q, form, include_sum_qubit)
        if report.epsilon < best_epsilon:
            best_elements = elements
            best_epsilon = report.epsilon
            history.append((trial, report.epsilon))
        if (
            config.target_epsilon is not None
            and best_epsilon <= config.target_epsilon
        ):
            break
    assert best_elements is not None
    params, certified = _certify(best_elements, config.q, form, include_sum_qubit)
    if certified.epsilon != best_epsilon:
        raise RuntimeError(
            "re-certification disagreed with the scan; this is a bug"
        )
    return SearchResult(params, certified, trials_run, history)


def exhaustive_search(
    q: int,
    n: int,
    form: HashForm,
    include_sum_qubit: bool = False,
) -> SearchResult:
    """Certify every candidate in [1, q)**n, lexicographically, and return
    the first one attaining the minimal epsilon."""
    if q < 2:
        raise ValueError(f"modulus must be at least 2, got {q}")
    if not 1 <= n <= MAX_PARAMS:
        raise ValueError(f"parameter count must be in [1, {MAX_PARAMS}], got {n}")
    space = (q - 1) ** n
    if space > MAX_EXHAUSTIVE_SPACE:
        raise ValueError(
            f"candidate space {space} exceeds the {MAX_EXHAUSTIVE_SPACE} cap"
        )
    best_elements: tuple[int, ...] | None = None
    best_epsilon = float("inf")
    history: list[tuple[int, float]] = []
    count = 0
    for index, elements in enumerate(itertools.product(range(1, q), repeat=n)):
        count = index + 1
        _, report = _certify(elements, q, form, include_sum_qubit)
        if report.epsilon < best_epsilon:
            best_elements = elements
            best_epsilon = report.epsilon
            history.append((index, report.epsilon))
    assert best_elements is not None
    params, certified = _certify(best_elements, q, form, include_sum_qubit)
    return SearchResult(params, certified, count, history)
