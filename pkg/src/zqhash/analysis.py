"""Bias and collision-resistance analysis.

The quality measures here are all exhaustive sweeps over the nonzero
residues mod q:

  - bias(B, x) is |mean of exp(2*pi*i*b*x/q) over b in B|; the epsilon of a
    set is its worst bias over x != 0.
  - the closed-form inner product of two single-qubit-form hash states is
    the product over parameters of cos(pi * s_j * (x1 - x2) / q), times one
    more factor cos(pi * sum(S) * (x1 - x2) / q) when the sum qubit is on.
    The shallow form has the same value as single-qubit with the sum qubit,
    so `closed_inner_shallow` evaluates the identical expression.
  - collision resistance of a construction is the worst |inner product|
    over nonzero state differences.

Everything depends on x1 and x2 only through (x1 - x2), so sweeps run over
the difference. Cosine arguments keep their integer numerators reduced mod
2q before the float division (cos(pi * k / q) has period 2q in k), which
makes the sweep values bit-identical to the scalar entry points.

Sweeps allocate O(q) float arrays and are capped at q <= 2**20.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hashing import (
    BiasedSet,
    HashForm,
    ParamSet,
    build_shallow_hash,
    build_single_qubit_hash,
    build_standard_hash,
    derive_biased_set,
)
from .statevec import StateVector, inner_product

MAX_SWEEP_MODULUS = 1 << 20


@dataclass
class ResistanceReport:
    """Certified worst case of an exhaustive residue sweep.

    `values[i]` is the certified magnitude at residue x = i + 1; `epsilon`
    is their maximum and `worst_x` the smallest x attaining it.
    """

    q: int
    epsilon: float
    worst_x: int
    values: np.ndarray

    def table(self) -> list[tuple[int, float]]:
        return [(i + 1, float(v)) for i, v in enumerate(self.values)]


def _check_sweep_modulus(q: int) -> None:
    if q > MAX_SWEEP_MODULUS:
        raise ValueError(
            f"exhaustive sweep capped at q <= {MAX_SWEEP_MODULUS}, got {q}"
        )


def _report_from_values(q: int, values: np.ndarray) -> ResistanceReport:
    idx = int(np.argmax(values))
    return ResistanceReport(q, float(values[idx]), idx + 1, values)


def _phase_means(q: int, elements: tuple[int, ...], xs: np.ndarray) -> np.ndarray:
    b = np.asarray(elements, dtype=np.int64)
    phases = (2.0 * np.pi / q) * ((b[:, None] * xs[None, :]) % q)
    return np.exp(1j * phases).mean(axis=0)


def bias(biased: BiasedSet, x: int) -> float:
    """Magnitude of the mean q-th-root-of-unity phase of B at point x."""
    x = int(x)
    if not 0 <= x < biased.q:
        raise ValueError(f"x must be in [0, q), got {x} with q={biased.q}")
    return float(abs(_phase_means(biased.q, biased.elements, np.array([x]))[0]))


def shift_normalize(biased: BiasedSet) -> BiasedSet:
    """Translate B so its first element is 0; bias at every x is unchanged
    because a common shift only rotates the summed phases."""
    first = biased.elements[0]
    return BiasedSet(biased.q, tuple(b - first for b in biased.elements))


def epsilon_of_biased_set(biased: BiasedSet) -> ResistanceReport:
    """Worst bias of B over all x in [1, q), with the full per-x table."""
    q = biased.q
    _check_sweep_modulus(q)
    values = np.empty(q - 1)
    block = max(1, (1 << 22) // biased.size)
    for start in range(1, q, block):
        xs = np.arange(start, min(start + block, q), dtype=np.int64)
        values[start - 1 : start - 1 + xs.shape[0]] = np.abs(
            _phase_means(q, biased.elements, xs)
        )
    return _report_from_values(q, values)


def _closed_inner_values(
    q: int, elements: tuple[int, ...], dx: np.ndarray, with_sum: bool
) -> np.ndarray:
    # Signed inner products for an array of differences dx. One cosine
    # factor per parameter, multiplied in parameter order so scalar and
    # sweep callers agree bitwise.
    dx = np.asarray(dx, dtype=np.int64)
    out = np.ones(dx.shape)
    factors = list(elements)
    if with_sum:
        factors.append(sum(elements))
    for s in factors:
        out = out * np.cos((np.pi / q) * ((s * dx) % (2 * q)))
    return out


def closed_inner_single(
    params: ParamSet, x1: int, x2: int, include_sum_qubit: bool = False
) -> float:
    """Inner product of the single-qubit-form hashes of x1 and x2, evaluated
    in closed form. Depends only on x1 - x2."""
    dx = np.array([int(x1) - int(x2)], dtype=np.int64)
    return float(
        _closed_inner_values(params.q, params.elements, dx, include_sum_qubit)[0]
    )


def closed_inner_shallow(params: ParamSet, x1: int, x2: int) -> float:
    """Inner product of the shallow-form hashes of x1 and x2. Equals the
    single-qubit value with the sum qubit on, so this evaluates that same
    expression; simulation provides the independent cross-check."""
    return closed_inner_single(params, x1, x2, include_sum_qubit=True)


def simulated_inner(
    form: HashForm,
    hash_set: ParamSet | BiasedSet,
    x1: int,
    x2: int,
    include_sum_qubit: bool = False,
) -> float:
    """Inner product of the hashes of x1 and x2, measured on simulated
    states built gate by gate. Slow next to the closed forms; this is the
    independent route they are checked against."""
    if form is HashForm.STANDARD:
        biased = (
            hash_set
            if isinstance(hash_set, BiasedSet)
            else derive_biased_set(hash_set)
        )
        return inner_product(
            build_standard_hash(biased, x1), build_standard_hash(biased, x2)
        )
    if not isinstance(hash_set, ParamSet):
        raise ValueError(f"{form.value} form needs a parameter set")
    if form is HashForm.SHALLOW:
        return inner_product(
            build_shallow_hash(hash_set, x1), build_shallow_hash(hash_set, x2)
        )
    if form is HashForm.SINGLE_QUBIT:
        return inner_product(
            build_single_qubit_hash(hash_set, x1, include_sum_qubit),
            build_single_qubit_hash(hash_set, x2, include_sum_qubit),
        )
    raise ValueError(f"unknown form {form!r}")


def collision_resistance(
    params: ParamSet, form: HashForm, include_sum_qubit: bool = False
) -> ResistanceReport:
    """Worst |inner product| over all nonzero differences mod q, from the
    closed form. The standard and shallow forms share the shallow value."""
    q = params.q
    _check_sweep_modulus(q)
    with_sum = True
    if form is HashForm.SINGLE_QUBIT:
        with_sum = include_sum_qubit
    dx = np.arange(1, q, dtype=np.int64)
    values = np.abs(_closed_inner_values(q, params.elements, dx, with_sum))
    return _report_from_values(q, values)


def cosine_sum_check(biased: BiasedSet, x: int) -> tuple[float, float]:
    """(|mean cosine|, |mean phase|) of B at x != 0. The first never exceeds
    the second, since the cosine sum is the real part of the phase sum."""
    x = int(x)
    if not 0 < x < biased.q:
        raise ValueError(f"x must be in [1, q), got {x} with q={biased.q}")
    mean = _phase_means(biased.q, biased.elements, np.array([x]))[0]
    return float(abs(mean.real)), float(abs(mean))


def equality_test_prob(a: StateVector, b: StateVector) -> float:
    """Probability that a swap-style equality test accepts the pair:
    (1 + <a|b>**2) / 2. Equal states give 1, orthogonal ones 1/2."""
    ip = inner_product(a, b)
    return (1.0 + ip * ip) / 2.0
