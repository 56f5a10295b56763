"""Minimal real-amplitude state-vector simulator.

Supports exactly the gates the hash constructions need: Hadamard, Ry,
controlled Ry with open or filled controls, and the uniformly controlled
(multiplexed) Ry. All of these have real matrices, so amplitudes are kept
as real float64 throughout.

Conventions:
  - Qubit 0 is the most significant bit of a basis index. For a register
    value j written as bits j_0 j_1 ... j_{n-1}, bit j_0 lives on qubit 0.
  - Angles are radians. Ry(theta) = [[cos(t), -sin(t)], [sin(t), cos(t)]]
    with t = theta / 2, so Ry has period 4*pi.
  - Gate functions mutate the passed state in place and return it.
  - States are plain data; nothing here touches shared globals, so values
    can be handed freely between threads as long as a single state is not
    mutated concurrently.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

MAX_QUBITS = 24

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass
class StateVector:
    """Amplitudes of an m-qubit register, length 2**m, qubit 0 as MSB."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        self.amplitudes = np.asarray(self.amplitudes, dtype=np.float64)
        if self.amplitudes.shape != (1 << self.num_qubits,):
            raise ValueError(
                f"amplitude vector must have length 2**{self.num_qubits}, "
                f"got shape {self.amplitudes.shape}"
            )

    def copy(self) -> "StateVector":
        return StateVector(self.num_qubits, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def zero_state(num_qubits: int) -> StateVector:
    """All-zeros basis state |0...0> on `num_qubits` qubits."""
    if not 1 <= num_qubits <= MAX_QUBITS:
        raise ValueError(
            f"qubit count must be in [1, {MAX_QUBITS}], got {num_qubits}"
        )
    amps = np.zeros(1 << num_qubits)
    amps[0] = 1.0
    return StateVector(num_qubits, amps)


def basis_state(num_qubits: int, index: int) -> StateVector:
    """Computational-basis state |index> on `num_qubits` qubits."""
    state = zero_state(num_qubits)
    if not 0 <= index < 1 << num_qubits:
        raise ValueError(f"basis index {index} out of range for {num_qubits} qubits")
    state.amplitudes[0] = 0.0
    state.amplitudes[index] = 1.0
    return state


def _check_target(state: StateVector, target: int) -> None:
    if not 0 <= target < state.num_qubits:
        raise ValueError(
            f"target qubit {target} out of range for {state.num_qubits} qubits"
        )


def _check_angle(theta: float) -> None:
    if not math.isfinite(theta):
        raise ValueError(f"rotation angle must be finite, got {theta!r}")


def _pair_indices(num_qubits: int, target: int, fixed: Sequence[tuple[int, int]] = ()):
    # Full multi-axis selectors for the target=0 and target=1 subspaces,
    # with any control axes pinned to their required bit.
    sel: list[object] = [slice(None)] * num_qubits
    for qubit, bit in fixed:
        sel[qubit] = bit
    lo = list(sel)
    hi = list(sel)
    lo[target] = 0
    hi[target] = 1
    return tuple(lo), tuple(hi)


def _rotate_pair(view: np.ndarray, lo, hi, cos_half: float, sin_half: float) -> None:
    a0 = view[lo].copy()
    a1 = view[hi]
    view[lo] = cos_half * a0 - sin_half * a1
    view[hi] = sin_half * a0 + cos_half * a1


def apply_ry(state: StateVector, target: int, theta: float) -> StateVector:
    """Rotate `target` about the Bloch y-axis by `theta`, in place."""
    _check_target(state, target)
    _check_angle(theta)
    half = theta / 2.0
    view = state.amplitudes.reshape([2] * state.num_qubits)
    lo, hi = _pair_indices(state.num_qubits, target)
    _rotate_pair(view, lo, hi, math.cos(half), math.sin(half))
    return state


def apply_h(state: StateVector, target: int) -> StateVector:
    """Hadamard on `target`, in place."""
    _check_target(state, target)
    view = state.amplitudes.reshape([2] * state.num_qubits)
    lo, hi = _pair_indices(state.num_qubits, target)
    a0 = view[lo].copy()
    a1 = view[hi]
    view[lo] = (a0 + a1) * _INV_SQRT2
    view[hi] = (a0 - a1) * _INV_SQRT2
    return state


def _check_controls(
    state: StateVector, controls: Sequence[tuple[int, int]], target: int
) -> None:
    seen: set[int] = set()
    for qubit, bit in controls:
        if not 0 <= qubit < state.num_qubits:
            raise ValueError(
                f"control qubit {qubit} out of range for {state.num_qubits} qubits"
            )
        if bit not in (0, 1):
            raise ValueError(f"control polarity must be 0 or 1, got {bit!r}")
        if qubit == target:
            raise ValueError(f"control qubit {qubit} overlaps the target")
        if qubit in seen:
            raise ValueError(f"control qubit {qubit} listed twice")
        seen.add(qubit)


def apply_controlled_ry(
    state: StateVector,
    controls: Sequence[tuple[int, int]],
    target: int,
    theta: float,
) -> StateVector:
    """Ry(theta) on `target`, restricted to basis states where every control
    qubit holds its required bit. Controls are (qubit, bit) pairs; bit 1 is a
    filled dot, bit 0 an open dot. In place."""
    _check_target(state, target)
    _check_angle(theta)
    _check_controls(state, controls, target)
    half = theta / 2.0
    view = state.amplitudes.reshape([2] * state.num_qubits)
    lo, hi = _pair_indices(state.num_qubits, target, controls)
    _rotate_pair(view, lo, hi, math.cos(half), math.sin(half))
    return state


def apply_ucr(
    state: StateVector,
    control_qubits: Sequence[int],
    target: int,
    thetas: Sequence[float],
) -> StateVector:
    """Uniformly controlled Ry: for each basis value j of the control
    register, rotate `target` by thetas[j] on that subspace. The control
    register is read with control_qubits[0] as the most significant bit.
    In place."""
    _check_target(state, target)
    controls = list(control_qubits)
    n = len(controls)
    if len(thetas) != 1 << n:
        raise ValueError(
            f"need 2**{n} angles for {n} control qubits, got {len(thetas)}"
        )
    seen: set[int] = set()
    for qubit in controls:
        if not 0 <= qubit < state.num_qubits:
            raise ValueError(
                f"control qubit {qubit} out of range for {state.num_qubits} qubits"
            )
        if qubit == target or qubit in seen:
            raise ValueError(f"control qubit {qubit} overlaps another wire")
        seen.add(qubit)
    half = np.asarray(thetas, dtype=np.float64) / 2.0
    if not np.all(np.isfinite(half)):
        raise ValueError("rotation angles must be finite")

    m = state.num_qubits
    view = state.amplitudes.reshape([2] * m)
    rest = [ax for ax in range(m) if ax not in seen and ax != target]
    # Axis order: controls (MSB first), untouched qubits, target last.
    arr = np.moveaxis(view, controls + rest + [target], range(m))
    shape = [2] * n + [1] * (m - 1 - n)
    cos_half = np.cos(half).reshape(shape)
    sin_half = np.sin(half).reshape(shape)
    a0 = arr[..., 0].copy()
    a1 = arr[..., 1]
    arr[..., 0] = cos_half * a0 - sin_half * a1
    arr[..., 1] = sin_half * a0 + cos_half * a1
    return state


def inner_product(a: StateVector, b: StateVector) -> float:
    """Real inner product sum_i a_i * b_i of two equal-width states."""
    if a.num_qubits != b.num_qubits:
        raise ValueError(
            f"qubit counts differ: {a.num_qubits} vs {b.num_qubits}"
        )
    return float(np.dot(a.amplitudes, b.amplitudes))


@dataclass(frozen=True)
class GateOp:
    """One gate of a circuit description.

    kind "h": Hadamard on `target`.
    kind "ry": Ry(angle) on `target`.
    kind "cry": Ry(angle) on `target` under `controls` (qubit, bit) pairs.
    kind "ucr": multiplexed Ry over `control_qubits` with 2**n `angles`.
    """

    kind: str
    target: int
    angle: float = 0.0
    controls: tuple[tuple[int, int], ...] = ()
    control_qubits: tuple[int, ...] = ()
    angles: tuple[float, ...] = ()

    def is_multi_qubit(self) -> bool:
        return bool(self.controls) or bool(self.control_qubits)


def apply_gate(state: StateVector, op: GateOp) -> StateVector:
    if op.kind == "h":
        return apply_h(state, op.target)
    if op.kind == "ry":
        return apply_ry(state, op.target, op.angle)
    if op.kind == "cry":
        return apply_controlled_ry(state, op.controls, op.target, op.angle)
    if op.kind == "ucr":
        return apply_ucr(state, op.control_qubits, op.target, op.angles)
    raise ValueError(f"unknown gate kind {op.kind!r}")


def run_circuit(state: StateVector, ops: Iterable[GateOp]) -> StateVector:
    for op in ops:
        apply_gate(state, op)
    assert abs(state.norm() - 1.0) < 1e-10, "state norm drifted"
    return state


def scale_angles(ops: Iterable[GateOp], factor: float) -> tuple[GateOp, ...]:
    """Copy of `ops` with every rotation angle multiplied by `factor`.
    Hadamards are untouched. Used by verification as a fault-injection hook."""
    if factor == 1.0:
        return tuple(ops)
    out = []
    for op in ops:
        if op.kind == "ucr":
            out.append(replace(op, angles=tuple(a * factor for a in op.angles)))
        elif op.kind in ("ry", "cry"):
            out.append(replace(op, angle=op.angle * factor))
        else:
            out.append(op)
    return tuple(out)
