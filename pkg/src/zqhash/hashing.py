"""Hash-state constructions over the residues mod q.

Three circuit families map an integer x to a quantum state whose pairwise
inner products certify collision resistance:

  - standard: an n-qubit address register in uniform superposition plus one
    multiplexed Ry on a target qubit, driven by a residue set B of size 2**n.
    The branch angle for address j is 4*pi * B[j] * x / q.
  - shallow: the depth-reduced equivalent for B generated additively from n
    parameters S. One Hadamard layer, then n two-qubit controlled rotations,
    each Ry(4*pi * s_k * x / q) on the target controlled by address qubit k.
    No multi-qubit gate touches more than two wires.
  - single-qubit: no entanglement at all. Qubit j carries Ry(2*pi * s_j * x
    / q)|0>; an optional extra qubit carries the same rotation for sum(S).

Every angle is an exact integer multiple of pi/q, so the integer numerator
is reduced before the float division. Ry has period 4*pi, which makes the
reduction mod q for the 4*pi forms and mod 2q for the 2*pi forms exact at
the state level; it keeps float error flat no matter how large s * x grows.

Index convention matches `statevec`: address value j is read with qubit 0
as the most significant bit, both for B ordering and for which parameter a
given address qubit toggles.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .statevec import GateOp, StateVector, run_circuit, zero_state

MAX_PARAMS = 20


@dataclass(frozen=True)
class ParamSet:
    """Generator parameters S = (s_0, ..., s_{n-1}) over the residues mod q.

    Elements are reduced mod q on construction. Duplicates and zeros are
    allowed; they just make for a weak hash.
    """

    q: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"modulus must be at least 2, got {self.q}")
        n = len(self.elements)
        if not 1 <= n <= MAX_PARAMS:
            raise ValueError(
                f"parameter count must be in [1, {MAX_PARAMS}], got {n}"
            )
        object.__setattr__(
            self, "elements", tuple(int(s) % self.q for s in self.elements)
        )

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def total(self) -> int:
        return sum(self.elements)

    @property
    def has_duplicates(self) -> bool:
        return len(set(self.elements)) < len(self.elements)


@dataclass(frozen=True)
class BiasedSet:
    """An explicit residue set B = (b_0, ..., b_{d-1}) mod q, order kept."""

    q: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"modulus must be at least 2, got {self.q}")
        if not self.elements:
            raise ValueError("residue set must not be empty")
        object.__setattr__(
            self, "elements", tuple(int(b) % self.q for b in self.elements)
        )

    @property
    def size(self) -> int:
        return len(self.elements)


class HashForm(enum.Enum):
    STANDARD = "standard"
    SHALLOW = "shallow"
    SINGLE_QUBIT = "single-qubit"


def linear_combination(params: ParamSet, j: int) -> int:
    """Subset sum of S selected by the bits of j (qubit-0 bit first), mod q."""
    n = params.size
    if not 0 <= j < 1 << n:
        raise ValueError(f"index {j} out of range for {n} parameters")
    total = 0
    for k, s in enumerate(params.elements):
        if (j >> (n - 1 - k)) & 1:
            total += s
    return total % params.q


def derive_biased_set(params: ParamSet) -> BiasedSet:
    """The residue set of all 2**n subset sums of S, in address order."""
    return BiasedSet(
        params.q,
        tuple(linear_combination(params, j) for j in range(1 << params.size)),
    )


def _angle_4pi(k: int, q: int) -> float:
    # 4*pi*k/q with k reduced mod q; exact because Ry has period 4*pi.
    return 4.0 * math.pi * (k % q) / q


def _angle_2pi(k: int, q: int) -> float:
    # 2*pi*k/q with k reduced mod 2q; the same 4*pi periodicity argument.
    return 2.0 * math.pi * (k % (2 * q)) / q


def standard_hash_circuit(biased: BiasedSet, x: int) -> tuple[GateOp, ...]:
    """Gate list for the standard form: H layer on the address register,
    then one multiplexed Ry on the target. Needs |B| to be a power of two."""
    d = biased.size
    if d & (d - 1):
        raise ValueError(f"set size must be a power of two, got {d}")
    n = d.bit_length() - 1
    x = int(x)
    ops = [GateOp("h", target=k) for k in range(n)]
    ops.append(
        GateOp(
            "ucr",
            target=n,
            control_qubits=tuple(range(n)),
            angles=tuple(_angle_4pi(b * x, biased.q) for b in biased.elements),
        )
    )
    return tuple(ops)


def build_standard_hash(biased: BiasedSet, x: int) -> StateVector:
    """Hash state of x for an explicit residue set, on log2|B| + 1 qubits."""
    ops = standard_hash_circuit(biased, x)
    return run_circuit(zero_state(ops[-1].target + 1), ops)


def shallow_hash_circuit(params: ParamSet, x: int) -> tuple[GateOp, ...]:
    """Gate list for the shallow form: H layer, then one two-qubit controlled
    rotation per parameter, all targeting the last qubit."""
    n = params.size
    x = int(x)
    ops = [GateOp("h", target=k) for k in range(n)]
    for k, s in enumerate(params.elements):
        ops.append(
            GateOp(
                "cry",
                target=n,
                controls=((k, 1),),
                angle=_angle_4pi(s * x, params.q),
            )
        )
    return tuple(ops)


def build_shallow_hash(params: ParamSet, x: int) -> StateVector:
    """Hash state of x built gate-for-gate from the shallow circuit."""
    ops = shallow_hash_circuit(params, x)
    return run_circuit(zero_state(params.size + 1), ops)


def single_qubit_hash_circuit(
    params: ParamSet, x: int, include_sum_qubit: bool = False
) -> tuple[GateOp, ...]:
    """Gate list for the entanglement-free form: one Ry per parameter, each
    on its own qubit, plus one more for sum(S) when requested. Depth 1."""
    x = int(x)
    ops = [
        GateOp("ry", target=j, angle=_angle_2pi(s * x, params.q))
        for j, s in enumerate(params.elements)
    ]
    if include_sum_qubit:
        ops.append(
            GateOp(
                "ry",
                target=params.size,
                angle=_angle_2pi(params.total * x, params.q),
            )
        )
    return tuple(ops)


def build_single_qubit_hash(
    params: ParamSet, x: int, include_sum_qubit: bool = False
) -> StateVector:
    """Product-state hash of x; n qubits, or n + 1 with the sum qubit."""
    ops = single_qubit_hash_circuit(params, x, include_sum_qubit)
    return run_circuit(zero_state(len(ops)), ops)


def separability_defect(state: StateVector) -> float:
    """Largest second singular value over all contiguous bipartitions; zero
    (up to float error) exactly when the state is a full product state."""
    m = state.num_qubits
    worst = 0.0
    for cut in range(1, m):
        sv = np.linalg.svd(
            state.amplitudes.reshape(1 << cut, -1), compute_uv=False
        )
        if sv.shape[0] > 1:
            worst = max(worst, float(sv[1]))
    return worst
