"""Reference pure states, entanglement witnesses, and bipartite measures."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, sqrt

import numpy as np

from .linalg import expectation, hermitian_eigen, hermiticity_deviation, partial_transpose

DETECTION_TOL = -1e-10


@dataclass(frozen=True, eq=False)
class PureState:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex)
        if amp.shape != (1 << self.n,):
            raise ValueError(f"amplitude vector must have length {1 << self.n}")
        if abs(np.linalg.norm(amp) - 1.0) > 1e-12:
            raise ValueError("amplitudes must be normalized")
        object.__setattr__(self, "amplitudes", amp)

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())


@dataclass(frozen=True, eq=False)
class Witness:
    matrix: np.ndarray
    label: str = field(default="witness")

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if hermiticity_deviation(m) > 1e-12:
            raise ValueError("witness matrix must be Hermitian")
        object.__setattr__(self, "matrix", m)


def dicke_state(n: int, k: int) -> PureState:
    """Equal superposition of all basis states with exactly k excitations."""
    if not 0 <= k <= n:
        raise ValueError(f"excitation count must be in 0..{n}")
    amp = np.zeros(1 << n, dtype=complex)
    norm = 1.0 / sqrt(comb(n, k))
    for positions in combinations(range(n), k):
        b = sum(1 << p for p in positions)
        amp[b] = norm
    return PureState(n, amp)


_BASIS_PAIR = {
    "Z": (np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)),
    "X": (np.array([1, 1], dtype=complex) / sqrt(2),
          np.array([1, -1], dtype=complex) / sqrt(2)),
    "Y": (np.array([1, 1j], dtype=complex) / sqrt(2),
          np.array([1, -1j], dtype=complex) / sqrt(2)),
}


def ghz_state(n: int, frame: str = "Z") -> PureState:
    """(|u..u> + |v..v>)/sqrt(2) for the +1/-1 eigenbasis of the frame axis."""
    if n < 2:
        raise ValueError("a GHZ state needs at least 2 qubits")
    try:
        up, down = _BASIS_PAIR[frame]
    except KeyError:
        raise ValueError(f"unknown frame {frame!r}; expected one of "
                         f"{sorted(_BASIS_PAIR)}")
    plus = np.array([1.0 + 0j])
    minus = np.array([1.0 + 0j])
    for _ in range(n):
        plus = np.kron(plus, up)
        minus = np.kron(minus, down)
    return PureState(n, (plus + minus) / sqrt(2))


def make_witness(kind: str, n: int) -> Witness:
    """Fidelity witnesses alpha*I - |psi><psi| for the bundled target states."""
    if kind == "w_type":
        if n != 3:
            raise ValueError("w_type witness is defined for n=3")
        proj = dicke_state(3, 1).projector()
        return Witness((2.0 / 3.0) * np.eye(8) - proj, "w_type_3")
    if kind == "dicke_2_4":
        if n != 4:
            raise ValueError("dicke_2_4 witness is defined for n=4")
        proj = dicke_state(4, 2).projector()
        return Witness((2.0 / 3.0) * np.eye(16) - proj, "dicke_2_4")
    if kind == "ghz_type":
        if n < 2:
            raise ValueError("ghz_type witness needs at least 2 qubits")
        proj = ghz_state(n, "Z").projector()
        return Witness(0.5 * np.eye(1 << n) - proj, f"ghz_type_{n}")
    raise ValueError(f"unknown witness kind {kind!r}")


def evaluate_witness(w: Witness, rho: np.ndarray) -> tuple[float, bool]:
    """Expectation of the witness; detection means a strictly negative value."""
    value = expectation(rho, w.matrix)
    return value, value < DETECTION_TOL


def witness_report(w: Witness, rho: np.ndarray) -> dict:
    value, detects = evaluate_witness(w, rho)
    return {"witness": w.label, "value": value, "detects": detects}


def negativity(rho: np.ndarray, subset, n: int) -> float:
    """Sum of |negative eigenvalues| of the partial transpose."""
    pt = partial_transpose(rho, subset, n)
    eigenvalues, _ = hermitian_eigen(pt)
    return float(-eigenvalues[eigenvalues < 0].sum())


def _sqrt_psd(rho: np.ndarray) -> np.ndarray:
    w, v = hermitian_eigen(rho)
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def concurrence(rho: np.ndarray) -> float:
    """Two-qubit concurrence via the Hermitian reformulation.

    The usual descending lambdas are the square roots of the eigenvalues of
    rho (Y x Y) rho* (Y x Y); that product is similar to the Hermitian PSD
    matrix sqrt(rho) (Y x Y) rho* (Y x Y) sqrt(rho), whose spectrum a
    Hermitian solver delivers directly.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("concurrence is defined for a two-qubit state")
    if hermiticity_deviation(rho) > 1e-10:
        raise ValueError("state must be Hermitian")
    if abs(complex(np.trace(rho)) - 1.0) > 1e-10:
        raise ValueError("state must have unit trace")
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    yy = np.kron(sy, sy)
    root = _sqrt_psd(rho)
    m = root @ yy @ rho.conj() @ yy @ root
    w, _ = hermitian_eigen(m)
    lam = np.sqrt(np.clip(w, 0.0, None))
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))
