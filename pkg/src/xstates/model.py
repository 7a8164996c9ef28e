"""X-state parameterization and its density-matrix realizations.

An n-qubit X state is

    rho = 2**-n * sum_i ( d_i * F(Dz_i) + a_i * F(Axy_i) )

where Dz_i = z_product(i, n), Axy_i = xy_product(i, n), F is one of the
named axis frames and d_0 = 1 fixes the trace.  In the Z frame the nonzero
entries of rho lie only on the diagonal and the anti-diagonal (the letter-X
pattern); other frames conjugate that pattern by local rotations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import hermiticity_deviation, hermitian_eigen
from .pauli import FRAMES, PauliString, xy_product, z_product

MAX_QUBITS = 12

# dense operator stacks are cached up to this size (2**7 * 64 * 64 complex)
_STACK_MAX = 6

VALID_TRACE_TOL = 1e-10
VALID_HERM_TOL = 1e-10
VALID_EIG_TOL = -1e-10


@dataclass(frozen=True)
class XStateParams:
    """The 2**(n+1) - 1 free real parameters of an n-qubit X state."""

    n: int
    d: tuple[float, ...]
    a: tuple[float, ...]
    frame: str = "Z"

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        size = 1 << self.n
        if len(self.d) != size:
            raise ValueError(f"d must have length {size}, got {len(self.d)}")
        if len(self.a) != size:
            raise ValueError(f"a must have length {size}, got {len(self.a)}")
        if self.d[0] != 1.0:
            raise ValueError("d[0] must equal 1 (trace normalization)")
        if not all(math.isfinite(v) for v in self.d + self.a):
            raise ValueError("parameters must be finite reals")
        if self.frame not in FRAMES:
            raise ValueError(f"unknown frame {self.frame!r}; expected one of "
                             f"{sorted(FRAMES)}")

    @classmethod
    def build(cls, n: int, frame: str = "Z", d: dict[int, float] | None = None,
              a: dict[int, float] | None = None) -> "XStateParams":
        """Construct from sparse index -> coefficient maps (d[0] implied 1)."""
        dv = [0.0] * (1 << n)
        av = [0.0] * (1 << n)
        dv[0] = 1.0
        for i, v in (d or {}).items():
            dv[i] = float(v)
        for i, v in (a or {}).items():
            av[i] = float(v)
        return cls(n, tuple(dv), tuple(av), frame)


@dataclass(frozen=True)
class StateReport:
    trace_deviation: float
    hermiticity_deviation: float
    min_eigenvalue: float
    is_valid: bool

    def to_json(self) -> dict:
        return {
            "trace_deviation": self.trace_deviation,
            "hermiticity_deviation": self.hermiticity_deviation,
            "min_eigenvalue": self.min_eigenvalue,
            "is_valid": self.is_valid,
        }


def family_operators(n: int, frame: str = "Z") -> list[PauliString]:
    """Identity, then the frame-relabeled z-products and xy-products in index order."""
    f = FRAMES[frame]
    ops = [PauliString.identity(n)]
    ops += [f.apply(z_product(i, n)) for i in range(1, 1 << n)]
    ops += [f.apply(xy_product(i, n)) for i in range(1 << n)]
    return ops


@lru_cache(maxsize=None)
def _op_stack(n: int, frame: str) -> np.ndarray:
    dim = 1 << n
    ops = family_operators(n, frame)
    stack = np.zeros((len(ops), dim, dim), dtype=complex)
    for k, op in enumerate(ops):
        rows, cols, vals = op.matrix_elements()
        stack[k, rows, cols] = vals
    stack.setflags(write=False)
    return stack


def _coefficient_vector(p: XStateParams) -> np.ndarray:
    return np.concatenate([np.asarray(p.d, dtype=float),
                           np.asarray(p.a, dtype=float)])


def materialize(p: XStateParams) -> np.ndarray:
    """The dense density matrix of the parameterized X state."""
    dim = 1 << p.n
    coeffs = _coefficient_vector(p)
    if p.n <= _STACK_MAX:
        return np.tensordot(coeffs, _op_stack(p.n, p.frame), axes=1) / dim
    rho = np.zeros((dim, dim), dtype=complex)
    for c, op in zip(coeffs, family_operators(p.n, p.frame)):
        if c == 0.0:
            continue
        rows, cols, vals = op.matrix_elements()
        rho[rows, cols] += c * vals
    return rho / dim


def _raw_coefficients(rho: np.ndarray, n: int, frame: str) -> np.ndarray:
    if n <= _STACK_MAX:
        return np.einsum("kij,...ji->...k", _op_stack(n, frame), rho).real
    coeffs = np.empty(2 << n, dtype=float)
    for k, op in enumerate(family_operators(n, frame)):
        rows, cols, vals = op.matrix_elements()
        coeffs[k] = np.sum(vals * rho[cols, rows]).real
    return coeffs


def decompose(rho: np.ndarray, n: int, frame: str = "Z") -> tuple[XStateParams, float]:
    """Project onto the frame's X family.

    Returns the recovered parameters and the max-norm residual of rho outside
    the family.  d[0] is pinned to 1, so any trace deficit shows up in the
    residual rather than in the parameters.
    """
    rho = np.asarray(rho, dtype=complex)
    dim = 1 << n
    if rho.shape != (dim, dim):
        raise ValueError(f"state dimension {rho.shape} does not match n={n}")
    coeffs = _raw_coefficients(rho, n, frame)
    size = 1 << n
    params = XStateParams(n, (1.0,) + tuple(coeffs[1:size]),
                          tuple(coeffs[size:]), frame)
    residual = float(np.max(np.abs(rho - materialize(params))))
    return params, residual


def family_residual(rho: np.ndarray, n: int, frame: str = "Z") -> "float | np.ndarray":
    """Max-norm weight of rho outside the frame's X family.

    Accepts a single (dim, dim) matrix or any stack (..., dim, dim); batched
    input requires n <= 6 where the dense operator stack is cached.
    """
    rho = np.asarray(rho, dtype=complex)
    dim = 1 << n
    if rho.shape[-2:] != (dim, dim):
        raise ValueError(f"state dimension {rho.shape[-2:]} does not match n={n}")
    if rho.ndim == 2:
        return decompose(rho, n, frame)[1]
    if n > _STACK_MAX:
        raise ValueError(f"batched residual supported only for n <= {_STACK_MAX}")
    stack = _op_stack(n, frame)
    coeffs = np.einsum("kij,...ji->...k", stack, rho).real
    coeffs[..., 0] = 1.0
    proj = np.einsum("...k,kij->...ij", coeffs, stack) / dim
    return np.max(np.abs(rho - proj), axis=(-2, -1))


def validate(p: XStateParams) -> StateReport:
    """Physicality report (trace, Hermiticity, positive semidefiniteness)."""
    rho = materialize(p)
    trace_dev = abs(complex(np.trace(rho)) - 1.0)
    herm_dev = hermiticity_deviation(rho)
    eigenvalues, _ = hermitian_eigen(rho)
    min_eig = float(eigenvalues[-1])
    ok = (trace_dev <= VALID_TRACE_TOL and herm_dev <= VALID_HERM_TOL
          and min_eig >= VALID_EIG_TOL)
    return StateReport(float(trace_dev), herm_dev, min_eig, ok)


# ---- named families ---------------------------------------------------------

def werner(p: float) -> XStateParams:
    """(1-p)/4 * I + p * |Phi+><Phi+| as two-qubit X-state parameters."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {p}")
    return XStateParams.build(2, d={3: p}, a={0: p, 3: -p})


def bell_diagonal(a0: float, a3: float, d3: float) -> XStateParams:
    """The three-coefficient two-qubit family with maximally mixed marginals."""
    return XStateParams.build(2, d={3: d3}, a={0: a0, 3: a3})


def ghz_params(n: int, frame: str = "Z") -> XStateParams:
    """Parameters of the GHZ projector, identical in every frame.

    d_i = 1 exactly on even-popcount indices; a_i alternates +1/-1 on
    popcount 0/2 mod 4 and vanishes on odd popcount.
    """
    if not 2 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must be in 2..{MAX_QUBITS}, got {n}")
    d = {}
    a = {}
    for i in range(1 << n):
        w = i.bit_count()
        if w % 2 == 0 and i:
            d[i] = 1.0
        if w % 4 == 0:
            a[i] = 1.0
        elif w % 4 == 2:
            a[i] = -1.0
    return XStateParams.build(n, frame, d=d, a=a)


_NAMED_EXAMPLES = {
    "w_witness_state_3": dict(
        n=3, frame="X",
        d={3: 1.0, 5: 1.0, 6: 1.0},
        a={1: -1.0, 2: -1.0, 4: -1.0, 7: 1.0},
    ),
    "dicke_witness_state_4": dict(
        n=4, frame="X",
        d={3: 1.0, 5: 1.0, 6: 1.0, 9: 1.0, 10: 1.0, 12: 1.0, 15: 1.0},
        a={0: 1.0, 3: -1.0, 5: -1.0, 6: -1.0, 9: -1.0, 10: -1.0, 12: -1.0,
           15: 1.0},
    ),
}


def named_example(name: str) -> XStateParams:
    """Bundled X-frame example states used by the witness checks."""
    try:
        entry = _NAMED_EXAMPLES[name]
    except KeyError:
        raise ValueError(f"unknown example {name!r}; expected one of "
                         f"{sorted(_NAMED_EXAMPLES)}")
    return XStateParams.build(entry["n"], entry["frame"], d=entry["d"],
                               a=entry["a"])


NAMED_EXAMPLES = tuple(sorted(_NAMED_EXAMPLES))


# ---- state file format ------------------------------------------------------

def params_to_json(p: XStateParams) -> dict:
    return {"n": p.n, "frame": p.frame, "d": list(p.d), "a": list(p.a)}


def params_from_json(obj: dict) -> XStateParams:
    """Read the state file format, rejecting malformed content with messages."""
    if not isinstance(obj, dict):
        raise ValueError("state file must be a JSON object")
    for key in ("n", "frame", "d", "a"):
        if key not in obj:
            raise ValueError(f"state file is missing key {key!r}")
    n = obj["n"]
    if not isinstance(n, int) or not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"state file n must be an integer in 1..{MAX_QUBITS}")
    frame = obj["frame"]
    if frame not in FRAMES:
        raise ValueError(f"state file frame must be one of {sorted(FRAMES)}")
    size = 1 << n
    d = obj["d"]
    a = obj["a"]
    for name, seq in (("d", d), ("a", a)):
        if not isinstance(seq, list) or len(seq) != size:
            raise ValueError(f"state file {name!r} must be a list of length {size}")
        if not all(isinstance(v, (int, float)) and math.isfinite(v) for v in seq):
            raise ValueError(f"state file {name!r} entries must be finite numbers")
    if d[0] != 1:
        raise ValueError("state file d[0] must equal 1 (trace normalization)")
    return XStateParams(n, tuple(float(v) for v in d),
                        tuple(float(v) for v in a), frame)
