"""Dense complex matrix kernels shared by the rest of the package.

All matrices are square with power-of-two dimension up to 4096 (12 qubits),
double precision, row-major.  Qubit 1 is the most significant basis bit and
qubit indices are 1-based everywhere.
"""

from __future__ import annotations

import numpy as np

MAX_DIM = 4096

HERMITIAN_TOL = 1e-10


class ConvergenceError(RuntimeError):
    """Iterative eigensolver failed to converge."""


class ToleranceError(RuntimeError):
    """A computed quantity violated an internal tolerance contract."""


def _as_square(m: np.ndarray, name: str = "matrix") -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    return m


def _check_power_of_two(dim: int, name: str = "dimension") -> None:
    if dim < 1 or dim & (dim - 1):
        raise ValueError(f"{name} must be a power of two, got {dim}")


def hermiticity_deviation(m: np.ndarray) -> float:
    """Max-norm distance from the Hermitian cone, max |M - M^dag|."""
    m = _as_square(m)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two square power-of-two matrices."""
    a = _as_square(a, "left factor")
    b = _as_square(b, "right factor")
    _check_power_of_two(a.shape[0], "left factor dimension")
    _check_power_of_two(b.shape[0], "right factor dimension")
    if a.shape[0] * b.shape[0] > MAX_DIM:
        raise ValueError(f"product dimension exceeds cap {MAX_DIM}")
    return np.kron(a, b)


def hermitian_eigen(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns eigenvalues in descending order and the matching orthonormal
    eigenvectors as columns.  Raises ValueError for non-Hermitian input and
    ConvergenceError if the underlying iteration fails.
    """
    h = _as_square(h)
    dev = hermiticity_deviation(h)
    if dev > HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (deviation {dev:.3e})")
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigendecomposition did not converge: {exc}") from exc
    return w[::-1].copy(), v[:, ::-1].copy()


def partial_trace(rho: np.ndarray, keep: "set[int] | list[int] | tuple[int, ...]",
                  n: int) -> np.ndarray:
    """Trace out all qubits not in ``keep`` (1-based), preserving their order."""
    rho = _as_square(rho, "state")
    dim = 1 << n
    if rho.shape != (dim, dim):
        raise ValueError(f"state dimension {rho.shape[0]} does not match n={n}")
    keep_set = set(keep)
    if not keep_set or not keep_set <= set(range(1, n + 1)):
        raise ValueError(f"keep set must be a nonempty subset of 1..{n}")
    if keep_set == set(range(1, n + 1)):
        raise ValueError("keep set must be a proper subset")
    out = rho
    m = n
    for q in sorted(set(range(1, n + 1)) - keep_set, reverse=True):
        pre = 1 << (q - 1)
        post = 1 << (m - q)
        out = out.reshape(pre, 2, post, pre, 2, post)
        out = np.trace(out, axis1=1, axis2=4)
        m -= 1
        out = out.reshape(1 << m, 1 << m)
    return out


def partial_transpose(rho: np.ndarray, subset: "set[int] | list[int] | tuple[int, ...]",
                      n: int) -> np.ndarray:
    """Transpose the tensor factors of the listed qubits (1-based)."""
    rho = _as_square(rho, "state")
    dim = 1 << n
    if rho.shape != (dim, dim):
        raise ValueError(f"state dimension {rho.shape[0]} does not match n={n}")
    subset_set = set(subset)
    if not subset_set <= set(range(1, n + 1)):
        raise ValueError(f"qubit subset must lie in 1..{n}")
    arr = rho.reshape((2,) * (2 * n))
    axes = list(range(2 * n))
    for q in subset_set:
        i = q - 1
        axes[i], axes[n + i] = axes[n + i], axes[i]
    return arr.transpose(axes).reshape(dim, dim).copy()


def expectation(rho: np.ndarray, m: np.ndarray) -> float:
    """Re tr(M rho) for Hermitian M; asserts the imaginary part is negligible."""
    rho = _as_square(rho, "state")
    m = _as_square(m, "observable")
    if rho.shape != m.shape:
        raise ValueError("dimension mismatch between state and observable")
    dev = hermiticity_deviation(m)
    if dev > HERMITIAN_TOL:
        raise ValueError(f"observable is not Hermitian (deviation {dev:.3e})")
    value = complex(np.trace(m @ rho))
    if abs(value.imag) > 1e-10:
        raise ToleranceError(f"expectation has imaginary part {value.imag:.3e}")
    return value.real


# ---- dump formats ----------------------------------------------------------

def matrix_to_json(m: np.ndarray) -> dict:
    """Row-major dump {"dim": d, "re": [[...]], "im": [[...]]}."""
    m = _as_square(m)
    return {
        "dim": int(m.shape[0]),
        "re": [[float(x) for x in row] for row in m.real],
        "im": [[float(x) for x in row] for row in m.imag],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    try:
        dim = int(obj["dim"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix dump: {exc}") from exc
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise ValueError("matrix dump shape does not match declared dim")
    return re + 1j * im


def matrix_to_csv(m: np.ndarray) -> str:
    """CSV rows of alternating re,im cell pairs, one matrix row per line."""
    m = _as_square(m)
    lines = []
    for row in m:
        cells = []
        for x in row:
            cells.append(repr(float(x.real)))
            cells.append(repr(float(x.imag)))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
