"""Exact, phase-tracked algebra of N-qubit Pauli strings via bitmasks.

A Pauli string on ``n`` qubits is stored as two n-bit masks plus an integer
phase exponent.  Its dense matrix is

    i**phase * kron_{j=1..n} X**x_j Z**z_j

where ``x_j`` is bit ``j-1`` of ``x_mask`` and ``z_j`` is bit ``j-1`` of
``z_mask``.  Qubit 1 therefore lives in the least significant mask bit, but
is the *leftmost* tensor factor of the dense matrix (most significant basis
bit).  The pair x_j = z_j = 1 realizes a Y factor: Y = i * X @ Z, and the
extra i per Y is absorbed into ``phase``, so all sign bookkeeping stays in
exact integer arithmetic (never floats).

Index encodings used throughout the package:

* ``z_product(i, n)``  -- I/Z per bit of ``i``: bit j-1 set puts Z on qubit j
  (e.g. i=2, n=2 gives Z on qubit 2 only).
* ``xy_product(i, n)`` -- X/Y per bit of ``i``: bit j-1 set puts Y on qubit j.

Axis frames are uniform single-qubit relabelings of the Pauli axes by a
signed permutation with determinant +1 (a proper rotation), applied to every
qubit at once.  They relabel which commuting family (Z_iZ_j, X_iX_j or
Y_iY_j products) characterizes an X-state family.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

import numpy as np

AXES = ("X", "Y", "Z")

MAX_QUBITS = 16       # masks must fit comfortably in one machine word
MAX_DENSE_QUBITS = 12  # dense realization bound (4096 x 4096)

_PHASE_PREFIX = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_PREFIX_PHASE = {v: k for k, v in _PHASE_PREFIX.items()}

_LABEL_RE = re.compile(r"^([+-]i?)(I|(?:[XYZ]\d+)+)$")


def _bit_reverse(mask: int, n: int) -> int:
    out = 0
    for j in range(n):
        if (mask >> j) & 1:
            out |= 1 << (n - 1 - j)
    return out


def _parity_of(values: np.ndarray) -> np.ndarray:
    """Bitwise parity of each entry (entries < 2**16)."""
    v = values.copy()
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    v ^= v >> 1
    return v & 1


@dataclass(frozen=True)
class PauliString:
    """An n-qubit Pauli operator as two bitmasks plus a quarter-turn phase."""

    n: int
    x_mask: int
    z_mask: int
    phase: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        full = (1 << self.n) - 1
        if not 0 <= self.x_mask <= full or not 0 <= self.z_mask <= full:
            raise ValueError("mask out of range for qubit count")
        if self.phase not in (0, 1, 2, 3):
            raise ValueError("phase exponent must be in 0..3")

    # ---- structure ----
    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0, 0)

    @classmethod
    def single(cls, axis: str, qubit: int, n: int) -> "PauliString":
        """The named Pauli ``axis`` on ``qubit`` (1-based), identity elsewhere."""
        if axis not in AXES:
            raise ValueError(f"axis must be one of {AXES}")
        if not 1 <= qubit <= n:
            raise ValueError("qubit index out of range")
        bit = 1 << (qubit - 1)
        x = bit if axis in ("X", "Y") else 0
        z = bit if axis in ("Z", "Y") else 0
        return cls(n, x, z, 1 if axis == "Y" else 0)

    @property
    def y_mask(self) -> int:
        return self.x_mask & self.z_mask

    @property
    def named_phase(self) -> int:
        """Phase exponent relative to the named I/X/Y/Z tensor product."""
        return (self.phase - self.y_mask.bit_count()) % 4

    def axis_on(self, qubit: int) -> str:
        """Named single-qubit factor on ``qubit`` (1-based): 'I', 'X', 'Y' or 'Z'."""
        bit = 1 << (qubit - 1)
        x, z = bool(self.x_mask & bit), bool(self.z_mask & bit)
        return {(False, False): "I", (True, False): "X",
                (True, True): "Y", (False, True): "Z"}[(x, z)]

    @property
    def weight(self) -> int:
        return (self.x_mask | self.z_mask).bit_count()

    @property
    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    def proportional_to(self, other: "PauliString") -> bool:
        """True when the two strings differ at most by a phase."""
        return (self.n, self.x_mask, self.z_mask) == (other.n, other.x_mask, other.z_mask)

    # ---- algebra ----
    def __mul__(self, other: "PauliString") -> "PauliString":
        if not isinstance(other, PauliString):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("qubit counts differ")
        # reorder Z (left factor) past X (right factor): ZX = -XZ per collision
        phase = (self.phase + other.phase
                 + 2 * (self.z_mask & other.x_mask).bit_count()) % 4
        return PauliString(self.n, self.x_mask ^ other.x_mask,
                           self.z_mask ^ other.z_mask, phase)

    def commutes(self, other: "PauliString") -> bool:
        """Symplectic-form commutation test."""
        if self.n != other.n:
            raise ValueError("qubit counts differ")
        return ((self.x_mask & other.z_mask).bit_count()
                + (self.z_mask & other.x_mask).bit_count()) % 2 == 0

    # ---- dense realization ----
    def matrix_elements(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Sparse action (rows, cols, values): one nonzero per column.

        The dense matrix is M[rows[c], c] = values[c], zero elsewhere.
        """
        dim = 1 << self.n
        cols = np.arange(dim)
        x_rev = _bit_reverse(self.x_mask, self.n)
        z_rev = _bit_reverse(self.z_mask, self.n)
        rows = cols ^ x_rev
        signs = 1 - 2 * _parity_of(cols & z_rev)
        return rows, cols, (1j ** self.phase) * signs.astype(complex)

    def to_matrix(self) -> np.ndarray:
        """Dense matrix with qubit 1 as the leftmost (most significant) factor."""
        if self.n > MAX_DENSE_QUBITS:
            raise ValueError(f"dense realization limited to n <= {MAX_DENSE_QUBITS}")
        dim = 1 << self.n
        rows, cols, vals = self.matrix_elements()
        m = np.zeros((dim, dim), dtype=complex)
        m[rows, cols] = vals
        return m

    # ---- text form ----
    def label(self) -> str:
        """Canonical text form, e.g. '+X1Y2Z3' or '-iZ1Z2'; identity is '+I'."""
        parts = [f"{self.axis_on(j)}{j}" for j in range(1, self.n + 1)
                 if self.axis_on(j) != "I"]
        return _PHASE_PREFIX[self.named_phase] + ("".join(parts) or "I")

    @classmethod
    def from_label(cls, text: str, n: int | None = None) -> "PauliString":
        """Parse the ``label()`` format; ``n`` defaults to the largest index."""
        m = _LABEL_RE.match(text.strip())
        if m is None:
            raise ValueError(f"unparseable Pauli label: {text!r}")
        named_phase = _PREFIX_PHASE[m.group(1)]
        body = m.group(2)
        factors: dict[int, str] = {}
        if body != "I":
            for axis, idx in re.findall(r"([XYZ])(\d+)", body):
                qubit = int(idx)
                if qubit in factors:
                    raise ValueError(f"duplicate qubit {qubit} in label {text!r}")
                factors[qubit] = axis
        if n is None:
            if not factors:
                raise ValueError("identity label needs an explicit qubit count")
            n = max(factors)
        if factors and max(factors) > n:
            raise ValueError(f"label {text!r} exceeds qubit count {n}")
        x = z = 0
        for qubit, axis in factors.items():
            bit = 1 << (qubit - 1)
            if axis in ("X", "Y"):
                x |= bit
            if axis in ("Z", "Y"):
                z |= bit
        phase = (named_phase + (x & z).bit_count()) % 4
        return cls(n, x, z, phase)

    def __str__(self) -> str:
        return self.label()


def z_product(index: int, n: int) -> PauliString:
    """Product over qubits of I (bit clear) or Z (bit set) per bits of ``index``."""
    if not 0 <= index < (1 << n):
        raise ValueError(f"index must be in 0..{(1 << n) - 1}")
    return PauliString(n, 0, index, 0)


def xy_product(index: int, n: int) -> PauliString:
    """Product over qubits of X (bit clear) or Y (bit set) per bits of ``index``.

    The i factors of the Y's are folded into the phase so the dense matrix
    equals the literal tensor product of X/Y matrices.
    """
    if not 0 <= index < (1 << n):
        raise ValueError(f"index must be in 0..{(1 << n) - 1}")
    full = (1 << n) - 1
    return PauliString(n, full, index, index.bit_count() % 4)


def multiply(p: PauliString, q: PauliString) -> PauliString:
    return p * q


def commutes(p: PauliString, q: PauliString) -> bool:
    return p.commutes(q)


@dataclass(frozen=True)
class AxisFrame:
    """A uniform signed relabeling of the Pauli axes (proper rotation).

    Each field maps an axis to ``(new_axis, sign)``; the induced 3x3 signed
    permutation must have determinant +1.  Applied to every qubit alike.
    """

    x: tuple[str, int]
    y: tuple[str, int]
    z: tuple[str, int]

    def __post_init__(self):
        images = (self.x, self.y, self.z)
        for axis, sign in images:
            if axis not in AXES or sign not in (1, -1):
                raise ValueError(f"bad axis image {(axis, sign)}")
        if sorted(axis for axis, _ in images) != sorted(AXES):
            raise ValueError("axis images must be a permutation of X, Y, Z")
        if round(np.linalg.det(self.rotation())) != 1:
            raise ValueError("signed axis permutation must be a proper rotation")

    def image(self, axis: str) -> tuple[str, int]:
        return {"X": self.x, "Y": self.y, "Z": self.z}[axis]

    def rotation(self) -> np.ndarray:
        """The 3x3 signed permutation acting on Bloch vectors (columns X,Y,Z)."""
        r = np.zeros((3, 3), dtype=int)
        for col, axis in enumerate(AXES):
            new_axis, sign = self.image(axis)
            r[AXES.index(new_axis), col] = sign
        return r

    def compose(self, inner: "AxisFrame") -> "AxisFrame":
        """The frame acting as self after inner."""
        images = []
        for axis in AXES:
            mid, s1 = inner.image(axis)
            out, s2 = self.image(mid)
            images.append((out, s1 * s2))
        return AxisFrame(*images)

    @property
    def is_identity(self) -> bool:
        return all(self.image(a) == (a, 1) for a in AXES)

    def apply(self, p: PauliString) -> PauliString:
        """Relabel every single-qubit factor; sign flips accumulate into phase."""
        x = z = 0
        flips = 0
        for j in range(1, p.n + 1):
            axis = p.axis_on(j)
            if axis == "I":
                continue
            new_axis, sign = self.image(axis)
            bit = 1 << (j - 1)
            if new_axis in ("X", "Y"):
                x |= bit
            if new_axis in ("Z", "Y"):
                z |= bit
            if sign < 0:
                flips += 1
        phase = (p.named_phase + (x & z).bit_count() + 2 * flips) % 4
        return PauliString(p.n, x, z, phase)

    def unitary(self) -> np.ndarray:
        """A 2x2 unitary U with U sigma_a U^dag = sign * sigma_image(a).

        Fixed up to global phase; computed from the rotation's quaternion.
        """
        m = self.rotation().astype(float)
        tr = m[0, 0] + m[1, 1] + m[2, 2]
        if tr > 0:
            s = 2.0 * np.sqrt(tr + 1.0)
            w = 0.25 * s
            qx = (m[2, 1] - m[1, 2]) / s
            qy = (m[0, 2] - m[2, 0]) / s
            qz = (m[1, 0] - m[0, 1]) / s
        elif m[0, 0] > m[1, 1] and m[0, 0] > m[2, 2]:
            s = 2.0 * np.sqrt(1.0 + m[0, 0] - m[1, 1] - m[2, 2])
            w = (m[2, 1] - m[1, 2]) / s
            qx = 0.25 * s
            qy = (m[0, 1] + m[1, 0]) / s
            qz = (m[0, 2] + m[2, 0]) / s
        elif m[1, 1] > m[2, 2]:
            s = 2.0 * np.sqrt(1.0 + m[1, 1] - m[0, 0] - m[2, 2])
            w = (m[0, 2] - m[2, 0]) / s
            qx = (m[0, 1] + m[1, 0]) / s
            qy = 0.25 * s
            qz = (m[1, 2] + m[2, 1]) / s
        else:
            s = 2.0 * np.sqrt(1.0 + m[2, 2] - m[0, 0] - m[1, 1])
            w = (m[1, 0] - m[0, 1]) / s
            qx = (m[0, 2] + m[2, 0]) / s
            qy = (m[1, 2] + m[2, 1]) / s
            qz = 0.25 * s
        sx = np.array([[0, 1], [1, 0]], dtype=complex)
        sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
        sz = np.array([[1, 0], [0, -1]], dtype=complex)
        return w * np.eye(2, dtype=complex) - 1j * (qx * sx + qy * sy + qz * sz)

    def describe(self) -> dict[str, str]:
        """JSON-friendly form, e.g. {'X': '-Y', 'Y': '-Z', 'Z': '+X'}."""
        return {a: ("+" if s > 0 else "-") + ax
                for a, (ax, s) in zip(AXES, (self.x, self.y, self.z))}


FRAME_Z = AxisFrame(("X", 1), ("Y", 1), ("Z", 1))
# Fixed by the witness-overlap resolution procedure (see tests/golden): the
# unique proper map with Z -> +X reproducing both bundled 3/4 overlaps.
FRAME_X = AxisFrame(("Y", -1), ("Z", -1), ("X", 1))
# Fixed by matching the all-entries-nonzero three-qubit family entrywise.
FRAME_Y = AxisFrame(("Z", 1), ("X", 1), ("Y", 1))

FRAMES = {"Z": FRAME_Z, "X": FRAME_X, "Y": FRAME_Y}


def resolve_frame(frame: "str | AxisFrame") -> AxisFrame:
    """Accept a named frame ('Z', 'X', 'Y') or an AxisFrame instance."""
    if isinstance(frame, AxisFrame):
        return frame
    try:
        return FRAMES[frame]
    except KeyError:
        raise ValueError(f"unknown frame {frame!r}; expected one of {sorted(FRAMES)}")


def apply_frame(p: PauliString, frame: "str | AxisFrame") -> PauliString:
    return resolve_frame(frame).apply(p)


def all_proper_frames() -> list[AxisFrame]:
    """All 24 proper signed axis permutations, in a fixed deterministic order."""
    frames = []
    for perm in itertools.permutations(AXES):
        for signs in itertools.product((1, -1), repeat=3):
            images = tuple((perm[k], signs[k]) for k in range(3))
            try:
                frames.append(AxisFrame(*images))
            except ValueError:
                continue
    return frames
