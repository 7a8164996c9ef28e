"""Shared independent oracles and random generators for the test suite."""

import numpy as np
import pytest

from xstates import PauliString, decompose

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
NAMED = {"I": I2, "X": SX, "Y": SY, "Z": SZ}


def kron_chain(mats):
    out = np.array([[1.0 + 0j]])
    for m in mats:
        out = np.kron(out, m)
    return out


def oracle_pauli_matrix(p: PauliString) -> np.ndarray:
    """Literal Kronecker build from named factors; independent of the library path."""
    mats = [NAMED[p.axis_on(j)] for j in range(1, p.n + 1)]
    return (1j ** p.named_phase) * kron_chain(mats)


def oracle_partial_trace(rho, keep, n):
    """Index-summation partial trace, written without reshape tricks."""
    keep = sorted(keep)
    drop = [q for q in range(1, n + 1) if q not in keep]
    dim_out = 1 << len(keep)
    out = np.zeros((dim_out, dim_out), dtype=complex)

    def assemble(kept_bits, dropped_bits):
        idx = 0
        for q in range(1, n + 1):
            idx <<= 1
            if q in keep:
                idx |= kept_bits[keep.index(q)]
            else:
                idx |= dropped_bits[drop.index(q)]
        return idx

    for r in range(dim_out):
        rb = [(r >> (len(keep) - 1 - i)) & 1 for i in range(len(keep))]
        for c in range(dim_out):
            cb = [(c >> (len(keep) - 1 - i)) & 1 for i in range(len(keep))]
            total = 0.0 + 0j
            for e in range(1 << len(drop)):
                eb = [(e >> (len(drop) - 1 - i)) & 1 for i in range(len(drop))]
                total += rho[assemble(rb, eb), assemble(cb, eb)]
            out[r, c] = total
    return out


def oracle_wootters_concurrence(rho):
    """Brute-force concurrence via a general (non-Hermitian) eigensolver."""
    yy = np.kron(SY, SY)
    m = rho @ yy @ rho.conj() @ yy
    lam = np.sqrt(np.abs(np.sort(np.linalg.eigvals(m).real)[::-1]))
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def random_pauli(rng, n) -> PauliString:
    full = (1 << n) - 1
    return PauliString(n, int(rng.integers(0, full + 1)),
                       int(rng.integers(0, full + 1)), int(rng.integers(0, 4)))


def random_density(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_state_vector(rng, dim):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_unitary(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_product_states(rng, n, count):
    """(count, 2**n) stack of product-state vectors."""
    out = np.ones((count, 1), dtype=complex)
    for _ in range(n):
        single = rng.normal(size=(count, 2)) + 1j * rng.normal(size=(count, 2))
        single /= np.linalg.norm(single, axis=1, keepdims=True)
        out = np.einsum("bi,bj->bij", out, single).reshape(count, -1)
    return out


def random_valid_x_matrix(rng, n):
    """A random physical X-pattern density matrix, built sector by sector."""
    dim = 1 << n
    full = dim - 1
    pairs = [(b, b ^ full) for b in range(dim) if b < (b ^ full)]
    if not pairs:  # n = 1: the single sector is the whole space
        pairs = [(0, 1)]
    weights = rng.random(len(pairs)) + 0.05
    weights /= weights.sum()
    rho = np.zeros((dim, dim), dtype=complex)
    for (lo, hi), w in zip(pairs, weights):
        block = random_density(rng, 2) * w
        rho[lo, lo] = block[0, 0]
        rho[lo, hi] = block[0, 1]
        rho[hi, lo] = block[1, 0]
        rho[hi, hi] = block[1, 1]
    return rho


def random_valid_x_params(rng, n, frame="Z"):
    """Parameters of a random physical X state, tagged with the given frame."""
    params, residual = decompose(random_valid_x_matrix(rng, n), n, "Z")
    assert residual < 1e-12
    if frame == "Z":
        return params
    return type(params)(n, params.d, params.a, frame)


def bit_reversal_permutation(n):
    return np.array([int(format(b, f"0{n}b")[::-1], 2) for b in range(1 << n)])


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
