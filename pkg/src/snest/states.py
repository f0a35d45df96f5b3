"""Bipartite states: validated density matrices, the worked-example gallery,
Schmidt decomposition and random pure-state oracles.

Composite index convention: |i>_A |k>_B <-> i*dB + k (row-major).
All random constructions use numpy's default_rng (PCG64) with explicit seeds.
"""

import json

import numpy as np

from .errors import DimensionMismatchError, InvalidStateError, ParameterError
from .matkernel import partial_trace_b

HERM_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = -1e-10


class DensityMatrix:
    """A bipartite density matrix with subsystem dimensions dA, dB.

    Construction validates Hermiticity, unit trace and positivity.
    """

    def __init__(self, dA, dB, mat):
        self.dA = int(dA)
        self.dB = int(dB)
        mat = np.asarray(mat, dtype=complex)
        n = self.dA * self.dB
        if mat.shape != (n, n):
            raise DimensionMismatchError(
                f"matrix is {mat.shape}, expected {(n, n)} for dims {dA}x{dB}")
        herm = np.abs(mat - mat.conj().T).max()
        if herm > HERM_TOL:
            raise InvalidStateError(f"not Hermitian: max |rho - rho^dag| = {herm:.3e}")
        tr = np.trace(mat)
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidStateError(f"trace = {tr.real:.12g}, expected 1")
        min_eig = float(np.linalg.eigvalsh(mat)[0])
        if min_eig < PSD_TOL:
            raise InvalidStateError(f"not positive semidefinite: min eigenvalue = {min_eig:.3e}")
        self.mat = mat
        self.mat.setflags(write=False)

    def save(self, path):
        """Write as JSON {"dA":..,"dB":..,"matrix":[[[re,im],..],..]} (lossless floats)."""
        doc = {"dA": self.dA, "dB": self.dB,
               "matrix": [[[float(z.real), float(z.imag)] for z in row]
                          for row in self.mat]}
        with open(path, "w") as fh:
            json.dump(doc, fh)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            doc = json.load(fh)
        try:
            mat = np.array([[complex(re, im) for re, im in row]
                            for row in doc["matrix"]])
            return cls(doc["dA"], doc["dB"], mat)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParameterError(f"malformed state file {path}: {exc}") from exc


class PureState:
    """A bipartite pure state given by its amplitude vector (unit norm)."""

    def __init__(self, dA, dB, amplitudes):
        self.dA = int(dA)
        self.dB = int(dB)
        amp = np.asarray(amplitudes, dtype=complex).reshape(-1)
        if amp.size != self.dA * self.dB:
            raise DimensionMismatchError(
                f"amplitude vector has length {amp.size}, expected {dA * dB}")
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > 1e-12:
            raise InvalidStateError(f"norm = {norm:.15g}, expected 1")
        self.amplitudes = amp
        self.amplitudes.setflags(write=False)
        self._schmidt = None

    @property
    def schmidt(self):
        """Nonincreasing Schmidt coefficients (squares summing to 1)."""
        if self._schmidt is None:
            coeffs, _, _ = schmidt_decompose(self)
            self._schmidt = coeffs
        return self._schmidt

    def schmidt_rank(self, tol=1e-10):
        return int(np.sum(self.schmidt > tol))

    def density_matrix(self):
        return DensityMatrix(self.dA, self.dB,
                             np.outer(self.amplitudes, self.amplitudes.conj()))


def _basis_vector(dA, dB, entries):
    """Vector with the given {composite index: amplitude} entries."""
    v = np.zeros(dA * dB, dtype=complex)
    for idx, val in entries.items():
        v[idx] = val
    return v


def maximally_mixed(dA, dB):
    n = dA * dB
    return DensityMatrix(dA, dB, np.eye(n) / n)


def maximally_entangled(d):
    """|Psi+> = sum_i |ii> / sqrt(d) as a PureState in d x d."""
    amp = np.eye(d).reshape(-1) / np.sqrt(d)
    return PureState(d, d, amp)


def horodecki_2x4(tau):
    """The 2x4 bound entangled family with prefactor 1/(1+7*tau)."""
    if not 0 < tau < 1:
        raise ParameterError(f"tau = {tau} outside (0, 1)")
    m = np.zeros((8, 8))
    for i in (0, 1, 2, 3, 5, 6):
        m[i, i] = tau
    for i, j in ((0, 5), (1, 6), (2, 7)):
        m[i, j] = m[j, i] = tau
    m[4, 4] = m[7, 7] = (1 + tau) / 2
    m[4, 7] = m[7, 4] = np.sqrt(1 - tau * tau) / 2
    return DensityMatrix(2, 4, m / (1 + 7 * tau))


def example1_state(tau, q):
    """Mixture q |xi><xi| + (1-q) * (2x4 bound entangled state), xi = (|00>+|11>)/sqrt(2)."""
    if not 0 <= q <= 1:
        raise ParameterError(f"q = {q} outside [0, 1]")
    xi = _basis_vector(2, 4, {0: 1 / np.sqrt(2), 5: 1 / np.sqrt(2)})
    rho = q * np.outer(xi, xi.conj()) + (1 - q) * horodecki_2x4(tau).mat
    return DensityMatrix(2, 4, rho)


def example2_state(p):
    """The 4x4 family p*rho + (1-p)|xi><xi| interpolating between an
    unfaithful entangled state and a Schmidt-rank-3 pure state.

    rho = 1/2 |phi><phi| + 1/4 (|23>+|32>)(<23|+<32|) with
    phi = (|00>+|11>+|22>)/sqrt(3), and
    xi = (1/5)|00> + (1/5)|11> + (sqrt(23)/5)|22>.
    """
    if not 0 <= p <= 1:
        raise ParameterError(f"p = {p} outside [0, 1]")
    s3 = 1 / np.sqrt(3)
    phi = _basis_vector(4, 4, {0: s3, 5: s3, 10: s3})
    w = _basis_vector(4, 4, {11: 1.0, 14: 1.0})
    core = 0.5 * np.outer(phi, phi.conj()) + 0.25 * np.outer(w, w.conj())
    xi = _basis_vector(4, 4, {0: 0.2, 5: 0.2, 10: np.sqrt(23) / 5})
    rho = p * core + (1 - p) * np.outer(xi, xi.conj())
    return DensityMatrix(4, 4, rho)


def isotropic(d, v):
    """Isotropic state v |Psi+><Psi+| + (1-v) I/d^2 in d x d."""
    if d < 2:
        raise ParameterError(f"dimension must be >= 2, got {d}")
    if not 0 <= v <= 1:
        raise ParameterError(f"v = {v} outside [0, 1]")
    psi = maximally_entangled(d).amplitudes
    rho = v * np.outer(psi, psi.conj()) + (1 - v) * np.eye(d * d) / d**2
    return DensityMatrix(d, d, rho)


def _horodecki_3x3_raw(tau, corrected):
    m = np.zeros((9, 9))
    for i in range(6):
        m[i, i] = tau
    for i, j in ((0, 4), (0, 8), (4, 8)):
        m[i, j] = m[j, i] = tau
    m[6, 6] = m[8, 8] = (1 + tau) / 2
    m[6, 8] = m[8, 6] = np.sqrt(1 - tau * tau) / 2
    if corrected:
        m[7, 7] = tau
    return m / (1 + 8 * tau)


def horodecki_3x3(tau):
    """The 3x3 bound entangled family, prefactor 1/(1+8*tau).

    Uses the standard family in which every diagonal entry is populated
    (diagonal sums to 1+8*tau); see horodecki_3x3_verbatim for the published
    variant with a missing diagonal entry.
    """
    if not 0 < tau < 1:
        raise ParameterError(f"tau = {tau} outside (0, 1)")
    return DensityMatrix(3, 3, _horodecki_3x3_raw(tau, corrected=True))


def horodecki_3x3_verbatim(tau):
    """The same 9x9 matrix with its (7,7) entry left at zero, as sometimes
    displayed. Returns (matrix, trace_defect); the matrix is NOT a valid
    density matrix (its trace falls short of 1 by tau/(1+8*tau))."""
    if not 0 < tau < 1:
        raise ParameterError(f"tau = {tau} outside (0, 1)")
    m = _horodecki_3x3_raw(tau, corrected=False)
    return m, 1.0 - float(np.trace(m).real)


def example4_state(tau, q):
    """Mixture q * (3x3 bound entangled state) + (1-q) I/9."""
    if not 0 <= q <= 1:
        raise ParameterError(f"q = {q} outside [0, 1]")
    rho = q * horodecki_3x3(tau).mat + (1 - q) * np.eye(9) / 9
    return DensityMatrix(3, 3, rho)


def schmidt_decompose(psi):
    """Schmidt decomposition via SVD of the dA x dB coefficient matrix.

    Returns (coefficients nonincreasing, left vectors as columns, right
    vectors as rows) so that amplitudes = sum_s c_s (left[:,s] x right[s,:]).
    """
    amp = psi.amplitudes
    if np.linalg.norm(amp) == 0:
        raise ParameterError("zero vector has no Schmidt decomposition")
    u, s, vh = np.linalg.svd(amp.reshape(psi.dA, psi.dB))
    return s, u[:, :s.size], vh[:s.size]


def random_schmidt_rank_state(dA, dB, r, seed):
    """Deterministic random pure state with Schmidt rank exactly r.

    Coefficients are drawn from a Dirichlet distribution on the simplex
    (resampled until all are comfortably nonzero) and the local bases are
    orthonormalized Gaussian frames.
    """
    if not 1 <= r <= min(dA, dB):
        raise ParameterError(f"rank r = {r} outside [1, {min(dA, dB)}]")
    rng = np.random.default_rng(seed)
    while True:
        lam = np.sqrt(rng.dirichlet(np.ones(r)))
        if lam.min() > 1e-6:
            break
    lam = np.sort(lam)[::-1]
    qa = np.linalg.qr(rng.normal(size=(dA, r)) + 1j * rng.normal(size=(dA, r)))[0]
    qb = np.linalg.qr(rng.normal(size=(dB, r)) + 1j * rng.normal(size=(dB, r)))[0]
    amp = np.einsum('s,is,ks->ik', lam, qa, qb).reshape(-1)
    return PureState(dA, dB, amp)


def pure_concurrence(psi):
    """Concurrence sqrt(2 (1 - tr rho_A^2)) of a pure bipartite state."""
    rho = np.outer(psi.amplitudes, psi.amplitudes.conj())
    rho_a = partial_trace_b(rho, psi.dA, psi.dB)
    purity = float(np.einsum('ij,ji->', rho_a, rho_a).real)
    return float(np.sqrt(max(0.0, 2.0 * (1.0 - purity))))
