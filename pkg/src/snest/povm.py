"""Construction and validation of symmetric informationally complete POVM families.

An (N,M) family in dimension d is a set of N POVMs with M outcomes each whose
effects satisfy four trace relations: tr E = d/M, tr E^2 = x, a common overlap
within each POVM and a common overlap d/M^2 across POVMs. Effects are built
from a grouped Hermitian basis as E_{a,k} = I/M + t*H_{a,k}; the admissible t
interval comes from the extreme eigenvalues of the H operators. The dual frame
inverts the measurement map, and squared_overlap_sum checks the closed-form
value of sum |tr(E sigma)|^2 that underpins the certification constants.
"""

import json

import numpy as np

from .errors import DimensionMismatchError, ParameterError
from .matkernel import hermitian_eig

PSD_TOL = 1e-10
RELATION_TOL = 1e-10


def build_h(gb):
    """The N*M traceless Hermitian generators of a grouped basis.

    H_{a,k} = G_a - sqrt(M)(sqrt(M)+1) G_{a,k} for k < M and
    H_{a,M} = (sqrt(M)+1) G_a, with G_a the sum of group a.
    Returns an (N, M, d, d) array.
    """
    N, M, d = gb.N, gb.M, gb.d
    rm = np.sqrt(M)
    h = np.zeros((N, M, d, d), dtype=complex)
    for a, grp in enumerate(gb.groups):
        g_sum = np.sum(grp, axis=0)
        for k in range(M - 1):
            h[a, k] = g_sum - rm * (rm + 1.0) * grp[k]
        h[a, M - 1] = (rm + 1.0) * g_sum
    return h


def t_range(h_ops):
    """Admissible parameter interval [-1/(M*lam_max), 1/(M*|lam_min|)].

    lam_max and lam_min are the global extreme eigenvalues over all H
    operators. (The interval is in general asymmetric.)
    """
    h_ops = np.asarray(h_ops)
    if h_ops.ndim != 4 or h_ops.shape[0] * h_ops.shape[1] == 0:
        raise ParameterError("expected a nonempty (N, M, d, d) array of H operators")
    M = h_ops.shape[1]
    lam_max = -np.inf
    lam_min = np.inf
    for h in h_ops.reshape(-1, *h_ops.shape[2:]):
        w, _ = hermitian_eig(h)
        lam_max = max(lam_max, w[-1])
        lam_min = min(lam_min, w[0])
    if lam_max <= 0 or lam_min >= 0:
        raise ParameterError("degenerate H family: eigenvalues do not straddle zero")
    return (-1.0 / (M * lam_max), 1.0 / (M * abs(lam_min)))


def x_of_t(d, M, t):
    """Purity parameter x = d/M^2 + t^2 (M-1)(sqrt(M)+1)^2."""
    return d / M**2 + t * t * (M - 1) * (np.sqrt(M) + 1.0) ** 2


def _window(d, M):
    """Open-closed admissible purity interval (d/M^2, min(d^2/M^2, d/M)]."""
    return d / M**2, min(d * d / (M * M), d / M)


class SymmetricPovm:
    """A constructed (N,M) family: parameters plus the N*M effects.

    Validates the four trace relations, completeness of each POVM and
    positivity on construction. `t` and `h_ops` are None for families built
    directly from rank-1 orbits (SIC and depolarized-SIC constructions).
    """

    def __init__(self, d, N, M, x, effects, t=None, h_ops=None):
        self.d = int(d)
        self.N = int(N)
        self.M = int(M)
        self.x = float(x)
        self.t = None if t is None else float(t)
        self.effects = np.asarray(effects, dtype=complex)
        if self.effects.shape != (self.N, self.M, self.d, self.d):
            raise DimensionMismatchError(
                f"effects shape {self.effects.shape} != {(N, M, d, d)}")
        self.h_ops = None if h_ops is None else np.asarray(h_ops, dtype=complex)
        self.effects.setflags(write=False)
        if self.h_ops is not None:
            self.h_ops.setflags(write=False)
        report = validate_povm(self, tol=RELATION_TOL)
        if not report["passed"]:
            detail = {k: report[k] for k in report["failed_checks"] if k in report}
            detail["min_eigenvalue"] = report["min_eigenvalue"]
            raise ParameterError(
                f"constructed family fails validation "
                f"({report['failed_checks']}): {detail}")

    @property
    def flat_effects(self):
        """Effects as an (N*M, d, d) array, family-major order."""
        return self.effects.reshape(self.N * self.M, self.d, self.d)

    def informationally_complete(self):
        return self.N * (self.M - 1) == self.d * self.d - 1

    def save(self, path):
        """Write the family as JSON: {d, N, M, t, x, effects: [[[re,im],..],..]}."""
        eff = [[[[float(z.real), float(z.imag)] for z in row] for row in e]
               for e in self.flat_effects]
        doc = {"d": self.d, "N": self.N, "M": self.M, "t": self.t,
               "x": self.x, "effects": eff}
        with open(path, "w") as fh:
            json.dump(doc, fh)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            doc = json.load(fh)
        try:
            d, N, M = doc["d"], doc["N"], doc["M"]
            eff = np.array([[[complex(re, im) for re, im in row] for row in e]
                            for e in doc["effects"]])
            eff = eff.reshape(N, M, d, d)
            return cls(d, N, M, doc["x"], eff, t=doc.get("t"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParameterError(f"malformed POVM file {path}: {exc}") from exc


def build_povm(gb, t):
    """Build the (N,M) family E_{a,k} = I/M + t*H_{a,k} from a grouped basis.

    t must lie in the admissible interval (endpoints included); t = 0 yields
    the degenerate family of identity multiples, which satisfies the trace
    relations but is not informationally complete.
    """
    h = build_h(gb)
    lo, hi = t_range(h)
    if not (lo <= t <= hi):
        raise ParameterError(
            f"t = {t} outside the admissible interval [{lo:.10g}, {hi:.10g}]")
    d, M = gb.d, gb.M
    eye = np.eye(d)
    effects = eye / M + t * h
    return SymmetricPovm(d, gb.N, M, x_of_t(d, M, t), effects, t=t, h_ops=h)


def validate_povm(p, tol=RELATION_TOL):
    """Check the defining trace relations, completeness and positivity.

    Returns a report with the maximum deviation per relation, the minimum
    effect eigenvalue, whether x lies inside the open-closed admissible
    window, and an overall pass flag at tolerance `tol` (PSD at -1e-10).
    """
    d, N, M, x = p.d, p.N, p.M, p.x
    flat = p.flat_effects
    y = (d - M * x) / (M * (M - 1)) if M > 1 else np.nan
    z = d / M**2

    dev_trace = max(abs(np.trace(e).real - d / M) + abs(np.trace(e).imag)
                    for e in flat)
    gram = np.einsum('aij,bji->ab', flat, flat)
    dev_purity = 0.0
    dev_within = 0.0
    dev_cross = 0.0
    for ai in range(N * M):
        for bi in range(ai, N * M):
            val = gram[ai, bi]
            if ai == bi:
                dev_purity = max(dev_purity, abs(val - x))
            elif ai // M == bi // M:
                dev_within = max(dev_within, abs(val - y))
            else:
                dev_cross = max(dev_cross, abs(val - z))
    dev_complete = max(np.abs(p.effects[a].sum(axis=0) - np.eye(d)).max()
                       for a in range(N))
    min_eig = min(hermitian_eig(e)[0][0] for e in flat)
    wlo, whi = _window(d, M)
    inside = (x > wlo) and (x <= whi + 1e-12)

    checks = {"trace": dev_trace, "purity": dev_purity,
              "within_family": dev_within, "cross_family": dev_cross,
              "completeness": dev_complete}
    failed = [k for k, v in checks.items() if not (v <= tol)]
    if min_eig < -PSD_TOL:
        failed.append("positivity")
    report = dict(checks)
    report.update(min_eigenvalue=min_eig, inside_window=inside,
                  tol=tol, failed_checks=failed, passed=not failed)
    return report


class DualFrame:
    """Operators F_{a,k} reconstructing any matrix from its measurement traces.

    sigma = sum_{a,k} tr(E_{a,k} sigma) F_{a,k} for every complex matrix
    sigma, with F = (E - A*I)/(x - y).
    """

    def __init__(self, ops, w, y, z, A):
        self.ops = np.asarray(ops, dtype=complex)
        self.ops.setflags(write=False)
        self.w, self.y, self.z, self.A = w, y, z, A

    def reconstruct(self, povm, sigma):
        sigma = np.asarray(sigma)
        coeff = np.einsum('aij,ji->a', povm.flat_effects, sigma)
        flat = self.ops.reshape(-1, *self.ops.shape[2:])
        return np.einsum('a,aij->ij', coeff, flat)


def dual_frame(p):
    """Dual frame of an informationally complete (N,M) family."""
    if not p.informationally_complete():
        raise ParameterError(
            f"(N,M)=({p.N},{p.M}) is not informationally complete for d={p.d}")
    d, N, M, x = p.d, p.N, p.M, p.x
    w = d / M
    y = (d - M * x) / (M * (M - 1))
    z = d / M**2
    if abs(x - y) < 1e-14:
        raise ParameterError(
            "effects are identity multiples (x = d/M^2); no dual frame exists")
    A = ((N - 1) * z + y) / (N * w)
    ops = (p.effects - A * np.eye(d)) / (x - y)
    return DualFrame(ops, w, y, z, A)


def squared_overlap_sum(p, sigma):
    """Both sides of the closed-form identity for sum |tr(E sigma)|^2.

    Returns (direct, closed_form) where direct sums over all effects and
    closed_form = [d(M^2 x - d) tr(sigma sigma^dag) + (d^3 - M^2 x)|tr sigma|^2]
    / (d M (M-1)). Holds for every complex matrix sigma.
    """
    sigma = np.asarray(sigma)
    d, M, x = p.d, p.M, p.x
    if sigma.shape != (d, d):
        raise DimensionMismatchError(f"sigma is {sigma.shape}, expected {(d, d)}")
    coeff = np.einsum('aij,ji->a', p.flat_effects, sigma)
    direct = float(np.sum(np.abs(coeff) ** 2))
    hs = float(np.einsum('ij,ij->', sigma, sigma.conj()).real)
    tr2 = abs(np.trace(sigma)) ** 2
    closed = (d * (M * M * x - d) * hs + (d**3 - M * M * x) * tr2) / (d * M * (M - 1))
    return direct, float(closed)
