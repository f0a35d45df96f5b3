"""Measurement correlation matrices and the trace-norm certification machinery.

Given complete symmetric measurement families on each party, the correlation
matrix collects all joint outcome probabilities. Its trace norm certifies
lower bounds on the Schmidt number and concurrence through the constants
K, L, R; special parameter choices recover the rank-1 single-family (GSIC)
and mutually-unbiased-bases criteria, and realignment / fidelity baselines
are provided for comparison.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, ParameterError
from .matkernel import realign, trace_norm
from .povm import SymmetricPovm, _window, build_povm, x_of_t, t_range, build_h
from .basis import gellmann_basis, group_basis

INT_CEILING_SLACK = 1e-9

# Fiducial vectors whose clock-and-shift orbits form symmetric rank-1 families
# (equiangular lines). d=2 and d=3 are the textbook choices; the d=4 vector
# was obtained by least-squares on the equiangularity conditions (residual
# ~1e-16) and is validated, not assumed, on every construction.
SIC_FIDUCIALS = {
    2: np.array([np.sqrt((1 + 1 / np.sqrt(3)) / 2),
                 np.exp(1j * np.pi / 4) * np.sqrt((1 - 1 / np.sqrt(3)) / 2)]),
    3: np.array([0.0, 1.0, -1.0]) / np.sqrt(2),
    4: np.array([complex(+4.00848391324340803e-01, 0.0),
                 complex(-1.54403914880174825e-01, -1.28981697935245221e-01),
                 complex(-5.57833840897344779e-01, +5.01745723322464143e-01),
                 complex(-3.11389364453178885e-01, +3.72764025387218922e-01)]),
}


def correlation_matrix(rho, pA, pB):
    """Joint outcome probabilities p[(a,k),(b,l)] = tr(rho E^A_{a,k} x E^B_{b,l}).

    Rows are A-family-major (a*M_A + k), columns B-family-major. Entries are
    checked for imaginary residue (< 1e-10) and returned as a real matrix.
    """
    dA, dB = rho.dA, rho.dB
    if pA.d != dA or pB.d != dB:
        raise DimensionMismatchError(
            f"measurement dims ({pA.d},{pB.d}) do not match state dims ({dA},{dB})")
    rho4 = rho.mat.reshape(dA, dB, dA, dB)
    p = np.einsum('ijkl,aki,blj->ab', rho4, pA.flat_effects, pB.flat_effects)
    residue = np.abs(p.imag).max()
    if residue > 1e-10:
        raise ParameterError(
            f"correlation entries have imaginary residue {residue:.3e}; "
            "inputs are not Hermitian-consistent")
    return np.ascontiguousarray(p.real)


@dataclass(frozen=True)
class CriterionConstants:
    """The three constants of the trace-norm criterion plus their parameters."""
    K: float
    L: float
    R: float
    provenance: tuple  # (dA, MA, xA, dB, MB, xB)


def _check_window(d, M, x, side):
    lo, hi = _window(d, M)
    if not (x > lo and x <= hi + 1e-12):
        raise ParameterError(
            f"purity x_{side} = {x} outside the admissible window ({lo}, {hi}] "
            f"for d={d}, M={M}")


def klr_constants(dA, MA, xA, dB, MB, xB):
    """Constants K, L, R of the trace-norm criterion.

    K = sqrt(dA dB (MA-1)(MB-1)),
    L = sqrt((dA-1)(dB-1)(MA^2 xA + dA^2)(MB^2 xB + dB^2)/(MA MB)),
    R = sqrt(dA dB (MA^2 xA - dA)(MB^2 xB - dB)/(MA MB)).

    With (N,M) = (1,d^2) these reduce to the single rank-1-family (GSIC)
    criterion constants; with (N,M) = (d+1,d), x = 1 they give the
    mutually-unbiased-bases case where K = L/2 = R.
    """
    _check_window(dA, MA, xA, "A")
    _check_window(dB, MB, xB, "B")
    K = math.sqrt(dA * dB * (MA - 1) * (MB - 1))
    L = math.sqrt((dA - 1) * (dB - 1) * (MA * MA * xA + dA * dA)
                  * (MB * MB * xB + dB * dB) / (MA * MB))
    R = math.sqrt(dA * dB * (MA * MA * xA - dA) * (MB * MB * xB - dB) / (MA * MB))
    return CriterionConstants(K, L, R, (dA, MA, xA, dB, MB, xB))


def schmidt_bound(norm, c):
    """Certified lower bound on the Schmidt number from a correlation trace norm.

    Returns (sn_real_lb, sn_int_lb): a state with Schmidt number <= r must
    satisfy norm <= L/K + (r-1) R/K, so sn_real_lb = (K*norm - L)/R bounds
    SN - 1 from below and sn_int_lb = max(1, ceil(sn_real_lb + 1 - slack)).
    """
    real_lb = (c.K * norm - c.L) / c.R
    int_lb = max(1, math.ceil(real_lb + 1.0 - INT_CEILING_SLACK))
    return real_lb, int_lb


def separability_bound(c):
    """Largest correlation trace norm reachable by separable states (L/K)."""
    return c.L / c.K


def square_norm_ceiling(d, M, x, r):
    """Trace-norm ceiling for Schmidt number <= r when both parties use the
    same (N,M) family in equal dimension d:
    (d-1)(M^2 x + d^2)/(d M (M-1)) + (r-1)(M^2 x - d)/(M (M-1))."""
    _check_window(d, M, x, "")
    return ((d - 1) * (M * M * x + d * d) / (d * M * (M - 1))
            + (r - 1) * (M * M * x - d) / (M * (M - 1)))


def concurrence_lower_bound(norm, c, dA, dB):
    """Concurrence lower bound (K/R) sqrt(2/(d(d-1))) (norm - L/K), clamped at 0."""
    d = min(dA, dB)
    value = (c.K / c.R) * math.sqrt(2.0 / (d * (d - 1))) * (norm - c.L / c.K)
    return max(0.0, value)


def pure_norm_closed_forms(dA, MA, xA, dB, MB, xB):
    """Trace norms of the two building blocks of a pure state's correlation
    matrix: the diagonal blocks D_s and the cross blocks O_{s,t}.

    Satisfies L = K*normD and R = K*normO exactly.
    """
    _check_window(dA, MA, xA, "A")
    _check_window(dB, MB, xB, "B")
    normD = (math.sqrt((dA - 1) * (MA * MA * xA + dA * dA) / (dA * MA * (MA - 1)))
             * math.sqrt((dB - 1) * (MB * MB * xB + dB * dB) / (dB * MB * (MB - 1))))
    normO = (math.sqrt((MA * MA * xA - dA) / (MA * (MA - 1)))
             * math.sqrt((MB * MB * xB - dB) / (MB * (MB - 1))))
    return normD, normO


def pure_state_identity(psi, p):
    """Both sides of the pure-state trace-norm identity for equal-dimension
    parties measured with the same family.

    lhs rescales the correlation trace norm; rhs = 2 sum_{i<j} lam_i lam_j
    over the Schmidt coefficients. The two agree for informationally complete
    families.
    """
    if psi.dA != psi.dB or psi.dA != p.d:
        raise DimensionMismatchError(
            f"identity needs equal dims matching the family: state "
            f"{psi.dA}x{psi.dB}, family d={p.d}")
    d, M, x = p.d, p.M, p.x
    rho = psi.density_matrix()
    norm = trace_norm(correlation_matrix(rho, p, p))
    lhs = (M * (M - 1) / (x * M * M - d)
           * (norm - (d - 1) * (x * M * M + d * d) / (d * M * (M - 1))))
    lam = psi.schmidt
    rhs = float(2.0 * sum(lam[i] * lam[j]
                          for i in range(lam.size) for j in range(i + 1, lam.size)))
    return lhs, rhs


def realignment_sn_bound(rho):
    """Realignment lower bound on the Schmidt number: ||R(rho)||_tr."""
    return trace_norm(realign(rho.mat, rho.dA, rho.dB))


def isotropic_norm_closed_form(d, N, M, x, v):
    """Correlation trace norm of the isotropic state in closed form:
    N/M + v N (M^2 x - d)/(d M)."""
    _check_window(d, M, x, "")
    if not 0 <= v <= 1:
        raise ParameterError(f"v = {v} outside [0, 1]")
    return N / M + v * N * (M * M * x - d) / (d * M)


def fidelity_isotropic_threshold(d, r):
    """Visibility above which the isotropic state has Schmidt number > r:
    v_opt = (r d - 1)/(d^2 - 1)."""
    if not 1 <= r < d:
        raise ParameterError(f"rank r = {r} outside [1, {d - 1}]")
    return (r * d - 1) / (d * d - 1)


def fidelity_implication_check(d, N, M, x, r, v):
    """Whether the trace-norm criterion certifies SN > r wherever the
    fidelity threshold does for the isotropic state.

    Returns (ceiling, norm, holds): the rank-r trace-norm ceiling, the
    isotropic correlation norm at visibility v, and True when either
    v <= v_opt(d, r) (nothing to certify) or norm > ceiling (strictly)."""
    v_opt = fidelity_isotropic_threshold(d, r)
    ceiling = square_norm_ceiling(d, M, x, r)
    norm = isotropic_norm_closed_form(d, N, M, x, v)
    return ceiling, norm, bool(v <= v_opt or norm > ceiling)


def max_entangled_fidelity(rho):
    """Overlap with the rank-min(dA,dB) maximally entangled state.

    The Schmidt number obeys SN >= d*F for this fidelity F, giving the
    fidelity baseline d*F - 1 on the SN - 1 scale.
    """
    d = min(rho.dA, rho.dB)
    psi = np.zeros(rho.dA * rho.dB, dtype=complex)
    for i in range(d):
        psi[i * rho.dB + i] = 1 / np.sqrt(d)
    return float(np.real(psi.conj() @ rho.mat @ psi))


def sic_from_fiducial(vec):
    """Symmetric rank-1 (1, d^2) family from the clock-and-shift orbit of a
    fiducial vector.

    The orbit is validated: all pairwise overlaps |<psi|psi'>|^2 must equal
    1/(d+1) within 1e-10, else the vector is rejected.
    """
    vec = np.asarray(vec, dtype=complex).reshape(-1)
    d = vec.size
    norm = np.linalg.norm(vec)
    if norm == 0:
        raise ParameterError("fiducial must be nonzero")
    vec = vec / norm
    omega = np.exp(2j * np.pi / d)
    states = [np.roll(vec * omega ** (k * np.arange(d)), j)
              for j in range(d) for k in range(d)]
    target = 1.0 / (d + 1)
    for i in range(d * d):
        for j in range(i + 1, d * d):
            overlap = abs(states[i].conj() @ states[j]) ** 2
            if abs(overlap - target) > 1e-10:
                raise ParameterError(
                    f"fiducial does not generate equiangular lines: overlap "
                    f"({i},{j}) = {overlap:.12g}, expected {target:.12g}")
    effects = np.array([np.outer(s, s.conj()) / d for s in states])
    return SymmetricPovm(d, 1, d * d, 1.0 / d**2, effects.reshape(1, d * d, d, d))


def sic_povm_d3():
    """The d=3 symmetric rank-1 family from the fiducial (|1> - |2>)/sqrt(2)."""
    return sic_from_fiducial(SIC_FIDUCIALS[3])


def gsic_povm(d, a):
    """A (1, d^2) family of purity a (depolarized rank-1 orbit).

    E_k = mu Pi_k / d + (1 - mu) I/d^2 with mu = sqrt((a - 1/d^3)/(1/d^2 - 1/d^3))
    keeps all defining relations with x = a exactly and stays positive for
    every admissible a. Falls back to the Hermitian-basis construction when no
    fiducial is on file for d and the implied t is admissible.
    """
    lo, hi = 1.0 / d**3, 1.0 / d**2
    if not (lo < a <= hi):
        raise ParameterError(f"purity a = {a} outside the window ({lo}, {hi}] for d={d}")
    if d in SIC_FIDUCIALS:
        sic = sic_from_fiducial(SIC_FIDUCIALS[d])
        mu = math.sqrt((a - lo) / (hi - lo))
        eye = np.eye(d)
        effects = mu * sic.effects + (1 - mu) * eye / d**2
        return SymmetricPovm(d, 1, d * d, a, effects)
    # Hermitian-basis fallback: invert x(t) and build if t is admissible.
    M = d * d
    t = math.sqrt((a - d / M**2) / ((M - 1) * (math.sqrt(M) + 1) ** 2))
    gb = group_basis(gellmann_basis(d), 1, M, "sequential")
    t_lo, t_hi = t_range(build_h(gb))
    if t > t_hi:
        raise ParameterError(
            f"no constructive realization on file: purity a = {a} needs t = {t:.6g} "
            f"beyond the admissible {t_hi:.6g} for the d={d} Hermitian-basis family")
    return build_povm(gb, t)


@dataclass
class CriterionReport:
    """Everything the criterion says about one state under one measurement pair."""
    trace_norm: float
    constants: CriterionConstants
    sn_real_lb: float
    sn_int_lb: int
    entangled: bool
    concurrence_lb: float
    baselines: dict

    def to_dict(self):
        return {
            "trace_norm": self.trace_norm,
            "constants": {"K": self.constants.K, "L": self.constants.L,
                          "R": self.constants.R,
                          "provenance": list(self.constants.provenance)},
            "sn_real_lb": self.sn_real_lb,
            "sn_int_lb": self.sn_int_lb,
            "entangled": self.entangled,
            "concurrence_lb": self.concurrence_lb,
            "baselines": self.baselines,
        }


BASELINE_KEYS = ("gsic", "sic", "realignment", "fidelity")


def full_report(rho, pA, pB, baselines=(), gsic_purity=None):
    """Evaluate the criterion and any selected baselines on one state.

    `baselines` is a subset of {"gsic", "sic", "realignment", "fidelity"};
    "gsic" requires gsic_purity = (aA, aB). Baseline values use the plotted
    SN - 1 normalization (realignment emits ||R||_tr - 1, fidelity d*F - 1).
    """
    unknown = set(baselines) - set(BASELINE_KEYS)
    if unknown:
        raise ParameterError(f"unknown baselines: {sorted(unknown)}")
    norm = trace_norm(correlation_matrix(rho, pA, pB))
    c = klr_constants(pA.d, pA.M, pA.x, pB.d, pB.M, pB.x)
    real_lb, int_lb = schmidt_bound(norm, c)
    conc = concurrence_lower_bound(norm, c, rho.dA, rho.dB)
    base = {}
    if "gsic" in baselines:
        if gsic_purity is None:
            raise ParameterError("gsic baseline needs gsic_purity = (aA, aB)")
        aA, aB = gsic_purity
        gA, gB = gsic_povm(rho.dA, aA), gsic_povm(rho.dB, aB)
        cg = klr_constants(rho.dA, rho.dA**2, aA, rho.dB, rho.dB**2, aB)
        base["gsic"] = schmidt_bound(trace_norm(correlation_matrix(rho, gA, gB)), cg)[0]
    if "sic" in baselines:
        if rho.dA not in SIC_FIDUCIALS or rho.dB not in SIC_FIDUCIALS:
            raise ParameterError(
                f"sic baseline has fiducials only for d in "
                f"{sorted(SIC_FIDUCIALS)}, state is {rho.dA}x{rho.dB}")
        sA = sic_from_fiducial(SIC_FIDUCIALS[rho.dA])
        sB = sA if rho.dB == rho.dA else sic_from_fiducial(SIC_FIDUCIALS[rho.dB])
        cs = klr_constants(rho.dA, rho.dA**2, 1 / rho.dA**2,
                           rho.dB, rho.dB**2, 1 / rho.dB**2)
        base["sic"] = schmidt_bound(trace_norm(correlation_matrix(rho, sA, sB)), cs)[0]
    if "realignment" in baselines:
        base["realignment"] = realignment_sn_bound(rho) - 1.0
    if "fidelity" in baselines:
        base["fidelity"] = min(rho.dA, rho.dB) * max_entangled_fidelity(rho) - 1.0
    return CriterionReport(norm, c, real_lb, int_lb, real_lb > 0, conc, base)
