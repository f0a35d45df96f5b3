"""Orthonormal traceless Hermitian operator bases and their groupings.

Generates the generalized Gell-Mann matrices in a fixed canonical order and
partitions them into the N groups of M-1 operators that the symmetric-POVM
construction consumes. Two named groupings used by the worked examples are
provided as explicit permutations, and arbitrary permutations can be supplied
directly or loaded from JSON.
"""

import json

import numpy as np

from .errors import DimensionMismatchError, ParameterError

# Named grouping for the (5,4) family in dimension 4: antisymmetric operators
# of row 0, then mixed groups, then the three diagonals. Indices refer to the
# canonical order of gellmann_basis(4).
APPENDIX_A_PERM = (
    (1, 3, 5),      # antisym (0,1), (0,2), (0,3)
    (0, 7, 9),      # sym (0,1); antisym (1,2), (1,3)
    (2, 6, 11),     # sym (0,2), (1,2); antisym (2,3)
    (4, 8, 10),     # sym (0,3), (1,3), (2,3)
    (12, 13, 14),   # diagonals
)

# Named grouping for the (8,2) family in dimension 3: singleton groups in the
# canonical order (sym/antisym interleaved per pair, then diagonals).
APPENDIX_B_PERM = tuple((i,) for i in range(8))


class OperatorBasis:
    """The d^2 - 1 traceless orthonormal Hermitian operators for dimension d.

    The identity component I/sqrt(d) is implicit and never stored.
    """

    def __init__(self, d, ops):
        self.d = int(d)
        self.ops = tuple(np.asarray(g) for g in ops)
        if len(self.ops) != self.d * self.d - 1:
            raise ParameterError(
                f"basis for d={d} needs {d*d-1} operators, got {len(self.ops)}")
        for g in self.ops:
            g.setflags(write=False)

    def __len__(self):
        return len(self.ops)

    def __getitem__(self, i):
        return self.ops[i]


class GroupedBasis:
    """A partition of an OperatorBasis into N groups of M-1 operators."""

    def __init__(self, d, N, M, groups):
        self.d = int(d)
        self.N = int(N)
        self.M = int(M)
        self.groups = tuple(tuple(np.asarray(g) for g in grp) for grp in groups)
        if self.N * (self.M - 1) != self.d * self.d - 1:
            raise ParameterError(
                f"(N,M)=({N},{M}) is not informationally complete for d={d}: "
                f"N(M-1) = {N*(M-1)} != d^2-1 = {d*d-1}")
        if len(self.groups) != self.N or any(len(g) != self.M - 1 for g in self.groups):
            raise ParameterError("grouping does not form N groups of M-1 operators")


def gellmann_basis(d):
    """Generalized Gell-Mann matrices for dimension d, canonical order.

    For each index pair j < k (lexicographic) the symmetric operator
    (|j><k| + |k><j|)/sqrt(2) followed by the antisymmetric
    (-i|j><k| + i|k><j|)/sqrt(2); then the d-1 diagonal operators, the m-th
    being diag(1,...,1,-m,0,...,0)/sqrt(m(m+1)) with m ones.
    """
    if d < 2:
        raise ParameterError(f"dimension must be >= 2, got {d}")
    ops = []
    s = 1.0 / np.sqrt(2.0)
    for j in range(d):
        for k in range(j + 1, d):
            sym = np.zeros((d, d), dtype=complex)
            sym[j, k] = s
            sym[k, j] = s
            ops.append(sym)
            asym = np.zeros((d, d), dtype=complex)
            asym[j, k] = -1j * s
            asym[k, j] = 1j * s
            ops.append(asym)
    for m in range(1, d):
        diag = np.zeros((d, d), dtype=complex)
        c = 1.0 / np.sqrt(m * (m + 1.0))
        for i in range(m):
            diag[i, i] = c
        diag[m, m] = -m * c
        ops.append(diag)
    return OperatorBasis(d, ops)


def group_basis(basis, N, M, scheme="sequential"):
    """Partition a basis into the N groups of M-1 operators of an (N,M) family.

    `scheme` is "sequential" (canonical order chopped into N consecutive
    blocks), "appendix-A" (the named (5,4)/d=4 grouping), "appendix-B" (the
    named (8,2)/d=3 grouping), or an explicit sequence of N index groups into
    the canonical order.
    """
    d = basis.d
    if N * (M - 1) != d * d - 1:
        raise ParameterError(
            f"(N,M)=({N},{M}) with d={d}: N(M-1) = {N*(M-1)} != d^2-1 = {d*d-1}")
    if isinstance(scheme, str):
        if scheme == "sequential":
            perm = tuple(tuple(range(a * (M - 1), (a + 1) * (M - 1))) for a in range(N))
        elif scheme == "appendix-A":
            if d != 4 or (N, M) != (5, 4):
                raise ParameterError("scheme appendix-A requires d=4, (N,M)=(5,4)")
            perm = APPENDIX_A_PERM
        elif scheme == "appendix-B":
            if d != 3 or (N, M) != (8, 2):
                raise ParameterError("scheme appendix-B requires d=3, (N,M)=(8,2)")
            perm = APPENDIX_B_PERM
        else:
            raise ParameterError(f"unknown grouping scheme {scheme!r}")
    else:
        perm = tuple(tuple(int(i) for i in grp) for grp in scheme)
        flat = sorted(i for grp in perm for i in grp)
        if flat != list(range(d * d - 1)):
            raise ParameterError("explicit grouping is not a permutation of the basis")
    groups = [[basis.ops[i] for i in grp] for grp in perm]
    return GroupedBasis(d, N, M, groups)


def load_grouping(path):
    """Load a grouped basis from a JSON file {"d":..,"N":..,"M":..,"perm":[[..],..]}."""
    with open(path) as fh:
        spec = json.load(fh)
    try:
        d, N, M, perm = spec["d"], spec["N"], spec["M"], spec["perm"]
    except (KeyError, TypeError) as exc:
        raise ParameterError(f"grouping file {path} is missing field {exc}") from exc
    return group_basis(gellmann_basis(d), N, M, perm)
