"""Golden reference data for the regression and acceptance suites.

Everything here is transcribed reference output for the phosphorous-acid
H/P two-spin tomography analysis: normal matrices, their eigenvalues, the
determined parameter combinations, the exhaustive table of minimal
read-out sets, and four published density matrices. Values are transcribed
verbatim (two-decimal precision where the source prints two decimals).

Two transcription errata are documented where they are defined; the tests
compare against the verbatim data and check each erratum explicitly rather
than silently patching it.
"""

import numpy as np

# --- normal matrix of the full 18-read-out design (73 equations) -----------

_FULL_DIAG = (3, 5, 5, 4, 3, 4, 5, 3, 5, 3, 5, 5, 4, 4, 5, 5)
_FULL_COUPLINGS = (
    (1, 5, 0.5), (1, 8, 0.5), (5, 10, 0.5), (8, 10, 0.5),
    (2, 9, 1.0), (3, 7, 1.0), (11, 16, 1.0), (12, 15, 1.0),
)


def _build_sym(diag, couplings):
    c = np.diag(np.array(diag, dtype=float))
    for i, j, v in couplings:
        c[i - 1, j - 1] = v
        c[j - 1, i - 1] = v
    return c


NORMAL_MATRIX_FULL = _build_sym(_FULL_DIAG, _FULL_COUPLINGS)

EIGENVALUES_FULL = sorted([2.0, 3.0, 3.0] + [4.0] * 9 + [6.0] * 4)

# --- normal matrix of the six-read-out design {1,2,3,5,10,11} --------------
#
# Transcribed verbatim, including one documented misprint: entry (8,8) is
# given as 3/8. That value is impossible for this matrix: it is A^T A of a
# design whose trace row has coefficient 1 on parameter 8, so the (8,8)
# entry is a sum of squares containing 1^2 and cannot be below 1. The
# misprint also breaks trace(C) = sum of the quoted eigenvalues (25.5 vs
# 26.5). The corrected value 11/8 repairs both. Tests assert that the
# computed matrix disagrees with the verbatim transcription exactly at this
# entry and agrees with the correction.

_SIX_DIAG = (11 / 8, 2, 5 / 2, 1, 11 / 8, 1, 5 / 2, 3 / 8, 2, 11 / 8,
             3 / 2, 2, 3 / 2, 3 / 2, 2, 3 / 2)
_SIX_COUPLINGS = (
    (1, 5, 7 / 8), (1, 8, 7 / 8), (1, 10, 7 / 8),
    (5, 8, 7 / 8), (5, 10, 7 / 8), (8, 10, 7 / 8),
    (3, 7, 3 / 2), (11, 16, -1 / 2), (12, 15, 1.0), (13, 14, -1 / 2),
)

NORMAL_MATRIX_SIX_VERBATIM = _build_sym(_SIX_DIAG, _SIX_COUPLINGS)
SIX_ERRATUM_ENTRY = (8, 8)          # 1-based
SIX_ERRATUM_PRINTED = 3 / 8
SIX_ERRATUM_CORRECTED = 11 / 8

NORMAL_MATRIX_SIX = NORMAL_MATRIX_SIX_VERBATIM.copy()
NORMAL_MATRIX_SIX[7, 7] = SIX_ERRATUM_CORRECTED

SIX_READOUT_IDS = (1, 2, 3, 5, 10, 11)

EIGENVALUES_SIX = sorted([0.5] * 3 + [1.0] * 6 + [2.0] * 4 + [3.0] + [4.0] * 2)

# --- determined parameter combinations --------------------------------------
#
# Each entry: ({parameter index (1-based): coefficient}, quoted eigenvalue).
# Coefficients are quoted to two decimals, so eigenspace-membership checks
# use a 0.02 residual tolerance.
#
# The first full-set combination is transcribed verbatim but carries a
# documented misprint: a dropped x7 term. As written it cannot belong to
# any eigenspace of the full-set normal matrix, because parameters x3 and
# x7 interact only through the exact 2x2 block [[5, 1], [1, 5]], which
# forces |coefficient of x3| = |coefficient of x7| in every eigenvector.
# Restoring +0.37 x7 (COMBINATION_FULL_1_CORRECTED) brings the vector back
# to unit length and makes it orthogonal to the other four quoted
# combinations of eigenvalue 4. Tests verify both facts explicitly.

COMBINATIONS_FULL = (
    ({3: -0.37, 4: 0.82, 6: -0.24}, 4.0),
    ({1: -0.19, 2: 0.41, 3: -0.17, 4: -0.32, 5: -0.19,
      6: -0.59, 7: 0.17, 8: -0.19, 9: -0.41, 10: -0.19}, 4.0),
    ({1: -0.0087, 2: -0.093, 3: -0.57, 4: -0.39, 5: -0.0087,
      6: 0.42, 7: 0.57, 8: -0.0087, 9: 0.093, 10: -0.0087}, 4.0),
    ({1: 0.30, 2: -0.30, 3: -0.093, 4: -0.26, 5: 0.30,
      6: -0.61, 7: 0.093, 8: 0.30, 9: 0.30, 10: 0.30}, 4.0),
    ({1: -0.35, 2: -0.48, 3: 0.027, 4: -0.035, 5: -0.35,
      6: -0.20, 7: -0.027, 8: -0.35, 9: 0.48, 10: -0.35}, 4.0),
    ({2: -0.55, 3: 0.44, 7: 0.44, 9: -0.55}, 6.0),
    ({2: -0.44, 3: -0.55, 7: -0.55, 9: -0.44}, 6.0),
    ({5: 0.71, 8: -0.71}, 3.0),
    ({1: -0.71, 10: 0.71}, 3.0),
    ({1: 0.50, 5: -0.50, 8: -0.50, 10: 0.50}, 2.0),
    ({12: 0.71, 15: 0.71}, 6.0),
    ({12: -0.71, 15: 0.71}, 4.0),
    ({13: 1.0}, 4.0),
    ({14: 1.0}, 4.0),
    ({11: 0.71, 16: -0.71}, 4.0),
    ({11: 0.71, 16: 0.71}, 6.0),
)

FULL_ERRATUM_INDEX = 0  # position of the misprinted combination above
COMBINATION_FULL_1_CORRECTED = ({3: -0.37, 4: 0.82, 6: -0.24, 7: 0.37}, 4.0)

COMBINATIONS_SIX = (
    ({6: -1.0}, 1.0),
    ({2: 1.0}, 2.0),
    ({4: 1.0}, 1.0),
    ({1: -0.79, 5: 0.21, 8: 0.58}, 0.5),
    ({1: -0.21, 5: 0.79, 8: -0.58}, 0.5),
    ({3: 0.71, 7: -0.71}, 1.0),
    ({3: 0.71, 7: 0.71}, 4.0),
    ({9: 1.0}, 2.0),
    ({1: -0.50, 5: -0.50, 8: -0.50, 10: -0.50}, 4.0),
    ({1: -0.29, 5: -0.29, 8: -0.29, 10: 0.87}, 0.5),
    ({12: -0.71, 15: 0.71}, 1.0),
    ({12: 0.71, 15: 0.71}, 3.0),
    ({13: -0.71, 14: -0.71}, 1.0),
    ({13: -0.71, 14: 0.71}, 2.0),
    ({11: -0.71, 16: -0.71}, 1.0),
    ({11: -0.71, 16: 0.71}, 2.0),
)


def combination_vector(coeffs: dict) -> np.ndarray:
    v = np.zeros(16)
    for k, c in coeffs.items():
        v[k - 1] = c
    return v


# --- exhaustive table of minimal (size-5) full-rank read-out sets ----------

MINIMAL_SETS_5 = tuple(map(tuple, (
    (1, 2, 6, 12, 13), (1, 2, 6, 12, 14), (1, 2, 9, 12, 16),
    (1, 2, 9, 12, 17), (1, 3, 5, 11, 13), (1, 3, 5, 11, 15),
    (1, 3, 8, 11, 16), (1, 3, 8, 11, 18), (1, 5, 6, 11, 13),
    (1, 5, 6, 12, 13), (1, 5, 11, 13, 16), (1, 5, 11, 13, 17),
    (1, 6, 12, 13, 16), (1, 6, 12, 13, 18), (1, 8, 9, 11, 16),
    (1, 8, 9, 12, 16), (1, 8, 11, 13, 16), (1, 8, 11, 14, 16),
    (1, 9, 12, 13, 16), (1, 9, 12, 15, 16), (2, 3, 4, 10, 14),
    (2, 3, 4, 10, 15), (2, 3, 7, 10, 17), (2, 3, 7, 10, 18),
    (2, 4, 6, 10, 14), (2, 4, 6, 12, 14), (2, 4, 10, 14, 16),
    (2, 4, 10, 14, 17), (2, 6, 12, 14, 17), (2, 6, 12, 14, 18),
    (2, 7, 9, 10, 17), (2, 7, 9, 12, 17), (2, 7, 10, 13, 17),
    (2, 7, 10, 14, 17), (2, 9, 12, 14, 17), (2, 9, 12, 15, 17),
    (3, 4, 5, 10, 15), (3, 4, 5, 11, 15), (3, 4, 10, 15, 16),
    (3, 4, 10, 15, 18), (3, 5, 11, 15, 17), (3, 5, 11, 15, 18),
    (3, 7, 8, 10, 18), (3, 7, 8, 11, 18), (3, 7, 10, 13, 18),
    (3, 7, 10, 15, 18), (3, 8, 11, 14, 18), (3, 8, 11, 15, 18),
    (4, 5, 9, 15, 16), (4, 5, 9, 15, 17), (4, 6, 8, 14, 16),
    (4, 6, 8, 14, 18), (4, 8, 9, 14, 16), (4, 8, 9, 15, 16),
    (4, 8, 10, 14, 16), (4, 8, 11, 14, 16), (4, 9, 10, 15, 16),
    (4, 9, 12, 15, 16), (5, 6, 7, 13, 17), (5, 6, 7, 13, 18),
    (5, 7, 9, 13, 17), (5, 7, 9, 15, 17), (5, 7, 10, 13, 17),
    (5, 7, 11, 13, 17), (5, 9, 11, 15, 17), (5, 9, 12, 15, 17),
    (6, 7, 8, 13, 18), (6, 7, 8, 14, 18), (6, 7, 10, 13, 18),
    (6, 7, 12, 13, 18), (6, 8, 11, 14, 18), (6, 8, 12, 14, 18),
)))

# --- published density matrices ---------------------------------------------

RHO_PREDICTED = np.array([
    [0.31, 0.31, 0.31, -0.063 - 0.13j],
    [0.31, 0.31, 0.31, -0.063 - 0.13j],
    [0.31, 0.31, 0.31, -0.063 - 0.13j],
    [-0.063 + 0.13j, -0.063 + 0.13j, -0.063 + 0.13j, 0.063],
])

# Parameter vector of RHO_PREDICTED under the x1..x16 layout.
RHO_PREDICTED_PARAMS = np.array([
    0.31, 0.31, 0.31, -0.063, 0.31, 0.31, -0.063, 0.31, -0.063, 0.063,
    0.0, 0.0, -0.13, 0.0, -0.13, -0.13,
])

RHO_ALL_READOUTS = np.array([
    [0.36, 0.33 - 0.087j, 0.31 + 0.037j, -0.034 - 0.22j],
    [0.33 + 0.087j, 0.30, 0.28 - 0.022j, -0.079 - 0.14j],
    [0.31 - 0.037j, 0.28 + 0.022j, 0.23, -0.044 - 0.13j],
    [-0.034 + 0.22j, -0.079 + 0.14j, -0.044 + 0.13j, 0.12],
])

RHO_TWELVE_READOUTS = np.array([
    [0.37, 0.31 - 0.13j, 0.29 + 0.034j, -0.074 - 0.17j],
    [0.31 + 0.13j, 0.28, 0.37 + 0.0091j, -0.059 - 0.14j],
    [0.29 - 0.034j, 0.37 - 0.0091j, 0.25, -0.058 - 0.17j],
    [-0.074 + 0.17j, -0.059 + 0.14j, -0.058 + 0.17j, 0.094],
])

# Verbatim transcription. Entry (4,1) is quoted as +0.025+0.14i, which is
# not the conjugate of entry (1,4); the 0.05 Hermiticity defect is part of
# the transcription and is kept, because the quoted relative-error values
# below were evidently computed from the matrix as printed.
RHO_SIX_READOUTS = np.array([
    [0.52, 0.29 - 0.21j, 0.29 + 0.068j, -0.025 - 0.14j],
    [0.29 + 0.21j, 0.16, 0.37 + 0.085j, -0.045 - 0.13j],
    [0.29 - 0.068j, 0.37 - 0.085j, 0.32, 0.0039 - 0.15j],
    [0.025 + 0.14j, -0.045 + 0.13j, 0.0039 + 0.15j, 0.18],
])

DELTA_ALL_QUOTED = 0.17
DELTA_SIX_QUOTED = 0.32
DELTA_TOL = 0.02

# Frozen oracle value: spectral norm of RHO_PREDICTED, computed by power
# iteration on M^H M (2000 iterations) and cross-checked against an SVD.
RHO_PREDICTED_SPECTRAL_NORM = 0.9970289701905376
