"""Forward model for 2-qubit NMR state tomography read-outs.

A 4x4 two-spin density matrix is parameterized by 16 real numbers
x1..x16: four diagonal populations (x1, x5, x8, x10), six real parts of the
upper-triangle coherences (x2, x3, x4, x6, x7, x9) and their six imaginary
parts (x11..x16). A read-out applies one of nine pre-acquisition rotations
(II, IX, IY, XI, XX, XY, YI, YX, YY; I = identity, X/Y = 90-degree rotation
about x/y on that spin) and then records the spectrum of one spin. Each
spectrum integrates to two complex peak areas, which equal two fixed
off-diagonal elements of the rotated matrix:

* proton (H) acquisition reads elements (1,3) (left peak) and (2,4) (right),
* phosphorus (P) acquisition reads elements (1,2) (left) and (3,4) (right).

Read-outs are numbered 1..18: ids 1-9 are the nine rotations with H
acquisition in the order above, ids 10-18 the same rotations with P
acquisition. Every peak yields a real and an imaginary equation that are
linear in x, so a read-out contributes four rows to the design system; an
optional trace row (x1 + x5 + x8 + x10 = 1) fixes normalization.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import ValidationError

ROTATION_LABELS = ("II", "IX", "IY", "XI", "XX", "XY", "YI", "YX", "YY")
N_READOUTS = 18
N_PARAMS = 16
PEAKS = ("left", "right")
TRACE_LABEL = "trace"

# 0-based parameter slots of the four diagonal entries (x1, x5, x8, x10).
DIAGONAL_SLOTS = (0, 4, 7, 9)

_SQ2 = np.sqrt(2.0)
# 90-degree rotations about x and y for a single spin, |1> = spin up.
_HALF_TURN_X = np.array([[1.0, -1.0j], [-1.0j, 1.0]]) / _SQ2
_HALF_TURN_Y = np.array([[1.0, 1.0], [-1.0, 1.0]]) / _SQ2
_SINGLE_SPIN = {"I": np.eye(2, dtype=complex), "X": _HALF_TURN_X, "Y": _HALF_TURN_Y}

# Upper-triangle position -> (real-part slot, imaginary-part slot), 0-based.
_OFFDIAG_SLOTS = {
    (0, 1): (1, 10),
    (0, 2): (2, 11),
    (0, 3): (3, 12),
    (1, 2): (5, 13),
    (1, 3): (6, 14),
    (2, 3): (8, 15),
}


def _build_rotations() -> dict:
    mats = {}
    for label in ROTATION_LABELS:
        m = np.kron(_SINGLE_SPIN[label[0]], _SINGLE_SPIN[label[1]])
        m.setflags(write=False)
        mats[label] = m
    return mats


_ROTATIONS = _build_rotations()


def _parameter_basis() -> np.ndarray:
    basis = np.zeros((N_PARAMS, 4, 4), dtype=complex)
    for slot, i in zip(DIAGONAL_SLOTS, range(4)):
        basis[slot, i, i] = 1.0
    for (i, j), (re_slot, im_slot) in _OFFDIAG_SLOTS.items():
        basis[re_slot, i, j] = 1.0
        basis[re_slot, j, i] = 1.0
        basis[im_slot, i, j] = 1.0j
        basis[im_slot, j, i] = -1.0j
    basis.setflags(write=False)
    return basis


_BASIS = _parameter_basis()


def rotation_matrix(label: str) -> np.ndarray:
    """The 4x4 unitary applied before acquisition for one rotation label."""
    if label not in ROTATION_LABELS:
        raise ValidationError(f"unknown rotation label {label!r}; expected one of {ROTATION_LABELS}")
    return _ROTATIONS[label]


def require_readout_id(readout: int) -> int:
    rid = int(readout)
    if rid != readout or not 1 <= rid <= N_READOUTS:
        raise ValidationError(f"read-out id must be an integer in 1..{N_READOUTS}, got {readout!r}")
    return rid


def readout_label(readout: int) -> str:
    """Rotation label of a read-out id (1-9 and 10-18 share the same cycle)."""
    return ROTATION_LABELS[(require_readout_id(readout) - 1) % 9]


def readout_spin(readout: int) -> str:
    """Which spin is acquired: 'H' for ids 1-9, 'P' for ids 10-18."""
    return "H" if require_readout_id(readout) <= 9 else "P"


def observable_positions(readout: int) -> tuple:
    """The two observed element positions of the rotated matrix, 1-based.

    Returns ((row, col) of the left peak, (row, col) of the right peak).
    """
    if readout_spin(readout) == "H":
        return ((1, 3), (2, 4))
    return ((1, 2), (3, 4))


def params_to_matrix(params) -> np.ndarray:
    """Assemble the 4x4 Hermitian matrix from its 16 real parameters."""
    x = np.asarray(params, dtype=float)
    if x.shape != (N_PARAMS,):
        raise ValidationError(f"expected {N_PARAMS} real parameters, got shape {x.shape}")
    m = np.zeros((4, 4), dtype=complex)
    for slot, i in zip(DIAGONAL_SLOTS, range(4)):
        m[i, i] = x[slot]
    for (i, j), (re_slot, im_slot) in _OFFDIAG_SLOTS.items():
        m[i, j] = x[re_slot] + 1.0j * x[im_slot]
        m[j, i] = x[re_slot] - 1.0j * x[im_slot]
    return m


def matrix_to_params(matrix, hermiticity_tol: float = 1e-9) -> np.ndarray:
    """Read the 16 real parameters off a Hermitian 4x4 matrix.

    Exact inverse of params_to_matrix (the upper triangle and the diagonal
    are copied verbatim). Rejects non-Hermitian input, naming the worst
    offending element pair.
    """
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (4, 4):
        raise ValidationError(f"expected a 4x4 matrix, got shape {m.shape}")
    dev = np.abs(m - m.conj().T)
    if np.max(dev) > hermiticity_tol:
        i, j = np.unravel_index(int(np.argmax(dev)), dev.shape)
        raise ValidationError(
            f"matrix is not Hermitian: elements ({i + 1},{j + 1}) and ({j + 1},{i + 1}) "
            f"differ by {dev[i, j]:.3e} (tolerance {hermiticity_tol:.1e})"
        )
    x = np.zeros(N_PARAMS)
    for slot, i in zip(DIAGONAL_SLOTS, range(4)):
        x[slot] = m[i, i].real
    for (i, j), (re_slot, im_slot) in _OFFDIAG_SLOTS.items():
        x[re_slot] = m[i, j].real
        x[im_slot] = m[i, j].imag
    return x


def maximally_mixed_params() -> np.ndarray:
    """Parameters of the maximally mixed state (identity / 4)."""
    x = np.zeros(N_PARAMS)
    x[list(DIAGONAL_SLOTS)] = 0.25
    return x


def is_trace_normalized(params, tol: float = 1e-9) -> bool:
    x = np.asarray(params, dtype=float)
    return abs(float(x[list(DIAGONAL_SLOTS)].sum()) - 1.0) <= tol


def apply_rotation(rho, label: str) -> np.ndarray:
    """Conjugate a Hermitian 4x4 matrix by one rotation: R . rho . R^dagger."""
    m = np.asarray(rho, dtype=complex)
    if m.shape != (4, 4):
        raise ValidationError(f"expected a 4x4 matrix, got shape {m.shape}")
    r = rotation_matrix(label)
    return r @ m @ r.conj().T


# Conjugation by the rotations can only produce these coefficient magnitudes.
_EXACT_COEFFICIENTS = np.array([0.0, 0.25, 0.5, 1.0, 1.0 / _SQ2, 0.5 / _SQ2])
_EXACT_COEFFICIENTS = np.concatenate([_EXACT_COEFFICIENTS, -_EXACT_COEFFICIENTS[1:]])


def _snap_coefficients(rows: np.ndarray) -> np.ndarray:
    """Remove float dust from coefficients known to be exact values."""
    dist = np.abs(rows[..., None] - _EXACT_COEFFICIENTS)
    nearest = np.argmin(dist, axis=-1)
    return np.where(np.min(dist, axis=-1) < 1e-12, _EXACT_COEFFICIENTS[nearest], rows)


@functools.lru_cache(maxsize=None)
def _readout_block(rid: int):
    """The cached 4x16 coefficient block of one read-out (rows: left re/im,
    right re/im), produced by conjugating each parameter basis matrix."""
    r = rotation_matrix(readout_label(rid))
    rotated = np.einsum("ij,mjk,lk->mil", r, _BASIS, r.conj())
    rows = np.empty((4, N_PARAMS))
    labels = []
    for k, (p, (i, j)) in enumerate(zip(PEAKS, observable_positions(rid))):
        elem = rotated[:, i - 1, j - 1]
        rows[2 * k] = elem.real
        rows[2 * k + 1] = elem.imag
        labels.append((rid, p, "re"))
        labels.append((rid, p, "im"))
    rows = _snap_coefficients(rows)
    rows.setflags(write=False)
    return rows, tuple(labels)


def readout_rows(readout: int):
    """Coefficient rows of one read-out.

    Returns (rows, labels): a 4x16 array whose rows are the real-part and
    imaginary-part equations of the left then right peak, and a tuple of
    matching (id, peak, 're'|'im') labels.
    """
    rows, labels = _readout_block(require_readout_id(readout))
    return rows.copy(), labels


@dataclass(frozen=True)
class Reading:
    """One measured peak: the complex integrated area of a spectral peak."""

    readout: int
    peak: str
    value: complex


@dataclass(frozen=True)
class DesignSystem:
    """The stacked real linear system  matrix . x = rhs.

    Rows follow ascending read-out id, left peak before right, real part
    before imaginary part; the trace row, when present, comes last. Each row
    label is (readout, peak, 're'|'im') or the string 'trace'.
    """

    matrix: np.ndarray
    rhs: np.ndarray
    row_labels: tuple

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    def has_trace_row(self) -> bool:
        return bool(self.row_labels) and self.row_labels[-1] == TRACE_LABEL


def _validated_ids(readouts: Iterable) -> list:
    ids = [require_readout_id(r) for r in readouts]
    if not ids:
        raise ValidationError("read-out set must not be empty")
    if len(set(ids)) != len(ids):
        dupes = sorted({r for r in ids if ids.count(r) > 1})
        raise ValidationError(f"duplicate read-out ids: {dupes}")
    return sorted(ids)


def assemble_design(
    readouts: Iterable,
    include_trace: bool = True,
    readings: Optional[Sequence[Reading]] = None,
) -> DesignSystem:
    """Stack the design system for a set of read-outs.

    Without readings the right-hand side of every measurement row is zero
    (design-only mode); the trace row always carries rhs 1. With readings,
    they must cover exactly the requested read-outs, one value per peak.
    """
    ids = _validated_ids(readouts)

    values = None
    if readings is not None:
        values = {}
        for rec in readings:
            key = (require_readout_id(rec.readout), rec.peak)
            if rec.peak not in PEAKS:
                raise ValidationError(f"unknown peak {rec.peak!r}; expected one of {PEAKS}")
            if key in values:
                raise ValidationError(f"duplicate reading for read-out {key[0]}, {key[1]} peak")
            values[key] = complex(rec.value)
        expected = {(rid, p) for rid in ids for p in PEAKS}
        if set(values) != expected:
            missing = sorted(expected - set(values))
            extra = sorted(set(values) - expected)
            raise ValidationError(
                f"readings do not match the read-out set (missing {missing}, unexpected {extra})"
            )

    blocks, labels, rhs = [], [], []
    for rid in ids:
        rows, row_labels = _readout_block(rid)
        blocks.append(rows)
        labels.extend(row_labels)
        for p in PEAKS:
            v = values[(rid, p)] if values is not None else 0.0j
            rhs.extend((v.real, v.imag))
    if include_trace:
        trace_row = np.zeros((1, N_PARAMS))
        trace_row[0, list(DIAGONAL_SLOTS)] = 1.0
        blocks.append(trace_row)
        labels.append(TRACE_LABEL)
        rhs.append(1.0)
    return DesignSystem(np.vstack(blocks), np.array(rhs), tuple(labels))


def simulate_readings(rho, readouts: Iterable, noise_sigma: float = 0.0, seed: int = 0) -> list:
    """Simulate the peak readings an acquisition of ``readouts`` would give.

    ``rho`` must be Hermitian with unit trace. Gaussian noise of standard
    deviation ``noise_sigma`` is added independently to the real and
    imaginary part of every peak; the draw order is fixed (ascending id,
    left before right, real before imaginary), so a seed pins the output.
    """
    m = np.asarray(rho, dtype=complex)
    matrix_to_params(m)  # shape + hermiticity validation
    tr = complex(np.trace(m))
    if abs(tr - 1.0) > 1e-9:
        raise ValidationError(f"density matrix must have trace 1, got {tr.real:.6g}")
    if noise_sigma < 0:
        raise ValidationError(f"noise sigma must be >= 0, got {noise_sigma}")
    ids = _validated_ids(readouts)
    rng = np.random.default_rng(seed)
    out = []
    for rid in ids:
        rotated = apply_rotation(m, readout_label(rid))
        for p, (i, j) in zip(PEAKS, observable_positions(rid)):
            v = complex(rotated[i - 1, j - 1])
            if noise_sigma > 0:
                v += rng.normal(0.0, noise_sigma) + 1.0j * rng.normal(0.0, noise_sigma)
            out.append(Reading(rid, p, v))
    return out
