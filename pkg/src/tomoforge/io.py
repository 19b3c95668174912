"""Text formats for readings and density matrices.

Readings file: one record per line, ``readout_id,peak,real,imag``, with
``#`` comment lines; header comments may carry ``# key=value`` metadata
(noise_sigma, seed, source). Floats are written with repr, so a write/parse
round trip is bit-exact.

Density file: 4 lines of 4 whitespace-separated complex literals ``a+bi`` /
``a-bi``. Parsing checks Hermiticity: silent up to ``hermiticity_tol``
(default 1e-6), a warning up to ``hermiticity_error_tol`` (default 1e-2),
an error above that.
"""

from __future__ import annotations

import re
import warnings
from typing import Iterable, Optional

import numpy as np

from .errors import ValidationError
from .model import N_READOUTS, PEAKS, Reading

_FLOAT = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(rf"^({_FLOAT})([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i$")

DEFAULT_HERMITICITY_TOL = 1e-6
DEFAULT_HERMITICITY_ERROR_TOL = 1e-2


def parse_readings(text: str) -> list:
    """Parse a readings file into Reading records.

    Rejects malformed lines (reporting the line number), out-of-range ids,
    unknown peaks and duplicate (id, peak) records.
    """
    out = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 4:
            raise ValidationError(
                f"line {lineno}: expected 'readout_id,peak,real,imag', got {raw!r}"
            )
        try:
            rid = int(parts[0])
        except ValueError:
            raise ValidationError(f"line {lineno}: read-out id {parts[0]!r} is not an integer") from None
        if not 1 <= rid <= N_READOUTS:
            raise ValidationError(f"line {lineno}: read-out id {rid} out of range 1..{N_READOUTS}")
        peak = parts[1]
        if peak not in PEAKS:
            raise ValidationError(f"line {lineno}: unknown peak {peak!r}; expected one of {PEAKS}")
        try:
            re_part, im_part = float(parts[2]), float(parts[3])
        except ValueError:
            raise ValidationError(f"line {lineno}: could not parse value from {raw!r}") from None
        key = (rid, peak)
        if key in seen:
            raise ValidationError(f"line {lineno}: duplicate record for read-out {rid}, {peak} peak")
        seen.add(key)
        out.append(Reading(rid, peak, complex(re_part, im_part)))
    return out


def format_readings(readings: Iterable[Reading], metadata: Optional[dict] = None) -> str:
    lines = []
    for key, value in (metadata or {}).items():
        lines.append(f"# {key}={value}")
    for r in readings:
        lines.append(f"{r.readout},{r.peak},{r.value.real!r},{r.value.imag!r}")
    return "\n".join(lines) + "\n"


def write_readings(path, readings: Iterable[Reading], metadata: Optional[dict] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_readings(readings, metadata))


def read_readings(path) -> list:
    with open(path, encoding="utf-8") as fh:
        return parse_readings(fh.read())


def _parse_complex(token: str, lineno: int):
    m = _COMPLEX_RE.match(token)
    if m is None:
        raise ValidationError(f"line {lineno}: unparseable complex literal {token!r} (expected a+bi)")
    return complex(float(m.group(1)), float(m.group(2)))


def parse_density(
    text: str,
    hermiticity_tol: float = DEFAULT_HERMITICITY_TOL,
    hermiticity_error_tol: float = DEFAULT_HERMITICITY_ERROR_TOL,
) -> np.ndarray:
    """Parse a 4x4 complex matrix and check it is (close to) Hermitian."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 4:
            raise ValidationError(f"line {lineno}: expected 4 entries per row, got {len(tokens)}")
        rows.append([_parse_complex(t, lineno) for t in tokens])
    if len(rows) != 4:
        raise ValidationError(f"expected 4 matrix rows, got {len(rows)}")
    m = np.array(rows, dtype=complex)
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > hermiticity_error_tol:
        raise ValidationError(
            f"matrix is not Hermitian: worst element-pair deviation {dev:.3e} "
            f"exceeds {hermiticity_error_tol:.1e}"
        )
    if dev > hermiticity_tol:
        warnings.warn(
            f"density matrix is only approximately Hermitian (deviation {dev:.3e})",
            stacklevel=2,
        )
    return m


def _format_complex(value: complex) -> str:
    re_s = repr(float(value.real))
    im_s = repr(float(value.imag))
    if not im_s.startswith("-"):
        im_s = "+" + im_s
    return f"{re_s}{im_s}i"


def format_density(matrix) -> str:
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (4, 4):
        raise ValidationError(f"expected a 4x4 matrix, got shape {m.shape}")
    return "\n".join(" ".join(_format_complex(v) for v in row) for row in m) + "\n"


def write_density(path, matrix) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_density(matrix))


def read_density(path, **kwargs) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return parse_density(fh.read(), **kwargs)
