"""Combinatorial search over read-out sets.

A set of read-outs determines all 16 parameters iff its design system
(with the trace row) has rank 16. These helpers check single sets, find the
smallest workable size, exhaustively enumerate all full-rank sets of a given
size, and rank sets by how well-conditioned their normal matrix is.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .linalg import matrix_rank, sym_eigen
from .model import N_PARAMS, N_READOUTS, assemble_design

RANK_TOL = 1e-10


@dataclass(frozen=True)
class SetReport:
    """Rank and conditioning summary of one read-out set (trace row included)."""

    ids: tuple
    rank: int
    full_rank: bool
    min_eigenvalue: float
    eigenvalues: np.ndarray


def _design_rank(ids) -> int:
    return matrix_rank(assemble_design(ids).matrix, RANK_TOL)


def set_report(readouts) -> SetReport:
    design = assemble_design(readouts)
    rank = matrix_rank(design.matrix, RANK_TOL)
    eig = sym_eigen(design.matrix.T @ design.matrix).eigenvalues
    ids = tuple(sorted(int(r) for r in readouts))
    return SetReport(ids, rank, rank == N_PARAMS, float(eig[-1]), eig)


def minimum_readout_count() -> int:
    """Smallest k for which some k-read-out set has a full-rank design."""
    for k in range(1, N_READOUTS + 1):
        for combo in itertools.combinations(range(1, N_READOUTS + 1), k):
            if _design_rank(combo) == N_PARAMS:
                return k
    raise AssertionError("unreachable: the full 18-read-out design has rank 16")


def enumerate_minimal_sets(size: int) -> list:
    """All full-rank read-out sets of the given size, in lexicographic order.

    Tests every one of the C(18, size) subsets; deterministic.
    """
    if not 1 <= size <= N_READOUTS:
        raise ValidationError(f"set size must be in 1..{N_READOUTS}, got {size}")
    out = []
    for combo in itertools.combinations(range(1, N_READOUTS + 1), size):
        if _design_rank(combo) == N_PARAMS:
            out.append(set_report(combo))
    return out


def rank_sets_by_conditioning(reports, top=None) -> list:
    """Full-rank reports sorted by descending smallest eigenvalue.

    Ties break lexicographically on ids; the sort is stable, so duplicated
    reports keep their input order. ``top`` limits the returned count.
    """
    ordered = sorted(
        (r for r in reports if r.full_rank),
        key=lambda r: (-r.min_eigenvalue, r.ids),
    )
    return ordered if top is None else ordered[: max(int(top), 0)]
