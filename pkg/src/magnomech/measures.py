"""Entanglement and nonreciprocity quantifiers.

Bipartite entanglement is measured by the logarithmic negativity
E = max(0, -ln 2 nu_minus) with nu_minus the smallest symplectic
eigenvalue of the partially transposed covariance matrix.  Tripartite
entanglement uses the minimal residual contangle, the Gaussian analogue
of the Coffman-Kundu-Wootters monogamy deficit, built from squared
one-vs-two-mode and pairwise negativities.  The bidirectional contrast
ratio X compares any such measure across the two Barnett drive
directions.
"""

import math
import warnings
from dataclasses import dataclass

from .errors import DomainError
from .gaussian import (n_modes, partial_transpose, physicality_check, reduce,
                       symplectic_eigenvalues)

#: residual contangles above this (negative) floor are treated as round-off
CONTANGLE_CLAMP = 1e-9


@dataclass(frozen=True)
class BipartiteResult:
    """Logarithmic negativity of one bipartition."""

    pair: tuple
    E_n: float
    nu_minus: float


@dataclass(frozen=True)
class TripartiteResult:
    """Residual contangle per pivot and its minimum over pivots.

    ``pivots`` holds the clamped values keyed by pivot label; ``raw``
    keeps the unclamped differences for monogamy audits.
    """

    triple: tuple
    pivots: dict
    raw: dict
    R_min: float


def _neg_from_nu(nu_minus):
    return max(0.0, -math.log(2.0 * nu_minus))


def log_negativity(C4, flip_mode=1, pair=("1", "2")):
    """Logarithmic negativity of a two-mode covariance matrix.

    The partial transposition momentum flip defaults to the first mode;
    either choice yields the same minimum symplectic eigenvalue.
    """
    if n_modes(C4) != 2:
        raise DomainError("log_negativity expects a two-mode (4x4) matrix")
    if not physicality_check(C4):
        raise DomainError("input covariance matrix is unphysical")
    nu = float(symplectic_eigenvalues(partial_transpose(C4, flip_mode)).min())
    return BipartiteResult(tuple(pair), _neg_from_nu(nu), nu)


def one_vs_two_negativity(C6, pivot):
    """Negativity of the pivot mode against the remaining two, E_{a|bc}."""
    if n_modes(C6) != 3:
        raise DomainError("one_vs_two_negativity expects a three-mode (6x6) matrix")
    if not physicality_check(C6):
        raise DomainError("input covariance matrix is unphysical")
    nu = float(symplectic_eigenvalues(partial_transpose(C6, pivot)).min())
    return _neg_from_nu(nu)


def _raw_contangle(C6, pivot):
    """Unclamped E^2_{a|bc} - E^2_{a|b} - E^2_{a|g} for one pivot mode."""
    r = one_vs_two_negativity(C6, pivot) ** 2
    for other in (m for m in (1, 2, 3) if m != pivot):
        r -= log_negativity(reduce(C6, [pivot, other])).E_n ** 2
    return r


def _clamp_contangle(r, label):
    if -CONTANGLE_CLAMP < r < 0.0:
        return 0.0
    if r <= -CONTANGLE_CLAMP:
        warnings.warn(
            f"monogamy violated at pivot {label}: residual contangle {r:.3e}",
            stacklevel=3)
    return r


def residual_contangle(C6, pivot):
    """Residual contangle E^2_{a|bc} - E^2_{a|b} - E^2_{a|g} for one pivot.

    Values in (-1e-9, 0) are round-off and clamp to zero; anything more
    negative is returned as-is with a monogamy-violation warning, since
    it signals an upstream numerical problem.
    """
    return _clamp_contangle(_raw_contangle(C6, pivot), pivot)


def min_residual_contangle(C6, triple=("a", "b", "c")):
    """Minimal residual contangle over the three pivot choices."""
    triple = tuple(triple)
    if len(triple) != 3:
        raise DomainError("triple must name exactly three modes")
    raw = {}
    pivots = {}
    for p, label in zip((1, 2, 3), triple):
        raw[label] = _raw_contangle(C6, p)
        pivots[label] = _clamp_contangle(raw[label], label)
    return TripartiteResult(triple, pivots, raw, min(pivots.values()))


def contrast_ratio(e_pos, e_neg):
    """Bidirectional contrast X = |E+ - E-| / (E+ + E-), with 0/0 := 0.

    The same formula serves bipartite negativities and tripartite
    contangles.  X = 1 means the resource exists for one drive direction
    only ("ideal nonreciprocity"); X = 0 means no nonreciprocity.
    """
    if e_pos < 0 or e_neg < 0:
        raise DomainError("contrast_ratio requires non-negative inputs")
    total = e_pos + e_neg
    if total == 0.0:
        return 0.0
    return abs(e_pos - e_neg) / total
