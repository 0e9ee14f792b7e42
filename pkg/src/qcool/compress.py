"""Selection, application and verification of optimal complementary swaps.

An optswap exchanges a complementary probamp pair j <-> 2^n - 1 - j and is
beneficial exactly when it moves the larger value into the half where the
target qubit is |0>.  Applying every beneficial swap maximizes the target
bias gain over all eigenvalue exchanges that respect the pairing; the
exhaustive pair checks of :func:`verify_optimality` rule out every
non-complementary alternative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ResourceCapError
from .regstate import DiagDist

#: Pairs whose relative difference is below this are treated as equal
#: (no swap), preventing zero-gain churn in iterative callers.
REL_TIE_TOL = 1e-12

#: verify_optimality is O(4^(n-1)) pair comparisons; cap the default size.
DEFAULT_VERIFY_CAP = 14

_BLOCK = 2048


def _beneficial(a: float, b: float) -> bool:
    """True when the 1T value b exceeds the 0T value a beyond the tie tolerance."""
    return (b - a) > REL_TIE_TOL * max(abs(a), abs(b))


def _halves(p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # head[j] = probamp_j, tail[j] = probamp_{2^n - 1 - j}, j < 2^(n-1)
    half = p.size // 2
    return p[:half], p[::-1][:half]


def _beneficial_mask(head: np.ndarray, tail: np.ndarray) -> np.ndarray:
    return (tail - head) > REL_TIE_TOL * np.maximum(np.abs(head), np.abs(tail))


def find_optswaps(dist: DiagDist) -> frozenset[int]:
    """Indices j of every beneficial complementary exchange, per strict comparison."""
    head, tail = _halves(dist.probamps)
    return frozenset(int(j) for j in np.nonzero(_beneficial_mask(head, tail))[0])


def apply_swaps(dist: DiagDist, swaps: frozenset[int] | set[int]) -> DiagDist:
    """Exchange each listed complementary pair; the probamp multiset is preserved."""
    p = dist.probamps.copy()
    if not swaps:
        return DiagDist(p)
    idx = np.fromiter(sorted(swaps), dtype=np.int64)
    half = p.size // 2
    if idx.size and (idx[0] < 0 or idx[-1] >= half):
        raise ValueError(f"swap indices must lie in [0, {half})")
    comp = p.size - 1 - idx
    p[idx], p[comp] = p[comp].copy(), p[idx].copy()
    return DiagDist(p)


def bias_gain(dist: DiagDist, swaps: frozenset[int] | set[int]) -> float:
    """Target-bias increase from performing *swaps*: 2 * sum of pair differences."""
    if not swaps:
        return 0.0
    p = dist.probamps
    idx = np.fromiter(sorted(swaps), dtype=np.int64)
    half = p.size // 2
    if idx.size and (idx[0] < 0 or idx[-1] >= half):
        raise ValueError(f"swap indices must lie in [0, {half})")
    comp = p.size - 1 - idx
    return float(2.0 * np.sum(p[comp] - p[idx]))


@dataclass(frozen=True)
class Counterexample:
    """A pair (k, l) violating one of the three optimality cases."""

    case: int
    k: int
    l: int
    excess: float


@dataclass(frozen=True)
class OptimalityReport:
    """Outcome of the exhaustive pairwise optimality check.

    Cases 1 and 2 apply when at least one swap was selected; case 3 applies
    when none was.  Inapplicable cases are None.
    """

    swaps_performed: int
    case1_passed: bool | None
    case2_passed: bool | None
    case3_passed: bool | None
    counterexamples: tuple[Counterexample, ...]

    @property
    def all_passed(self) -> bool:
        return not self.counterexamples


def verify_optimality(dist: DiagDist, *, max_n: int = DEFAULT_VERIFY_CAP) -> OptimalityReport:
    """Exhaustively check that the selected swaps maximize the target bias.

    With performed swaps K (gain v_k each) and strictly non-beneficial pairs
    L, the checks are, on the original (pre-swap) probamps:

    * case 1: probamp[comp(l)] - probamp[k] <= v_k  for all k in K, l in L;
    * case 2: probamp[comp(l)] - probamp[k] <= v_k + v_l  for all k != l in K;
    * case 3 (K empty): probamp[k] >= probamp[comp(l)]  for all pairs k, l.

    Cost is O(4^(n-1)) comparisons; registers beyond *max_n* qubits are
    rejected (override the cap explicitly for larger runs).
    """
    n = dist.n
    if n > max_n:
        raise ResourceCapError(
            f"optimality check on {n} qubits exceeds the cap {max_n}")
    p = dist.probamps
    head, tail = _halves(p)
    scale = np.maximum(np.abs(head), np.abs(tail))
    ben = (tail - head) > REL_TIE_TOL * scale
    nonben = (head - tail) > REL_TIE_TOL * scale  # ties belong to neither side

    K = np.nonzero(ben)[0]
    L = np.nonzero(nonben)[0]
    n_s = int(K.size)
    counterexamples: list[Counterexample] = []

    if n_s > 0:
        v = tail[K] - head[K]
        comp_l = tail[L]  # probamp[2^n - 1 - l]
        case1 = True
        for lo in range(0, K.size, _BLOCK):
            kb = slice(lo, min(lo + _BLOCK, K.size))
            excess = (comp_l[None, :] - head[K[kb]][:, None]) - v[kb][:, None]
            bad = excess > 0.0
            if bad.any():
                case1 = False
                for r, c in np.argwhere(bad):
                    counterexamples.append(Counterexample(
                        1, int(K[lo + r]), int(L[c]), float(excess[r, c])))
        comp_k = tail[K]
        case2 = True
        for lo in range(0, K.size, _BLOCK):
            kb = slice(lo, min(lo + _BLOCK, K.size))
            excess = (comp_k[None, :] - head[K[kb]][:, None]) - (v[kb][:, None] + v[None, :])
            bad = excess > 0.0
            rows = np.arange(lo, min(lo + _BLOCK, K.size))
            bad[np.arange(rows.size), rows] = False  # a != b
            if bad.any():
                case2 = False
                for r, c in np.argwhere(bad):
                    counterexamples.append(Counterexample(
                        2, int(K[lo + r]), int(K[c]), float(excess[r, c])))
        return OptimalityReport(n_s, case1, case2, None, tuple(counterexamples))

    # No beneficial swap exists: every 0T probamp must dominate every 1T one.
    case3 = True
    half = head.size
    for lo in range(0, half, _BLOCK):
        kb = slice(lo, min(lo + _BLOCK, half))
        excess = tail[None, :] - head[kb][:, None]
        bad = excess > 0.0
        if bad.any():
            case3 = False
            for r, c in np.argwhere(bad):
                counterexamples.append(Counterexample(
                    3, int(lo + r), int(c), float(excess[r, c])))
    return OptimalityReport(0, None, None, case3, tuple(counterexamples))
