"""Cooling limits: the exponent recursion, closed forms, and the numerical loop.

The bias a qubit can attain is set by the fixed point of its last productive
complementary exchange.  For equal default biases this takes the closed form
[(1+eps)^f - (1-eps)^f] / [(1+eps)^f + (1-eps)^f] = tanh(f * atanh(eps)),
where the integer exponent f(r, k, n) counts how many default-bias units
qubit k effectively draws on in round r.  For unequal defaults the limit is
defined operationally by :func:`numerical_limits`, which iterates subspace
compression with ancilla biases pinned at their round-entry values.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import regstate
from .compress import _beneficial_mask
from .errors import ResourceCapError
from .regstate import DiagDist, RegisterBiases, _marginal_raw, _probamps_raw

#: Above this value of f * eps the power form is evaluated as tanh(f * atanh(eps)).
TANH_CROSSOVER = 30.0


def max_rounds(n: int) -> int:
    """Highest meaningful limiting round for an n-qubit register."""
    return n - 2


@functools.cache
def f(r: int, k: int, n: int) -> int:
    """Exponent of the round-r cooling limit for qubit k in an n-qubit register.

    Memoized double recursion; r is capped at n - 2, beyond which no further
    round improves any qubit.
    """
    if n < 3:
        raise ValueError(f"register must have n >= 3 qubits, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"qubit index {k} out of range 1..{n}")
    if r < 1:
        raise ValueError(f"round must be >= 1, got {r}")
    if r > max_rounds(n):
        raise ValueError(f"round {r} exceeds the maximum n - 2 = {max_rounds(n)}")
    if r == 1:
        return n - k if k < n - 1 else 1
    if k >= n - r:
        return f(r - 1, k, n)
    total = 2 + sum(f(r - 1, i, n) for i in range(k + 1, n - r + 1))
    if r > 2:
        total += sum(f(j, n - j - 1, n) for j in range(1, r - 1))
    return total


def _tanh_ratio(eps: float, exponent: float) -> float:
    # [(1+e)^m - (1-e)^m] / [(1+e)^m + (1-e)^m], stable for large exponents
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"bias must lie in [0, 1], got {eps!r}")
    if eps == 0.0:
        return 0.0
    if eps == 1.0:
        return 1.0
    if exponent * eps > TANH_CROSSOVER:
        return math.tanh(exponent * math.atanh(eps))
    up = (1.0 + eps) ** exponent
    dn = (1.0 - eps) ** exponent
    return (up - dn) / (up + dn)


def analytic_limit(r: int, k: int, n: int, eps: float) -> float:
    """Round-r limiting bias of qubit k for equal default biases *eps*."""
    return _tanh_ratio(eps, f(r, k, n))


def single_round_limit(eps: float, m: int) -> float:
    """Fixed point of the limiting swap with m ancilla/reset qubits at bias eps."""
    if m < 1:
        raise ValueError(f"ancilla count must be >= 1, got {m}")
    return _tanh_ratio(eps, m)


def shannon_bound(n: int, eps: float) -> float:
    """Closed-system entropy bound on the number of fully purifiable qubits."""
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"bias must lie in [0, 1], got {eps!r}")
    if eps == 0.0:
        return 0.0
    if eps == 1.0:
        return float(n)
    p = (1.0 + eps) / 2.0
    q = (1.0 - eps) / 2.0
    entropy = -(p * math.log2(p) + q * math.log2(q))
    return n * (1.0 - entropy)


def sqrt_bound(n: int, eps: float) -> float:
    """First-order purity-conservation bound on the target bias, sqrt(n) * eps."""
    return math.sqrt(n) * eps


def sort_bound(dist: DiagDist) -> float:
    """Eigenvalue-exchange upper bound: sort descending, top half minus bottom half."""
    p = np.sort(dist.probamps)[::-1]
    half = p.size // 2
    return float(p[:half].sum() - p[half:].sum())


@dataclass(frozen=True, eq=False)
class LimitMatrix:
    """rounds x n matrix of limiting biases; rows are rounds, columns qubits."""

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 2:
            raise ValueError("limit matrix must be two-dimensional")
        if not np.all(np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
            raise ValueError("limit entries must lie in [0, 1]")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def rounds(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.shape[1]

    def __getitem__(self, key):
        return self.values[key]


def _compress_pass(biases: np.ndarray) -> float:
    """One full optswap application on a product state; returns the head's new bias."""
    p = _probamps_raw(biases)
    half = p.size // 2
    head, tail = p[:half], p[::-1][:half]
    sel = np.nonzero(_beneficial_mask(head, tail))[0]
    if sel.size:
        comp = p.size - 1 - sel
        p[sel], p[comp] = p[comp].copy(), p[sel].copy()
    return _marginal_raw(p, 1, biases.size)


def numerical_limits(biases: RegisterBiases | Sequence[float], rounds: int,
                     precision: float = 1e-9, *,
                     size_cap: int = regstate.DEFAULT_SIZE_CAP) -> LimitMatrix:
    """Per-round cooling limits of every qubit, for arbitrary default biases.

    For each round r and each target v = 1..n-r-1, repeatedly compresses the
    sub-register v..n built from the target's current bias and the ancillas'
    round-entry biases (ancilla losses are deliberately ignored), until the
    target's relative bias increase per pass is within *precision*.  Qubits
    beyond n-r-1 carry their prior-round values forward; each finished row
    seeds the next round.
    """
    if not isinstance(biases, RegisterBiases):
        biases = RegisterBiases.from_values(biases)
    n = biases.n
    if n > size_cap:
        raise ResourceCapError(
            f"register of {n} qubits exceeds the size cap {size_cap}")
    if not 1 <= rounds <= max_rounds(n):
        raise ValueError(
            f"rounds must lie in 1..{max_rounds(n)} for n = {n}, got {rounds}")
    if not precision > 0.0:
        raise ValueError(f"precision must be positive, got {precision!r}")

    original = biases.values
    matrix = np.zeros((rounds, n))
    for r in range(1, rounds + 1):
        seed = original.copy() if r == 1 else matrix[r - 2].copy()
        row = seed.copy()
        for v in range(1, n - r):  # targets 1..n-r-1
            target = seed[v - 1]
            while True:
                sub = np.concatenate(([target], seed[v:]))
                increased = _compress_pass(sub)
                if target == 0.0:
                    converged = increased == 0.0
                else:
                    converged = abs(increased / target - 1.0) <= precision
                target = increased
                if converged:
                    break
            row[v - 1] = target
        matrix[r - 1] = row
    return LimitMatrix(matrix)
