"""Open-system register cooling with heat-bath resets and exact swap counting.

Register compression drives every qubit to its per-round limit, round by
round.  Within a round, each subspace head x = 1..n-r-1 is cooled by
subspace compression: sub-registers v..n are repeatedly rebuilt as product
states from the recorded biases, beneficial complementary exchanges are
applied one at a time, all marginals are recomputed after every exchange,
and any marginal that falls below its default bias is floored there (the
heat-bath reset).  Exchanges stop early once the running head bias meets the
limit database for the applicable round, which keeps the register in
descending bias order.  When a pass leaves the head short of its target, or
an ancilla below its previous-round level, the subroutine re-enters itself;
the re-entry worklist here is an explicit stack with the exact semantics of
the self-calls, since the chain can grow deeper than the interpreter allows.

Every individual pair exchange is counted; the total is the run's
complexity.  Pass counts are reported alongside for the coarser reading of
a "swap" as one full compression application.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .compress import _beneficial_mask
from .errors import DivergenceError
from .limits import LimitMatrix, max_rounds, numerical_limits
from .regstate import RegisterBiases, _probamps_raw

MODE_FULL = "full"
MODE_LIM = "lim"

#: A hook called once per pair exchange as (round, subspace_head, target, pair_index).
SwapHook = Callable[[int, int, int, int], None]


@dataclass(frozen=True)
class HbacConfig:
    """Inputs of a register-compression run."""

    biases: RegisterBiases
    rounds: int
    precision: float = 1e-9
    mode: str = MODE_FULL
    iteration_cap: int = 10 ** 6

    def __post_init__(self) -> None:
        n = self.biases.n
        if not 1 <= self.rounds <= max_rounds(n):
            raise ValueError(
                f"rounds must lie in 1..{max_rounds(n)} for n = {n}, got {self.rounds}")
        if not self.precision > 0.0:
            raise ValueError(f"precision must be positive, got {self.precision!r}")
        if self.mode not in (MODE_FULL, MODE_LIM):
            raise ValueError(f"mode must be '{MODE_FULL}' or '{MODE_LIM}', got {self.mode!r}")
        if self.iteration_cap < 1:
            raise ValueError("iteration cap must be positive")

    @classmethod
    def equal(cls, n: int, eps: float, rounds: int, **kw) -> "HbacConfig":
        return cls(RegisterBiases.equal(n, eps), rounds, **kw)


@dataclass(frozen=True, eq=False)
class CoolingReport:
    """Outcome of a register-compression run."""

    complexity: int
    round_limits: LimitMatrix
    per_round_swaps: tuple[int, ...]
    targets: LimitMatrix
    while_passes: int

    @property
    def final_biases(self) -> np.ndarray:
        return self.round_limits.values[-1].copy()


@dataclass
class CompressionState:
    """Register-wide context threaded through subspace compression."""

    defaults: np.ndarray
    round_index: int
    mode: str = MODE_FULL
    precision: float = 1e-9
    iteration_cap: int = 10 ** 6
    on_swap: SwapHook | None = None
    while_passes: int = 0

    def __post_init__(self) -> None:
        self.defaults = np.asarray(self.defaults, dtype=float)


def _pair_signs(k: int, q: int) -> np.ndarray:
    # +1 where bit i of k (MSB-first over q bits) is 0, else -1
    shifts = np.arange(q - 1, -1, -1)
    return 1.0 - 2.0 * ((k >> shifts) & 1)


def _sub_compress(state: CompressionState, targets: np.ndarray, x: int, z: int,
                  v: int, beta: np.ndarray, passes_used: int) -> tuple[np.ndarray, int, int]:
    """Converge the head of sub-register v..n; returns (biases, swaps, passes).

    One while-pass: rebuild the product state from the recorded biases, then
    walk the complementary pairs, exchanging each beneficial one.  The raw
    marginals are tracked exactly through each exchange (a pair exchange of
    gap d shifts qubit i's marginal by 2 d sign_i) and floored at the
    defaults after every exchange.  The pass ratio is the head bias after
    the pass over the head bias before it.
    """
    r = state.round_index
    n = state.defaults.size
    q = n - v + 1
    defaults_v = state.defaults[v - 1:]
    prec = state.precision
    # Which cap applies to this sub-register's head (checked before each
    # exchange): ancillas and re-entry heads stop at the prior round's level
    # (in round 1 that is the bath default), the primary head at this
    # round's level.  Without the ancilla cap the hierarchy breaks: deep
    # marginals can transiently rise above their defaults during a pass and
    # an uncapped ancilla then overshoots its own round limit.
    prev_level = targets[r - 2, v - 1] if r > 1 else defaults_v[0]
    cap = None
    if z == 0 and v > x:
        cap = prev_level
    elif z == 1:
        cap = prev_level
    elif z == 0 and v == x:
        cap = targets[r - 1, v - 1]
    gamma = beta.copy()
    swaps_done = 0
    passes = 0
    while True:
        passes += 1
        state.while_passes += 1
        if passes_used + passes > state.iteration_cap:
            raise DivergenceError(
                f"subspace compression exceeded {state.iteration_cap} passes "
                f"(round {r}, head {x}, target {v})",
                round_index=r, subspace=x, passes=passes_used + passes)
        beta = gamma.copy()
        p = _probamps_raw(beta)
        raw = beta.copy()
        gamma = np.maximum(raw, defaults_v)
        head_before = gamma[0]
        size = p.size
        # Complementary pairs are disjoint, so the pass-start beneficial set
        # equals on-the-fly re-testing; iterate only over it, in index order.
        mask = _beneficial_mask(p[:size // 2], p[::-1][:size // 2])
        if state.mode == MODE_LIM:
            beneficial = (size // 2 - 1,) if mask[size // 2 - 1] else ()
        else:
            beneficial = np.nonzero(mask)[0]
        for k in beneficial:
            if cap is not None and gamma[0] >= cap:
                break
            kk = size - 1 - k
            d = p[kk] - p[k]
            p[k], p[kk] = p[kk], p[k]
            raw = raw + (2.0 * d) * _pair_signs(int(k), q)
            gamma = np.maximum(raw, defaults_v)
            swaps_done += 1
            if state.on_swap is not None:
                state.on_swap(r, x, v, int(k))
        if head_before == 0.0:
            converged = gamma[0] == 0.0
        else:
            converged = abs(gamma[0] / head_before - 1.0) <= prec
        if converged:
            return gamma, swaps_done, passes


def _si_pass(state: CompressionState, targets: np.ndarray, rl: np.ndarray,
             x: int, z: int, passes_used: int) -> tuple[np.ndarray, int, int, int]:
    """One subspace-compression sweep over targets v = x..n-1.

    Returns (alpha, unchanged_flag, swaps, passes).  The current round's
    limit row of *rl* is updated in place as each sub-register settles.
    """
    r = state.round_index
    n = state.defaults.size
    rl_row = rl[r - 1]
    snapshot = rl_row.copy()
    alpha = rl_row.copy()
    ttswaps = 0
    passes = 0
    for v in range(x, n):
        if alpha[v - 1] < targets[r - 1, v - 1]:
            gamma, nswaps, npasses = _sub_compress(
                state, targets, x, z, v, alpha[v - 1:].copy(), passes_used + passes)
            alpha[v - 1:] = gamma
            ttswaps += nswaps
            passes += npasses
        rl_row[v - 1:] = alpha[v - 1:]
    unchanged = 1 if np.array_equal(snapshot, rl_row) else 0
    return alpha, unchanged, ttswaps, passes


def subspace_compression(state: CompressionState, x: int, z: int,
                         targets: LimitMatrix | np.ndarray, rl: np.ndarray,
                         precision: float | None = None) -> tuple[int, np.ndarray]:
    """Initialize the subspace spanning qubits x..n for the state's round.

    Re-enters itself while the head stays short of its round target or any
    ancilla sits below its previous-round target and the limit row is still
    moving; *rl* is updated in place and returned with the exchange count.
    """
    n = state.defaults.size
    if not 1 <= x <= n - 1:
        raise ValueError(f"subspace head {x} out of range 1..{n - 1}")
    if z not in (0, 1):
        raise ValueError(f"re-entry flag must be 0 or 1, got {z!r}")
    if precision is not None:
        state.precision = float(precision)
    tgt = targets.values if isinstance(targets, LimitMatrix) else np.asarray(targets, float)
    r = state.round_index

    tttswaps = 0
    passes_used = 0
    stack: list[tuple[int, int]] = [(x, z)]
    while stack:
        head, flag = stack.pop()
        alpha, unchanged, swaps, passes = _si_pass(
            state, tgt, rl, head, flag, passes_used)
        tttswaps += swaps
        passes_used += passes
        if unchanged:
            continue
        # Re-entry order matches the tail of the recursive form: first the
        # head itself if short of this round's target, then each deeper qubit
        # short of the previous round's target.
        pending: list[tuple[int, int]] = []
        if alpha[head - 1] < tgt[r - 1, head - 1]:
            pending.append((head, 0))
        for i in range(head + 1, n):
            if r > 1 and alpha[i - 1] < tgt[r - 2, i - 1]:
                pending.append((i, 1))
        stack.extend(reversed(pending))
    return tttswaps, rl


def register_compression(config: HbacConfig, *, targets: LimitMatrix | None = None,
                         on_swap: SwapHook | None = None) -> CoolingReport:
    """Cool every qubit to its per-round limit, counting all pair exchanges.

    Targets default to :func:`numerical_limits` on the configured biases.
    Round 1 of the limit database is seeded with the default biases (the
    bath floor: a register fresh from the bath sits at its defaults), and
    each finished row seeds the next round.
    """
    n = config.biases.n
    defaults = config.biases.values
    if targets is None:
        targets = numerical_limits(config.biases, config.rounds, config.precision)
    if targets.values.shape != (config.rounds, n):
        raise ValueError(
            f"targets shape {targets.values.shape} does not match "
            f"({config.rounds}, {n})")

    rl = np.zeros((config.rounds, n))
    rl[0] = defaults
    state = CompressionState(
        defaults=defaults, round_index=1, mode=config.mode,
        precision=config.precision, iteration_cap=config.iteration_cap,
        on_swap=on_swap)
    complexity = 0
    per_round: list[int] = []
    for r in range(1, config.rounds + 1):
        state.round_index = r
        totswaps = 0
        for x in range(1, n - r):
            tttswaps, rl = subspace_compression(state, x, 0, targets, rl)
            totswaps += tttswaps
        if r < config.rounds:
            rl[r] = rl[r - 1]
        complexity += totswaps
        per_round.append(totswaps)
    return CoolingReport(
        complexity=complexity,
        round_limits=LimitMatrix(rl),
        per_round_swaps=tuple(per_round),
        targets=targets,
        while_passes=state.while_passes)


def complexity_sweep(n_values: Sequence[int], eps: float, rounds: int | None = None,
                     precision: float = 1e-9, mode: str = MODE_FULL) -> list[tuple[int, int]]:
    """Run register compression over register sizes; rows of (n, complexity).

    Uses rounds = n - 2 per size unless overridden.  Complexity must grow
    with the register size whenever any cooling happens at all.
    """
    rows: list[tuple[int, int]] = []
    for n in n_values:
        r = max_rounds(n) if rounds is None else rounds
        config = HbacConfig(RegisterBiases.equal(n, eps), r,
                            precision=precision, mode=mode)
        report = register_compression(config)
        rows.append((n, report.complexity))
    counts = [c for _, c in rows]
    if any(c > 0 for c in counts) and any(b <= a for a, b in zip(counts, counts[1:])):
        raise RuntimeError(f"complexity failed to grow across sizes: {rows}")
    return rows
