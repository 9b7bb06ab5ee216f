"""Greedy arch factorization and the per-position preprocessing used by ranking.

An arch is a shortest factor that contains every alphabet symbol: scanning left
to right, it closes at the position where the last missing symbol first shows
up. Factoring a word into consecutive arches greedily leaves a residual suffix
with at most sigma - 1 distinct symbols, and the number of arches is exactly
the largest k for which every length-k word is a subsequence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidK
from .words import Word


@dataclass(frozen=True)
class ArchFactorization:
    """Greedy factorization of one word; positions are 1-based."""

    arch_starts: tuple[int, ...]
    arch_count: int
    suffix_start: int  # n + 1 when the residual suffix is empty
    source_length: int

    def arch_bounds(self) -> list[tuple[int, int]]:
        """(start, end) of each arch, 1-based inclusive."""
        ends = list(self.arch_starts[1:]) + [self.suffix_start]
        return [(s, e - 1) for s, e in zip(self.arch_starts, ends)]


@dataclass(frozen=True)
class RankContext:
    """Per-position data for rank computations over one word.

    All three arrays are indexed by position (entry i - 1 describes position i).
    delta restarts at every arch start and at the residual start;
    arch_prefix_sets holds the matching symbol bitmasks (bit s = symbol s).
    free_suffix[i - 1] counts the free positions in w[i, n]: positions that no
    first-k-arch universal subsequence passes through.
    """

    factorization: ArchFactorization
    delta: tuple[int, ...]
    free_suffix: tuple[int, ...]
    arch_prefix_sets: tuple[int, ...]
    k: int


def arch_factorize(w: Word) -> ArchFactorization:
    """Factor w into greedy arches plus a residual suffix."""
    sigma = w.alphabet.sigma
    n = len(w.symbols)
    starts: list[int] = []
    mask = 0
    distinct = 0
    start = n + 1
    for i, s in enumerate(w.symbols, 1):
        if distinct == 0:
            start = i
        bit = 1 << s
        if not mask & bit:
            mask |= bit
            distinct += 1
        if distinct == sigma:
            starts.append(start)
            mask = 0
            distinct = 0
            start = n + 1
    return ArchFactorization(
        arch_starts=tuple(starts),
        arch_count=len(starts),
        suffix_start=start if distinct else n + 1,
        source_length=n,
    )


def universality_index(w: Word) -> int:
    """Largest k such that every length-k word over the alphabet is a subsequence."""
    return arch_factorize(w).arch_count


def is_k_universal(w: Word, k: int) -> bool:
    if k < 0:
        raise InvalidK(f"k must be nonnegative, got {k}")
    return k == 0 or universality_index(w) >= k


def build_rank_context(w: Word, k: int) -> RankContext:
    """Precompute the per-position arrays for ranking w against target k."""
    if k < 1:
        raise InvalidK(f"rank context requires k >= 1, got {k}")
    fact = arch_factorize(w)
    n = fact.source_length
    syms = w.symbols
    region_starts = list(fact.arch_starts)
    if fact.suffix_start <= n and fact.suffix_start not in region_starts:
        region_starts.append(fact.suffix_start)

    delta = [0] * n
    masks = [0] * n
    free_flag = [False] * n
    ri = 0
    region_no = 0  # regions 1..arch_count are arches, the next one is the residual
    cur_mask = 0
    cur_d = 0
    for i in range(1, n + 1):
        if ri < len(region_starts) and i == region_starts[ri]:
            cur_mask = 0
            cur_d = 0
            ri += 1
            region_no = ri
        bit = 1 << syms[i - 1]
        if cur_mask & bit:
            fresh = False
        else:
            cur_mask |= bit
            cur_d += 1
            fresh = True
        delta[i - 1] = cur_d
        masks[i - 1] = cur_mask
        # positions past the k-th arch, and repeats inside an arch, are free
        free_flag[i - 1] = region_no > fact.arch_count or region_no > k or not fresh

    free = [0] * n
    acc = 0
    for i in range(n, 0, -1):
        if free_flag[i - 1]:
            acc += 1
        free[i - 1] = acc
    return RankContext(fact, tuple(delta), tuple(free), tuple(masks), k)
