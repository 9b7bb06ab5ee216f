"""Suffix-completion counts and the exact size of the k-universal word set.

The central object is a three-dimensional table over states (q, m, c):

    q  distinct symbols already seen in the arch currently being built
       (q = 0: a fresh arch with nothing seen, q = sigma: the arch just closed),
    m  free symbols left, i.e. slack beyond the forced first occurrences,
    c  arches still owed, counting the one in progress.

entry(q, m, c) is the number of words u of length m + (sigma - q) + sigma*(c - 1)
(or plain length m when c = 0) that close at least c more arches when appended
after such a partial arch. Which q symbols were seen does not matter, only how
many; counts depend on the multiset sizes alone.

Transitions, for c >= 1 and m >= 1:

    entry(q, m, c) = q * entry(q, m - 1, c) + (sigma - q) * entry(q + 1, m, c)

a repeated symbol burns one free slot, a new one grows the arch. The q = sigma
column needs care: when the last owed arch closes, every remaining symbol is
unconstrained, so entry(sigma, m, 1) = sigma**m; when earlier arches close the
next symbol opens a fresh arch, entry(sigma, m, c) = entry(0, m, c - 1). With
zero slack every position must introduce a new symbol, hence
entry(q, 0, c) = (sigma - q)! * (sigma!)**(c - 1); with no arches owed,
entry(q, m, 0) = sigma**m. The set of k-universal words of length n then has
size entry(0, n - k*sigma, k), or 0 when n < k*sigma.
"""

from __future__ import annotations

from .errors import IndexOutOfRange


class SuffixCountTable:
    """Bottom-up table of suffix-completion counts for fixed (n, k, sigma).

    Dimensions are (sigma + 1) x (n + 1) x (k + 1), indexed [q][m][c]; all
    values are exact arbitrary-precision integers. ``lookups`` counts cell
    reads made through lookup() and ``build_ops`` the cells evaluated during
    construction; both are advisory instrumentation, not value state.
    """

    __slots__ = ("n", "k", "sigma", "_cells", "build_ops", "lookups")

    def __init__(self, n: int, k: int, sigma: int, cells: list, build_ops: int):
        self.n = n
        self.k = k
        self.sigma = sigma
        self._cells = cells
        self.build_ops = build_ops
        self.lookups = 0

    def lookup(self, q: int, m: int, c: int) -> int:
        """Instrumented cell read; negative slack means no completion exists."""
        self.lookups += 1
        if m < 0:
            return 0
        return self._cells[q][m][c]

    def __repr__(self) -> str:
        return f"SuffixCountTable(n={self.n}, k={self.k}, sigma={self.sigma})"


def build_table(n: int, k: int, sigma: int) -> SuffixCountTable:
    """Fill the whole (sigma + 1) x (n + 1) x (k + 1) table bottom-up."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if sigma < 1:
        raise ValueError(f"sigma must be at least 1, got {sigma}")

    fact = [1] * (sigma + 1)
    for i in range(1, sigma + 1):
        fact[i] = fact[i - 1] * i
    arch_pows = [1] * (k + 1)  # (sigma!)**c
    for c in range(1, k + 1):
        arch_pows[c] = arch_pows[c - 1] * fact[sigma]
    free_pows = [1] * (n + 1)  # sigma**m
    for m in range(1, n + 1):
        free_pows[m] = free_pows[m - 1] * sigma

    cells = [[[0] * (k + 1) for _ in range(n + 1)] for _ in range(sigma + 1)]
    ops = 0
    for q in range(sigma + 1):
        rows = cells[q]
        for m in range(n + 1):
            rows[m][0] = free_pows[m]
        ops += n + 1
    for c in range(1, k + 1):
        for q in range(sigma + 1):
            cells[q][0][c] = fact[sigma - q] * arch_pows[c - 1]
        ops += sigma + 1
        closed = cells[sigma]
        fresh = cells[0]
        for m in range(1, n + 1):
            closed[m][c] = free_pows[m] if c == 1 else fresh[m][c - 1]
            ops += 1
            above = closed[m]
            for q in range(sigma - 1, -1, -1):
                rows = cells[q]
                rows[m][c] = q * rows[m - 1][c] + (sigma - q) * above[c]
                above = rows[m]
                ops += 1
    return SuffixCountTable(n, k, sigma, cells, ops)


def count_suffixes(table: SuffixCountTable, q: int, m: int, c: int) -> int:
    """Validated read of entry (q, m, c)."""
    if not 0 <= q <= table.sigma:
        raise IndexOutOfRange(f"q={q} outside [0, {table.sigma}]")
    if not 0 <= m <= table.n:
        raise IndexOutOfRange(f"m={m} outside [0, {table.n}]")
    if not 0 <= c <= table.k:
        raise IndexOutOfRange(f"c={c} outside [0, {table.k}]")
    return table.lookup(q, m, c)


def count_universal(n: int, k: int, sigma: int, table: SuffixCountTable | None = None) -> int:
    """Exact number of k-universal words of length n over {1..sigma}."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if sigma < 1:
        raise ValueError(f"sigma must be at least 1, got {sigma}")
    if n < k * sigma:
        return 0
    if table is None:
        if k == 0:
            return sigma**n
        table = build_table(n, k, sigma)
    elif (table.n, table.k, table.sigma) != (n, k, sigma):
        raise ValueError(
            f"table built for (n={table.n}, k={table.k}, sigma={table.sigma}), "
            f"queried with (n={n}, k={k}, sigma={sigma})"
        )
    return table.lookup(0, n - k * sigma, k)
