"""Irreducible characters of symmetric groups, evaluated exactly.

Single values come from the recursive border-strip expansion: removing a
strip of size t from shape lambda for the largest remaining part t of the
cycle type mu, with the sign determined by the strip height, and summing
over all legal removals. Strips are found through the first-column hook
length encoding (beta numbers): shape (l_1 >= ... >= l_m) maps to the
strictly decreasing set beta_i = l_i + m - 1 - i, a strip of size t is
removable at row i exactly when c = beta_i - t is nonnegative and not
already in the set, and the strip height is the number of beta values
lying strictly between c and beta_i.

Everything is exact integer arithmetic; there is no floating point here.
"""

from dataclasses import dataclass
from concurrent.futures import ThreadPoolExecutor
from math import factorial

from . import partitions as pt
from .partitions import Partition, CapExceededError

_Memo = dict[tuple[Partition, tuple[int, ...]], int]


def _strip_removals(shape: Partition, t: int) -> list[tuple[Partition, int]]:
    """All ways to remove a border strip of size t from shape.

    Returns (smaller shape, sign) pairs ordered by the row where the strip
    starts, topmost first.
    """
    m = len(shape)
    beta = [shape[i] + (m - 1 - i) for i in range(m)]
    bset = set(beta)
    out = []
    for i in range(m):
        c = beta[i] - t
        if c < 0 or c in bset:
            continue
        height = 0
        for j in range(i + 1, m):
            if beta[j] > c:
                height += 1
            else:
                break
        nb = sorted(beta[:i] + beta[i + 1:] + [c], reverse=True)
        ns = tuple(nb[k] - (m - 1 - k) for k in range(m))
        while ns and ns[-1] == 0:
            ns = ns[:-1]
        out.append((ns, -1 if height % 2 else 1))
    return out


def _mn(shape: Partition, mu: Partition, memo: _Memo) -> int:
    """Character value chi^shape(mu) by iterative strip removal.

    memo is keyed by (shape, remaining mu suffix). Entries are written
    once with their final value, so a memo may be shared across threads.
    Uses an explicit work stack: recursion depth grows with len(mu),
    which can exceed the interpreter limit for cycle types with many
    fixed points at large n.
    """
    root = (shape, mu)
    stack = [root]
    # pending[key] holds the signed child keys once they are scheduled
    pending: dict[tuple[Partition, Partition], list[tuple[tuple[Partition, Partition], int]]] = {}
    while stack:
        key = stack[-1]
        if key in memo:
            stack.pop()
            continue
        sh, rest = key
        if not rest:
            memo[key] = 1
            stack.pop()
            continue
        children = pending.get(key)
        if children is None:
            t, tail = rest[0], rest[1:]
            children = [((ns, tail), sign) for ns, sign in _strip_removals(sh, t)]
            pending[key] = children
            missing = [ck for ck, _ in children if ck not in memo]
            if missing:
                stack.extend(missing)
                continue
        memo[key] = sum(sign * memo[ck] for ck, sign in children)
        del pending[key]
        stack.pop()
    return memo[root]


def mn_value(shape, mu) -> int:
    """chi^shape(mu): the irreducible character of S_n indexed by shape,
    at the class of cycle type mu. Both arguments must partition the same
    positive integer.
    """
    sh = pt.as_partition(shape)
    m = pt.as_partition(mu)
    n = sum(sh)
    if n != sum(m):
        raise ValueError(f"shape sums to {n} but cycle type sums to {sum(m)}")
    if n == 0:
        raise ValueError("partitions of 0 index no character value")
    return _mn(sh, m, {})


def dimension(shape) -> int:
    """Degree of the irreducible character: n! over the product of hook
    lengths of the shape.
    """
    sh = pt.as_partition(shape)
    n = sum(sh)
    if n == 0:
        raise ValueError("empty shape has no dimension")
    conj = pt.conjugate(sh)
    hooks = 1
    for i, row in enumerate(sh):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    q, r = divmod(factorial(n), hooks)
    if r:
        raise ArithmeticError(f"hook product does not divide n! for {sh}")
    return q


@dataclass(frozen=True)
class CharacterTable:
    """Full character table of S_n on canonical axes.

    Rows are characters (indexed by shape), columns are classes (indexed
    by cycle type), both in canonical partition order. values[i][j] is
    chi^{characters[i]}(classes[j]), an exact int.
    """
    n: int
    characters: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def value(self, shape, mu) -> int:
        return self.values[pt.rank(shape)][pt.rank(mu)]

    def to_csv(self) -> str:
        """CSV text: header row of class labels, then one row per character
        led by its shape label.
        """
        lines = ["shape," + ",".join(pt.format_partition(c) for c in self.classes)]
        for sh, row in zip(self.characters, self.values):
            lines.append(
                pt.format_partition(sh) + "," + ",".join(str(v) for v in row)
            )
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        """JSON-ready dict with axis labels and values as decimal strings
        (entries can exceed what consumers of double-precision JSON numbers
        survive).
        """
        return {
            "n": self.n,
            "characters": [pt.format_partition(s) for s in self.characters],
            "classes": [pt.format_partition(c) for c in self.classes],
            "values": [[str(v) for v in row] for row in self.values],
        }


def character_table(n: int, cap: int | None = None, threads: int = 1) -> CharacterTable:
    """Build the full table for S_n; all p_n^2 values, shared memo.

    threads > 1 splits work by class column. Results are identical for
    any thread count: each entry is a pure function of its key and the
    memo is write-once.
    """
    if n < 1:
        raise ValueError("n must be positive")
    labels = pt.enumerate_partitions(n, cap)
    memo: _Memo = {}

    def column(mu: Partition) -> list[int]:
        return [_mn(sh, mu, memo) for sh in labels]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            cols = list(ex.map(column, labels))
    else:
        cols = [column(mu) for mu in labels]
    values = tuple(
        tuple(cols[j][i] for j in range(len(labels)))
        for i in range(len(labels))
    )
    return CharacterTable(
        n=n, characters=tuple(labels), classes=tuple(labels), values=values
    )


_table_cache: dict[int, CharacterTable] = {}
_TABLE_CACHE_MAX_PN = 2000

def cached_table(n: int, cap: int | None = None) -> CharacterTable:
    """character_table with an in-process cache for small n (p_n <= 2000)."""
    got = _table_cache.get(n)
    if got is not None:
        return got
    tbl = character_table(n, cap)
    if pt.partition_count(n) <= _TABLE_CACHE_MAX_PN:
        _table_cache[n] = tbl
    return tbl
