"""Independent reference implementations used only by the tests.

Everything here is deliberately brute force and shares no code with the
package: characters come from permutation modules and exact inner
products, not strip removal; class data comes from enumerating actual
permutations; tableau counts come from corner-removal recursion, not hook
products. Feasible for small n only.
"""

import itertools
import math
from fractions import Fraction
from functools import lru_cache


# -- permutations and classes --------------------------------------------------

def cycle_type_of(perm: tuple) -> tuple:
    """Cycle type of a permutation given as a tuple of images of 0..n-1."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def parity_by_inversions(perm: tuple) -> int:
    """+1 or -1 via inversion count (no cycle-structure shortcut)."""
    inv = sum(
        1
        for i, j in itertools.combinations(range(len(perm)), 2)
        if perm[i] > perm[j]
    )
    return -1 if inv % 2 else 1


def brute_classes(n: int) -> dict[tuple, int]:
    """Cycle type -> class size, by enumerating all n! permutations."""
    sizes: dict[tuple, int] = {}
    for perm in itertools.permutations(range(n)):
        t = cycle_type_of(perm)
        sizes[t] = sizes.get(t, 0) + 1
    return sizes


# -- character tables from permutation modules ---------------------------------

def _fixed_tabloids(cycles: tuple, rows: tuple) -> int:
    """Number of ways to place the given cycle lengths into ordered rows
    of the given capacities, each cycle wholly inside one row. This counts
    the row-partitions of {1..n} fixed by a permutation with those cycles.
    """
    @lru_cache(maxsize=None)
    def go(i: int, caps: tuple) -> int:
        if i == len(cycles):
            return 1
        c = cycles[i]
        total = 0
        for r, cap in enumerate(caps):
            if cap >= c:
                total += go(i + 1, caps[:r] + (cap - c,) + caps[r + 1:])
        return total

    return go(0, rows)


def _lex_desc_partitions(n: int) -> list[tuple]:
    """All partitions of n, largest-first lexicographic, by recursion."""
    def gen(m, bound):
        if m == 0:
            yield ()
            return
        for first in range(min(m, bound), 0, -1):
            for rest in gen(m - first, first):
                yield (first,) + rest

    return list(gen(n, n))


def oracle_character_table(n: int) -> dict[tuple, dict[tuple, int]]:
    """Irreducible character table of S_n as {shape: {class: value}}.

    Permutation-module route: the character of the module of row-partitions
    with row sizes lambda counts fixed tabloids; subtracting the
    previously extracted irreducibles (inner products with class weights)
    in largest-first lexicographic order leaves exactly one new
    irreducible each time. Exact rational arithmetic; every multiplicity
    must come out a nonnegative integer or the oracle aborts.
    """
    shapes = _lex_desc_partitions(n)
    sizes = brute_classes(n)
    classes = [t for t in shapes if t in sizes]
    assert set(classes) == set(sizes)
    order = math.factorial(n)

    def inner(a, b) -> Fraction:
        return sum(
            (Fraction(sizes[k]) * a[k] * b[k] for k in classes),
            Fraction(0),
        ) / order

    table: dict[tuple, dict[tuple, int]] = {}
    for shape in shapes:
        perm_char = {
            k: Fraction(_fixed_tabloids(k, shape)) for k in classes
        }
        for prev in table.values():
            mult = inner(perm_char, prev)
            assert mult.denominator == 1 and mult >= 0, (shape, mult)
            if mult:
                for k in classes:
                    perm_char[k] -= mult * prev[k]
        assert inner(perm_char, perm_char) == 1, shape
        row = {}
        for k in classes:
            assert perm_char[k].denominator == 1, (shape, k)
            row[k] = int(perm_char[k])
        table[shape] = row
    return table


def oracle_pzero(n: int) -> Fraction:
    """P_n from the oracle table: uniform character, uniform group element."""
    table = oracle_character_table(n)
    sizes = brute_classes(n)
    order = math.factorial(n)
    total = Fraction(0)
    for row in table.values():
        for k, v in row.items():
            if v == 0:
                total += Fraction(sizes[k], order)
    return total / len(table)


# -- tableau counting -----------------------------------------------------------

@lru_cache(maxsize=None)
def count_standard_tableaux(shape: tuple) -> int:
    """Standard fillings counted by removing corner cells one at a time."""
    if sum(shape) <= 1:
        return 1
    total = 0
    for i, row in enumerate(shape):
        if i + 1 < len(shape) and shape[i + 1] == row:
            continue
        smaller = shape[:i] + (row - 1,) + shape[i + 1:]
        if smaller[-1] == 0:
            smaller = smaller[:-1]
        total += count_standard_tableaux(smaller)
    return total


# -- cycle-count law ------------------------------------------------------------

def parts_count_law(n: int) -> dict[int, Fraction]:
    """Exact law of the number of parts of a cycle type of a uniform
    permutation, as the coefficient sequence of prod_i ((i-1) + x)/i.
    """
    poly = [Fraction(1)]
    for i in range(1, n + 1):
        stay = Fraction(i - 1, i)
        move = Fraction(1, i)
        nxt = [Fraction(0)] * (len(poly) + 1)
        for m, c in enumerate(poly):
            nxt[m] += c * stay
            nxt[m + 1] += c * move
        poly = nxt
    return {m: c for m, c in enumerate(poly) if c}


def parts_count_law_by_classes(n: int, partitions_of) -> dict[int, Fraction]:
    """Same law the slow way: sum 1/z over partitions with m parts.
    Takes the package's enumerator plus centralizer as inputs so the two
    routes stay structurally independent.
    """
    enumerate_partitions, centralizer_order = partitions_of
    law: dict[int, Fraction] = {}
    for lam in enumerate_partitions(n):
        m = len(lam)
        law[m] = law.get(m, Fraction(0)) + Fraction(1, centralizer_order(lam))
    return law
