"""Independent reference implementations used to cross-check the package.

Everything here is deliberately naive and shares no code with the package
under test: set algebra over explicit element lists, propagation-free
backtracking over raw cell arrays, and trial-division primality.
"""

import random


# ---------------------------------------------------------------------------
# List-based set algebra (reference for the bitset type)
# ---------------------------------------------------------------------------

def members_of_word(bits: int, capacity: int) -> list[int]:
    """Decode a bit pattern into the ascending list of 1-based elements."""
    return [d for d in range(1, capacity + 1) if (bits >> (d - 1)) & 1]


def ref_intersect(a: list[int], b: list[int]) -> list[int]:
    return [d for d in a if d in b]


def ref_union(a: list[int], b: list[int]) -> list[int]:
    return sorted(a + [d for d in b if d not in a])


def ref_difference(a: list[int], b: list[int]) -> list[int]:
    return [d for d in a if d not in b]


def ref_insert(a: list[int], d: int) -> list[int]:
    return sorted(a + [d]) if d not in a else list(a)


def ref_remove(a: list[int], d: int) -> list[int]:
    return [x for x in a if x != d]


def ref_is_subset(a: list[int], b: list[int]) -> bool:
    return all(d in b for d in a)


# ---------------------------------------------------------------------------
# Propagation-free backtracking (reference solver)
# ---------------------------------------------------------------------------

def _legal(cells: list[list[int]], order: int, r: int, c: int, v: int) -> bool:
    m = order * order
    for x in range(m):
        if cells[r][x] == v or cells[x][c] == v:
            return False
    br = (r // order) * order
    bc = (c // order) * order
    for rr in range(br, br + order):
        for cc in range(bc, bc + order):
            if cells[rr][cc] == v:
                return False
    return True


def brute_force_solutions(order: int, cells: list[list[int]],
                          limit: int | None = None) -> list[list[list[int]]]:
    """Enumerate every completion of the puzzle by plain row-major backtracking.

    No candidate bookkeeping of any kind: each placement is checked by
    scanning the row, column, and block.  Input clues are assumed
    duplicate-free.
    """
    m = order * order
    work = [row[:] for row in cells]
    blanks = [(r, c) for r in range(m) for c in range(m) if work[r][c] == 0]
    found: list[list[list[int]]] = []

    def rec(k: int) -> bool:
        if k == len(blanks):
            found.append([row[:] for row in work])
            return limit is not None and len(found) >= limit
        r, c = blanks[k]
        for v in range(1, m + 1):
            if _legal(work, order, r, c, v):
                work[r][c] = v
                if rec(k + 1):
                    work[r][c] = 0
                    return True
                work[r][c] = 0
        return False

    rec(0)
    return found


def brute_force_count(order: int, cells: list[list[int]],
                      limit: int | None = None) -> int:
    return len(brute_force_solutions(order, cells, limit))


# ---------------------------------------------------------------------------
# Deterministic valid-grid generation
# ---------------------------------------------------------------------------

def pattern_grid(order: int) -> list[list[int]]:
    """The canonical shifted-row complete grid; valid by construction."""
    m = order * order
    return [[(r * order + r // order + c) % m + 1 for c in range(m)]
            for r in range(m)]


def shuffled_valid_grid(order: int, rng: random.Random) -> list[list[int]]:
    """A random complete grid obtained from the pattern by transforms that
    preserve validity: digit relabeling, row swaps within a band, column
    swaps within a stack, band swaps, and stack swaps."""
    m = order * order
    cells = pattern_grid(order)

    relabel = list(range(1, m + 1))
    rng.shuffle(relabel)
    cells = [[relabel[v - 1] for v in row] for row in cells]

    rows = list(range(m))
    for band in range(order):
        chunk = rows[band * order:(band + 1) * order]
        rng.shuffle(chunk)
        rows[band * order:(band + 1) * order] = chunk
    bands = list(range(order))
    rng.shuffle(bands)
    rows = [rows[b * order + i] for b in bands for i in range(order)]

    cols = list(range(m))
    for stack in range(order):
        chunk = cols[stack * order:(stack + 1) * order]
        rng.shuffle(chunk)
        cols[stack * order:(stack + 1) * order] = chunk
    stacks = list(range(order))
    rng.shuffle(stacks)
    cols = [cols[s * order + i] for s in stacks for i in range(order)]

    return [[cells[r][c] for c in cols] for r in rows]


def delete_cells(cells: list[list[int]], count: int,
                 rng: random.Random) -> list[list[int]]:
    """Blank out `count` distinct cells, chosen uniformly."""
    m = len(cells)
    out = [row[:] for row in cells]
    positions = [(r, c) for r in range(m) for c in range(m)]
    for r, c in rng.sample(positions, count):
        out[r][c] = 0
    return out


# ---------------------------------------------------------------------------
# Trial-division primality (reference for the sieve)
# ---------------------------------------------------------------------------

def is_prime_by_trial_division(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def primes_by_trial_division(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime_by_trial_division(p)]
