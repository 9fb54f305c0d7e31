"""Pure-Python marginal-contribution kernels.

Both kernels take the game as a table of integers (values scaled by a
common denominator) indexed by coalition bitmask and return integer sums
of marginal contributions bucketed by the sizes the weights depend on.
Python ints never overflow, so this backend accepts any table.
"""


def shapley_sums(table, n):
    """``sums[i][s]`` = sum over ``|S| = s``, ``i`` not in ``S`` of ``v(S+i) - v(S)``."""
    sums = [[0] * n for _ in range(n)]
    bits = [1 << i for i in range(n)]
    for S in range(1 << n):
        vS = table[S]
        s = S.bit_count()
        for i in range(n):
            b = bits[i]
            if not S & b:
                sums[i][s] += table[S | b] - vS
    return sums


def configuration_sums(table, n, blocks):
    """Marginal sums for the configuration value.

    ``sums[i][q][c][s]`` accumulates ``v(A + S) - v(A + S - i)`` over block
    subsets ``C`` with ``|C| = c`` avoiding the blocks of ``i`` (``A`` their
    union) and ``S`` a subset of block ``q`` containing ``i`` with ``|S| = s``.
    Entries for ``i`` outside block ``q`` stay zero.
    """
    m = len(blocks)
    width = max(b.bit_count() for b in blocks) + 1
    union = [0] * (1 << m)
    for C in range(1, 1 << m):
        low = C & -C
        union[C] = union[C ^ low] | blocks[low.bit_length() - 1]

    sums = [[[[0] * width for _ in range(m)] for _ in range(m)] for _ in range(n)]
    all_blocks = (1 << m) - 1
    for i in range(n):
        bit = 1 << i
        own = 0
        for q, b in enumerate(blocks):
            if b & bit:
                own |= 1 << q
        others = all_blocks & ~own
        for q, b in enumerate(blocks):
            if not b & bit:
                continue
            rest = b & ~bit
            bucket = sums[i][q]
            C = others
            while True:
                A = union[C]
                row = bucket[C.bit_count()]
                sub = rest
                while True:
                    T = A | sub
                    row[sub.bit_count() + 1] += table[T | bit] - table[T]
                    if sub == 0:
                        break
                    sub = (sub - 1) & rest
                if C == 0:
                    break
                C = (C - 1) & others
    return sums
