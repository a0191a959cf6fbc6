"""Pure-Python kernels; same contract as the compiled ``_ckernels`` module.

Tables are passed in the form returned by :func:`prepare_table` (a tuple of
row lists here).  All index arguments are element indices into the ambient
group's sorted element list; index 0 is the identity.
"""

import numpy as np

BACKEND = "python"


def prepare_table(table: np.ndarray):
    return tuple(table.tolist())


def closure(table, gens, start=()) -> np.ndarray:
    """Mask of the subgroup generated by ``gens`` together with ``start``.

    ``start`` must already be closed under products with the generators it
    came from (typically a subgroup that ``gens`` generate jointly with the
    new elements); every start element is re-multiplied by all ``gens``.
    """
    n = len(table)
    seen = bytearray(n)
    seen[0] = 1
    queue = [0]
    for s in start:
        if not seen[s]:
            seen[s] = 1
            queue.append(s)
    gens = [int(g) for g in gens]
    for x in queue:
        row = table[x]
        for g in gens:
            y = row[g]
            if not seen[y]:
                seen[y] = 1
                queue.append(y)
    return np.frombuffer(bytes(seen), dtype=np.uint8).copy()


def conjugation_orbits(table, inv, gens) -> np.ndarray:
    """Label each element by the smallest index in its orbit under x -> g^-1 x g."""
    n = len(table)
    label = [-1] * n
    inv = [int(i) for i in inv]
    gens = [int(g) for g in gens]
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = start
        queue = [start]
        for x in queue:
            for g in gens:
                y = table[table[inv[g]][x]][g]
                if label[y] < 0:
                    label[y] = start
                    queue.append(y)
    return np.array(label, dtype=np.int32)


def product_mask(table, a, b) -> np.ndarray:
    """Mask of the product set {x*y : x in a, y in b}."""
    n = len(table)
    seen = bytearray(n)
    b = [int(y) for y in b]
    for x in a:
        row = table[int(x)]
        for y in b:
            seen[row[y]] = 1
    return np.frombuffer(bytes(seen), dtype=np.uint8).copy()


def element_orders(table) -> np.ndarray:
    n = len(table)
    out = [0] * n
    for x in range(n):
        if out[x]:
            continue
        # walk the cyclic subgroup once and fill in every power's order
        powers = [0]
        y = x
        while y != 0:
            powers.append(y)
            y = table[y][x]
        k = len(powers)
        out[x] = k
        for e in range(1, k):
            p = powers[e]
            if not out[p]:
                out[p] = k // _gcd(e, k)
    out[0] = 1
    return np.array(out, dtype=np.int32)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
