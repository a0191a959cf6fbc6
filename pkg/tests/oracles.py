"""Brute-force reference implementations used as test oracles.

Everything here works on raw Permutation objects and Python sets; nothing
touches the Cayley tables, kernels or stabilizer chains under test.
"""

from __future__ import annotations

from itertools import product as cartesian

from grouplab.perm import Permutation


def closure(gens, degree: int) -> frozenset:
    e = Permutation.identity(degree)
    seen = {e}
    frontier = [e]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def elements(G) -> frozenset:
    return closure(G.generators, G.degree)


def order_of(x: Permutation) -> int:
    e = Permutation.identity(x.degree)
    k, y = 1, x
    while y != e:
        y = y * x
        k += 1
    return k


def conj(x, g):
    return g.inverse() * x * g


def class_of(x, group_elems) -> frozenset:
    return frozenset(conj(x, g) for g in group_elems)


def class_size(x, group_elems) -> int:
    return len(class_of(x, group_elems))


def centralizer(x, group_elems) -> frozenset:
    return frozenset(g for g in group_elems if g * x == x * g)


def center(group_elems) -> frozenset:
    els = list(group_elems)
    return frozenset(z for z in els if all(z * g == g * z for g in els))


def is_subgroup(subset, degree) -> bool:
    s = set(subset)
    if Permutation.identity(degree) not in s:
        return False
    return all(a * b in s for a in s for b in s)


def is_normal(sub, group_elems) -> bool:
    s = set(sub)
    return all(conj(x, g) in s for x in s for g in group_elems)


def derived(group_elems, degree) -> frozenset:
    els = list(group_elems)
    comms = {a.inverse() * b.inverse() * a * b for a in els for b in els}
    return closure(comms, degree)


def subgroups_by_generators(group_elems, degree, rank: int = 2) -> set:
    """All subgroups generated by at most ``rank`` elements."""
    els = sorted(group_elems)
    out = {closure([], degree)}
    for combo in cartesian(els, repeat=rank):
        out.add(closure(combo, degree))
    return out


def product_set(A, B) -> frozenset:
    return frozenset(a * b for a in A for b in B)


def permutes(A, B) -> bool:
    return product_set(A, B) == product_set(B, A)


def mutually_permutable(A, B, degree, rank: int = 2) -> bool:
    subs_a = subgroups_by_generators(A, degree, rank)
    subs_b = subgroups_by_generators(B, degree, rank)
    return all(permutes(A, H) for H in subs_b) and all(permutes(B, H) for H in subs_a)


def largest_normal_p_subgroup(group_elems, degree, p: int, rank: int = 2) -> frozenset:
    best = closure([], degree)
    for S in subgroups_by_generators(group_elems, degree, rank):
        n = len(S)
        while n % p == 0:
            n //= p
        if n == 1 and is_normal(S, group_elems) and len(S) > len(best):
            best = S
    return best


def power(x: Permutation, k: int) -> Permutation:
    y = Permutation.identity(x.degree)
    for _ in range(k):
        y = y * x
    return y
