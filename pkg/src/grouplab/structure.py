"""Structural subgroup computations.

Every operation accepts a :class:`FiniteGroup` or a :class:`SubgroupRef` and
works inside the ambient group's element space, so results for a subgroup
``H`` are again ``SubgroupRef`` values of the same ambient group.  Only
:func:`quotient` produces a new group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import CapExceeded, NotASubgroup, NotMember, NotNormal
from .group import (FiniteGroup, SubgroupRef, as_subgroup, mask_from_bool,
                    mask_to_indices)
from .numtheory import (is_power_of, is_prime, is_prime_power, p_part, pi_part,
                        prime_factors, require_prime)
from .perm import Permutation

@dataclass(frozen=True)
class ClassData:
    representative: Permutation
    size: int
    element_order: int
    is_p_regular: dict
    is_prime_power_order: bool
    members: np.ndarray = field(repr=False, compare=False)


@dataclass(frozen=True)
class ChiefSeries:
    terms: tuple  # SubgroupRefs, 1 = G_0 < ... < G_k = G
    factor_orders: tuple
    factor_is_prime: tuple

    @property
    def factor_primes(self) -> tuple:
        """Prime of each factor of prime-power order, else None."""
        out = []
        for n in self.factor_orders:
            ps = prime_factors(n)
            out.append(ps[0] if len(ps) == 1 else None)
        return tuple(out)


@dataclass
class Quotient:
    """Coset action of ``source`` on the right cosets of ``kernel``."""

    source: SubgroupRef
    kernel: SubgroupRef
    group: FiniteGroup
    labels: np.ndarray  # ambient element index -> coset number (-1 outside source)
    reps: np.ndarray  # coset number -> ambient element index

    def image_images(self, x: int) -> np.ndarray:
        G = self.source.ambient
        return self.labels[G.table[self.reps, x]]

    def project(self, x: "Permutation | int") -> Permutation:
        G = self.source.ambient
        xi = G.index(x) if isinstance(x, Permutation) else int(x)
        if not self.source.contains_index(xi):
            raise NotMember(f"{G.element(xi)} is not in the source group")
        return Permutation._raw(tuple(self.image_images(xi).tolist()))

    def project_indices(self, idx: Sequence[int]) -> np.ndarray:
        """Indices in ``group`` of the images of ambient elements ``idx``."""
        G = self.source.ambient
        idx = np.asarray(idx, dtype=np.int64)
        rows = self.labels[G.table[self.reps[:, None], idx[None, :]]].T
        return self.group._lookup_rows(np.ascontiguousarray(rows, dtype=np.int32))

    def preimage(self, S: SubgroupRef) -> SubgroupRef:
        if S.ambient is not self.group:
            raise NotASubgroup("subgroup does not live in this quotient")
        G = self.source.ambient
        src = self.source.indices
        img = self.project_indices(src)
        keep = S.bool_mask[img]
        arr = np.zeros(G.order, dtype=bool)
        arr[src[keep]] = True
        return G.subgroup_from_mask(mask_from_bool(arr))


# ---------------------------------------------------------------- helpers

def _idx(G: FiniteGroup, x) -> int:
    return G.index(x) if isinstance(x, Permutation) else int(x)


def _member_or_raise(H: SubgroupRef, xi: int) -> None:
    if not H.contains_index(xi):
        raise NotMember(f"{H.ambient.element(xi)} is not an element of the group")


def _check_same(H: SubgroupRef, S: SubgroupRef) -> None:
    if S.ambient is not H.ambient:
        raise NotASubgroup("subgroups live in different ambient groups")
    if not S.is_subgroup_of(H):
        raise NotASubgroup("not a subgroup of the given group")


def conjugate_mask(G: FiniteGroup, indices: np.ndarray, g: int) -> int:
    arr = np.zeros(G.order, dtype=bool)
    arr[G.conj_map(g)[indices]] = True
    return mask_from_bool(arr)


def is_normal(X, S: SubgroupRef) -> bool:
    H = as_subgroup(X)
    _check_same(H, S)
    G = H.ambient
    bm = S.bool_mask
    sg = S.gen_indices
    t, inv = G.table, G.inv
    for g in H.gen_indices:
        for y in sg:
            if not bm[t[t[inv[g], y], g]]:
                return False
    return True


def normal_closure_mask(G: FiniteGroup, seeds: Iterable[int], conj_gens: Sequence[int],
                        start: int = 1) -> int:
    """Mask of the smallest subgroup containing ``start`` and ``seeds`` normalised by ``conj_gens``.

    ``start`` must be a subgroup mask normalised by ``conj_gens``.
    """
    t, inv, kt = G.table, G.inv, G.ktable
    n = G.order
    new = [int(s) for s in seeds if s != 0 and not start >> int(s) & 1]
    gens = (G.generating_indices(start) if start != 1 else []) + new
    start_idx = mask_to_indices(start, n) if start != 1 else np.zeros(1, dtype=np.int64)
    cur = kernels.closure(kt, gens, start_idx).astype(bool)
    # start is already normal, so only conjugates of the new generators matter
    queue = list(new)
    while queue:
        y = queue.pop()
        for g in conj_gens:
            c = int(t[t[inv[g], y], g])
            if not cur[c]:
                gens.append(c)
                queue.append(c)
                cur = kernels.closure(kt, gens, np.flatnonzero(cur)).astype(bool)
    return mask_from_bool(cur)


def normal_closure(X, elements: Iterable) -> SubgroupRef:
    H = as_subgroup(X)
    G = H.ambient
    seeds = [_idx(G, e) for e in elements]
    for s in seeds:
        _member_or_raise(H, s)
    return G.subgroup_from_mask(normal_closure_mask(G, seeds, H.gen_indices))


def _commutator_index(G: FiniteGroup, a: int, b: int) -> int:
    t, inv = G.table, G.inv
    return int(t[t[t[inv[a], inv[b]], a], b])


def commutator_subgroup(X, S: SubgroupRef, T: SubgroupRef) -> SubgroupRef:
    """[S, T] for subgroups S, T normal in X."""
    H = as_subgroup(X)
    G = H.ambient
    seeds = {_commutator_index(G, a, b) for a in S.gen_indices for b in T.gen_indices}
    return G.subgroup_from_mask(normal_closure_mask(G, sorted(seeds), H.gen_indices))


def is_abelian(X) -> bool:
    H = as_subgroup(X)
    G = H.ambient
    t = G.table
    gi = H.gen_indices
    return all(t[a, b] == t[b, a] for i, a in enumerate(gi) for b in gi[i + 1:])


def centralizer_of_indices(X, indices: Iterable[int]) -> SubgroupRef:
    H = as_subgroup(X)
    G = H.ambient
    t = G.table
    keep = H.bool_mask.copy()
    for x in indices:
        keep &= t[:, x] == t[x, :]
    return G.subgroup_from_mask(mask_from_bool(keep))


def normalizer(X, S: SubgroupRef) -> SubgroupRef:
    H = as_subgroup(X)
    G = H.ambient
    t, inv = G.table, G.inv
    keep = H.bool_mask.copy()
    bm = S.bool_mask
    allg = np.arange(G.order)
    for y in S.gen_indices:
        conj = t[t[inv, y], allg]  # g^-1 y g for every g
        keep &= bm[conj]
    return G.subgroup_from_mask(mask_from_bool(keep))


# ------------------------------------------------------ classes, centralizers

def centralizer(X, x) -> SubgroupRef:
    H = as_subgroup(X)
    xi = _idx(H.ambient, x)
    _member_or_raise(H, xi)
    return centralizer_of_indices(H, [xi])


def _class_labels(H: SubgroupRef) -> np.ndarray:
    G = H.ambient
    def compute():
        if G.order <= G.caps.table:
            return kernels.conjugation_orbits(G.ktable, G.inv, H.gen_indices)
        return _class_labels_by_perms(H)
    return G.memo(("class_labels", H.mask), compute)


def _class_labels_by_perms(H: SubgroupRef) -> np.ndarray:
    G = H.ambient
    G._check_enumerable()
    els = G.elements
    index = G._index
    label = np.full(G.order, -1, dtype=np.int64)
    gens = [(g.inverse(), g) for g in H.generators]
    for start in range(G.order):
        if label[start] >= 0:
            continue
        label[start] = start
        queue = [start]
        for x in queue:
            px = els[x]
            for gi, g in gens:
                y = index[gi * px * g]
                if label[y] < 0:
                    label[y] = start
                    queue.append(y)
    return label


def conjugacy_classes(X) -> list[ClassData]:
    H = as_subgroup(X)
    G = H.ambient
    def compute():
        labels = _class_labels(H)
        idx = H.indices
        lab = labels[idx]
        primes = prime_factors(H.order) if H.order > 1 else []
        orders = G.element_orders
        out = []
        for rep in np.unique(lab).tolist():
            members = idx[lab == rep]
            o = int(orders[rep])
            out.append(ClassData(
                representative=G.element(rep),
                size=len(members),
                element_order=o,
                is_p_regular={p: o % p != 0 for p in primes},
                is_prime_power_order=is_prime_power(o),
                members=members,
            ))
        out.sort(key=lambda c: (c.size, int(c.members[0])))
        return out
    return G.memo(("classes", H.mask), compute)


def class_size_array(X) -> np.ndarray:
    """Class size within X of every ambient element (0 for elements outside X)."""
    H = as_subgroup(X)
    G = H.ambient
    def compute():
        out = np.zeros(G.order, dtype=np.int64)
        for c in conjugacy_classes(H):
            out[c.members] = c.size
        out.setflags(write=False)
        return out
    return G.memo(("class_sizes", H.mask), compute)


def class_size(X, x) -> int:
    H = as_subgroup(X)
    xi = _idx(H.ambient, x)
    _member_or_raise(H, xi)
    return int(class_size_array(H)[xi])


# ------------------------------------------------------ characteristic subgroups

def derived_subgroup(X) -> SubgroupRef:
    H = as_subgroup(X)
    G = H.ambient
    def compute():
        gi = H.gen_indices
        seeds = sorted({_commutator_index(G, a, b) for i, a in enumerate(gi) for b in gi[i + 1:]})
        return G.subgroup_from_mask(normal_closure_mask(G, seeds, gi))
    return G.memo(("derived", H.mask), compute)


def derived_series(X) -> list[SubgroupRef]:
    H = as_subgroup(X)
    series = [H]
    while True:
        D = derived_subgroup(series[-1])
        if D == series[-1]:
            return series
        series.append(D)


def lower_central_series(X) -> list[SubgroupRef]:
    H = as_subgroup(X)
    series = [H]
    while True:
        nxt = commutator_subgroup(H, series[-1], H)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def nilpotent_residual(X) -> SubgroupRef:
    return lower_central_series(X)[-1]


def center(X) -> SubgroupRef:
    H = as_subgroup(X)
    return H.ambient.memo(("center", H.mask), lambda: centralizer_of_indices(H, H.gen_indices))


def element_power_index(G: FiniteGroup, x: int, k: int) -> int:
    t = G.table
    result, base = 0, x
    while k:
        if k & 1:
            result = int(t[result, base])
        base = int(t[base, base])
        k >>= 1
    return result


# ------------------------------------------------------ subgroup lattice

def _lattice_masks(G: FiniteGroup, region: int) -> dict[int, list[int]]:
    """All subgroups of the subgroup with mask ``region``: mask -> generator indices."""
    def compute():
        n = G.order
        kt = G.ktable
        orders = G.element_orders
        idx = mask_to_indices(region, n)
        cyclic: dict[int, int] = {}
        for x in idx.tolist():
            if x == 0 or not is_prime_power(int(orders[x])):
                continue
            m = mask_from_bool(kernels.closure(kt, [x]))
            cyclic.setdefault(m, x)
        cyc_items = list(cyclic.items())
        subs: dict[int, list[int]] = {1: []}
        indices: dict[int, np.ndarray] = {1: np.zeros(1, dtype=np.int64)}
        queue = [1]
        for m, x in cyc_items:
            if m not in subs:
                subs[m] = [x]
                queue.append(m)
        for S in queue:
            gens = subs[S]
            start = indices.get(S)
            if start is None:
                start = indices[S] = mask_to_indices(S, n)
            for cm, c in cyc_items:
                if cm & S == cm:
                    continue
                J = mask_from_bool(kernels.closure(kt, gens + [c], start))
                if J not in subs:
                    subs[J] = gens + [c]
                    queue.append(J)
        return subs
    return G.memo(("lattice", region), compute)


def _check_lattice_cap(H: SubgroupRef) -> None:
    cap = H.ambient.caps.lattice
    if H.order > cap:
        raise CapExceeded("subgroup lattice order", H.order, cap)


def _ref(G: FiniteGroup, mask: int, gens: Sequence[int]) -> SubgroupRef:
    return SubgroupRef(G, mask, tuple(G.elements[i] for i in gens))


def all_subgroups(X) -> list[SubgroupRef]:
    H = as_subgroup(X)
    _check_lattice_cap(H)
    G = H.ambient
    def compute():
        subs = _lattice_masks(G, H.mask)
        refs = [_ref(G, m, g) for m, g in subs.items()]
        refs.sort(key=SubgroupRef.sort_key)
        return refs
    return G.memo(("all_subgroups", H.mask), compute)


def normal_subgroups(X) -> list[SubgroupRef]:
    H = as_subgroup(X)
    G = H.ambient
    return G.memo(("normal_subgroups", H.mask),
                  lambda: [S for S in all_subgroups(H) if is_normal(H, S)])


def minimal_normal_subgroups(X) -> list[SubgroupRef]:
    """Inclusion-minimal normal closures of single elements; lattice free."""
    H = as_subgroup(X)
    G = H.ambient
    def compute():
        cands: dict[int, None] = {}
        for c in conjugacy_classes(H):
            x = int(c.members[0])
            if x == 0:
                continue
            cands.setdefault(normal_closure_mask(G, [x], H.gen_indices))
        masks = list(cands)
        minimal = [m for m in masks if not any(o != m and o & m == o for o in masks)]
        refs = [G.subgroup_from_mask(m) for m in minimal]
        refs.sort(key=SubgroupRef.sort_key)
        return refs
    return G.memo(("minimal_normal", H.mask), compute)


def minimal_normal_subgroups_by_lattice(X) -> list[SubgroupRef]:
    normals = [S for S in normal_subgroups(X) if not S.is_trivial()]
    return [S for S in normals if not any(T < S for T in normals)]


def socle(X) -> SubgroupRef:
    H = as_subgroup(X)
    G = H.ambient
    def compute():
        mins = minimal_normal_subgroups(H)
        gens = [i for S in mins for i in S.gen_indices]
        return G.subgroup_from_mask(mask_from_bool(kernels.closure(G.ktable, gens)))
    return G.memo(("socle", H.mask), compute)


def maximal_subgroups(X) -> list[SubgroupRef]:
    H = as_subgroup(X)
    G = H.ambient
    def compute():
        proper = [S for S in all_subgroups(H) if S.mask != H.mask]
        return [M for M in proper
                if not any(M.mask != S.mask and M.mask & S.mask == M.mask for S in proper)]
    return G.memo(("maximal", H.mask), compute)


# ------------------------------------------------------ Sylow, Hall, cores

def sylow_subgroup(X, p: int) -> SubgroupRef:
    require_prime(p)
    H = as_subgroup(X)
    G = H.ambient
    def compute():
        target = p_part(H.order, p)
        if target == 1:
            return G.trivial()
        orders = G.element_orders
        idx = H.indices
        pel = [x for x in idx.tolist() if x and is_power_of(int(orders[x]), p)]
        best = max(int(orders[x]) for x in pel)
        start = min(x for x in pel if orders[x] == best)
        P = G.subgroup_from_indices([start])
        while P.order < target:
            N = normalizer(H, P)
            pm = P.bool_mask
            for g in N.indices.tolist():
                if pm[g]:
                    continue
                o = int(orders[g])
                y = element_power_index(G, g, o // p_part(o, p))
                if not pm[y]:
                    gi = P.gen_indices + [y]
                    mask = mask_from_bool(kernels.closure(G.ktable, gi, P.indices))
                    P = SubgroupRef(G, mask, tuple(G.elements[i] for i in gi))
                    break
            else:  # pragma: no cover - Sylow theory guarantees progress
                raise RuntimeError("Sylow search stalled")
        return P
    return G.memo(("sylow", H.mask, p), compute)


def hall_subgroup(X, pi) -> SubgroupRef | None:
    H = as_subgroup(X)
    primes = set(pi)
    for p in primes:
        require_prime(p)
    order = H.order
    target = pi_part(order, primes)
    if target == order:
        return H
    if target == 1:
        return H.ambient.trivial()
    relevant = [p for p in prime_factors(order) if p in primes]
    if len(relevant) == 1:
        return sylow_subgroup(H, relevant[0])
    for S in all_subgroups(H):
        if S.order == target:
            return S
    return None


def conjugates(X, A: SubgroupRef) -> list[SubgroupRef]:
    """Distinct X-conjugates of A, in orbit discovery order."""
    H = as_subgroup(X)
    _check_same(H, A)
    G = H.ambient
    seen = {A.mask: A}
    queue = [A]
    for S in queue:
        for g in H.gen_indices:
            m = conjugate_mask(G, S.indices, g)
            if m not in seen:
                cmap = G.conj_map(g)
                seen[m] = SubgroupRef(G, m, tuple(G.elements[int(cmap[i])] for i in S.gen_indices))
                queue.append(seen[m])
    return queue


def core_in(X, A: SubgroupRef) -> SubgroupRef:
    H = as_subgroup(X)
    _check_same(H, A)
    G = H.ambient
    def compute():
        mask = A.mask
        for S in conjugates(H, A):
            mask &= S.mask
        return G.subgroup_from_mask(mask)
    return G.memo(("core", H.mask, A.mask), compute)


def p_core(X, p: int) -> SubgroupRef:
    require_prime(p)
    H = as_subgroup(X)
    return core_in(H, sylow_subgroup(H, p))


def pi_core(X, pi) -> SubgroupRef:
    """Largest normal pi-subgroup, grown one normal closure at a time."""
    H = as_subgroup(X)
    G = H.ambient
    primes = frozenset(pi)
    def compute():
        orders = G.element_orders
        reps = [int(c.members[0]) for c in conjugacy_classes(H)]
        def is_pi(n: int) -> bool:
            return pi_part(n, primes) == n
        cur = 1
        changed = True
        while changed:
            changed = False
            for x in reps:
                if x == 0 or cur >> x & 1 or not is_pi(int(orders[x])):
                    continue
                cand = normal_closure_mask(G, [x], H.gen_indices, start=cur)
                if is_pi(cand.bit_count()):
                    cur = cand
                    changed = True
        return G.subgroup_from_mask(cur)
    return G.memo(("pi_core", H.mask, primes), compute)


def p_prime_core(X, p: int) -> SubgroupRef:
    require_prime(p)
    H = as_subgroup(X)
    return pi_core(H, [q for q in prime_factors(H.order) if q != p])


def fitting(X) -> SubgroupRef:
    H = as_subgroup(X)
    G = H.ambient
    def compute():
        if H.order == 1:
            return G.trivial()
        gens = [i for p in prime_factors(H.order) for i in p_core(H, p).gen_indices]
        return G.subgroup_from_mask(mask_from_bool(kernels.closure(G.ktable, gens)))
    return G.memo(("fitting", H.mask), compute)


def frattini(X, method: str = "auto") -> SubgroupRef:
    """Intersection of maximal subgroups.

    ``method="auto"`` uses ``P'P^p`` for p-groups and the subgroup lattice
    otherwise; ``"lattice"`` and ``"pgroup"`` force a route.
    """
    H = as_subgroup(X)
    G = H.ambient
    ps = prime_factors(H.order) if H.order > 1 else []
    if H.order == 1:
        return G.trivial()
    if method == "pgroup" or (method == "auto" and len(ps) == 1):
        if len(ps) != 1:
            raise ValueError("p-group route needs a group of prime-power order")
        p = ps[0]
        def compute_p():
            D = derived_subgroup(H)
            powers = {element_power_index(G, x, p) for x in H.indices.tolist()}
            gens = D.gen_indices + sorted(powers - {0})
            return G.subgroup_from_mask(mask_from_bool(kernels.closure(G.ktable, gens)))
        return G.memo(("frattini_p", H.mask), compute_p)
    def compute_l():
        mask = H.mask
        for M in maximal_subgroups(H):
            mask &= M.mask
        return G.subgroup_from_mask(mask)
    return G.memo(("frattini_l", H.mask), compute_l)


# ------------------------------------------------------ quotients, chief series

def quotient(X, N: SubgroupRef) -> Quotient:
    H = as_subgroup(X)
    G = H.ambient
    _check_same(H, N)
    if not is_normal(H, N):
        raise NotNormal("quotient requires a normal subgroup")
    index = H.order // N.order
    if index > G.caps.degree:
        raise CapExceeded("quotient degree", index, G.caps.degree)
    t = G.table
    labels = np.full(G.order, -1, dtype=np.int64)
    reps = []
    nidx = N.indices
    for x in H.indices.tolist():
        if labels[x] >= 0:
            continue
        labels[t[nidx, x]] = len(reps)
        reps.append(x)
    reps_arr = np.array(reps, dtype=np.int64)
    gens = []
    for g in H.gen_indices:
        img = labels[t[reps_arr, g]]
        gens.append(Permutation(img.tolist(), zero_based=True))
    Q = FiniteGroup(gens, degree=index, caps=G.caps)
    return Quotient(H, N, Q, labels, reps_arr)


def _order_mod(G: FiniteGroup, x: int, cur_mask: int) -> int:
    t = G.table
    k, y = 1, x
    while not cur_mask >> y & 1:
        y = int(t[y, x])
        k += 1
    return k


def chief_series(X) -> ChiefSeries:
    H = as_subgroup(X)
    G = H.ambient
    def compute():
        reps = [int(c.members[0]) for c in conjugacy_classes(H)]
        terms = [G.trivial()]
        cur = G.trivial()
        while cur.mask != H.mask:
            cands: dict[int, None] = {}
            for x in reps:
                if cur.mask >> x & 1:
                    continue
                if not is_prime(_order_mod(G, x, cur.mask)):
                    continue
                cands.setdefault(normal_closure_mask(G, [x], H.gen_indices, start=cur.mask))
            masks = list(cands)
            minimal = [m for m in masks if not any(o != m and o & m == o for o in masks)]
            refs = sorted((G.subgroup_from_mask(m) for m in minimal), key=lambda S: S.fingerprint)
            cur = refs[0]
            terms.append(cur)
        orders = tuple(terms[i + 1].order // terms[i].order for i in range(len(terms) - 1))
        return ChiefSeries(tuple(terms), orders, tuple(is_prime(n) for n in orders))
    return G.memo(("chief", H.mask), compute)
