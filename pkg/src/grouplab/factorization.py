"""Products of subgroups: G = AB, permutability and mutual permutability."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import NotASubgroup
from .group import FiniteGroup, SubgroupRef, as_subgroup, mask_from_bool
from .numtheory import is_prime_power, pi_part, prime_factors
from .structure import all_subgroups, conjugates, sylow_subgroup


@dataclass
class FactorizationCertificate:
    A: SubgroupRef
    B: SubgroupRef
    is_product: bool
    mutually_permutable: bool | None = None
    product_size: int = 0
    witness: dict | None = None  # first failure: which factor, offending subgroup

    def summary(self) -> str:
        mp = {True: "mutually permutable", False: "not mutually permutable", None: "unchecked"}
        return (f"|A|={self.A.order} |B|={self.B.order} product={'yes' if self.is_product else 'no'}"
                f" ({mp[self.mutually_permutable]})")


@dataclass
class FactorizationOptions:
    mutually_permutable: bool = True
    proper: bool = True
    include_whole: bool = False
    dedupe_conjugates: bool = False
    exhaustive: bool = True


@dataclass
class HallWitness:
    H: SubgroupRef
    H_cap_A: SubgroupRef
    H_cap_B: SubgroupRef
    pi: frozenset = field(default_factory=frozenset)


def _same_ambient(*subs: SubgroupRef) -> FiniteGroup:
    G = subs[0].ambient
    for S in subs[1:]:
        if S.ambient is not G:
            raise NotASubgroup("subgroups live in different ambient groups")
    return G


def product_size(A: SubgroupRef, B: SubgroupRef) -> int:
    """|AB| = |A||B| / |A n B|."""
    _same_ambient(A, B)
    return A.order * B.order // (A.mask & B.mask).bit_count()


def is_product(G, A: SubgroupRef, B: SubgroupRef) -> bool:
    W = as_subgroup(G)
    _same_ambient(W, A, B)
    if not (A.is_subgroup_of(W) and B.is_subgroup_of(W)):
        raise NotASubgroup("A and B must be subgroups of G")
    return A.order * B.order == W.order * (A.mask & B.mask).bit_count()


def product_set_mask(A: SubgroupRef, B: SubgroupRef) -> int:
    G = _same_ambient(A, B)
    return mask_from_bool(kernels.product_mask(G.ktable, A.indices, B.indices))


def permutes(A: SubgroupRef, H: SubgroupRef, method: str = "join") -> bool:
    """True iff AH = HA.

    The default compares |<A, H>| with |A||H|/|A n H| (AH is a subgroup
    exactly when the two agree); ``method="sets"`` builds both product sets.
    """
    G = _same_ambient(A, H)
    if A.mask & H.mask in (A.mask, H.mask):
        return True
    if method == "sets":
        return product_set_mask(A, H) == product_set_mask(H, A)
    key = ("permutes", A.mask, H.mask) if A.mask < H.mask else ("permutes", H.mask, A.mask)

    def compute():
        size = product_size(A, H)
        if G.order % size:
            return False
        gens = A.gen_indices + H.gen_indices
        return int(kernels.closure(G.ktable, gens, A.indices).sum()) == size
    return G.memo(key, compute)


def cyclic_prime_power_subgroups(S: SubgroupRef) -> list[SubgroupRef]:
    """Distinct cyclic subgroups of prime-power order of S, by first generator index."""
    G = S.ambient

    def compute():
        orders = G.element_orders
        seen: dict[int, SubgroupRef] = {}
        for x in S.indices.tolist():
            if x == 0 or not is_prime_power(int(orders[x])):
                continue
            m = mask_from_bool(kernels.closure(G.ktable, [x]))
            if m not in seen:
                seen[m] = SubgroupRef(G, m, (G.elements[x],))
        return list(seen.values())
    return G.memo(("cyclic_pp", S.mask), compute)


def _test_subgroups(S: SubgroupRef, exhaustive: bool) -> list[SubgroupRef]:
    if exhaustive:
        return all_subgroups(S)
    return cyclic_prime_power_subgroups(S)


def mutually_permutable(G, A: SubgroupRef, B: SubgroupRef,
                        exhaustive: bool = True) -> FactorizationCertificate:
    """Check that A permutes with every subgroup of B and B with every subgroup of A.

    With ``exhaustive=False`` only the cyclic subgroups of prime-power order
    are tested.  That is equivalent: the subgroups permuting with a fixed
    subgroup are closed under joins, and every subgroup is the join of its
    cyclic subgroups of prime-power order.
    """
    W = as_subgroup(G)
    _same_ambient(W, A, B)
    prod = is_product(W, A, B)
    cert = FactorizationCertificate(A, B, prod, product_size=product_size(A, B))
    if not prod:
        cert.witness = {"kind": "product", "deficit": W.order - cert.product_size}
    for X, Y, name in ((A, B, "B"), (B, A, "A")):
        if X.is_whole() or X.mask == W.mask:
            continue
        for H in _test_subgroups(Y, exhaustive):
            if not permutes(X, H):
                cert.mutually_permutable = False
                other = "A" if name == "B" else "B"
                cert.witness = cert.witness or {}
                cert.witness.update({
                    "kind": "permutability",
                    "factor": other,
                    "subgroup_of": name,
                    "subgroup_order": H.order,
                    "subgroup_generators": [str(g) for g in H.generators],
                })
                return cert
    cert.mutually_permutable = True
    return cert


def _conjugation_action(G: FiniteGroup, subs: list[SubgroupRef]) -> list[list[int]]:
    pos = {S.mask: i for i, S in enumerate(subs)}
    out = []
    for g in G.gen_indices:
        cmap = G.conj_map(g)
        row = []
        for S in subs:
            arr = np.zeros(G.order, dtype=bool)
            arr[cmap[S.indices]] = True
            row.append(pos[mask_from_bool(arr)])
        out.append(row)
    return out


def find_factorizations(G: FiniteGroup, options: FactorizationOptions | None = None,
                        **kw) -> list[FactorizationCertificate]:
    """Unordered pairs {A, B} with G = AB, sorted by (|A|, |B|) descending.

    Keyword arguments override fields of ``options``.
    """
    opts = options or FactorizationOptions()
    if kw:
        opts = FactorizationOptions(**{**opts.__dict__, **kw})
    W = G.whole()
    subs = all_subgroups(G)
    n = G.order
    full = W.mask
    masks = [S.mask for S in subs]
    orders = [S.order for S in subs]
    pairs = []
    for j in range(len(subs)):
        if opts.proper and masks[j] == full:
            continue
        for i in range(j + 1):
            if opts.proper and masks[i] == full:
                continue
            if masks[i] == full and masks[j] == full and not opts.include_whole:
                continue
            if orders[i] * orders[j] != n * (masks[i] & masks[j]).bit_count():
                continue
            pairs.append((j, i))
    if opts.dedupe_conjugates and pairs:
        action = _conjugation_action(G, subs)
        seen: set = set()
        reps = []
        for pr in pairs:
            key = (max(pr), min(pr))
            if key in seen:
                continue
            reps.append(pr)
            seen.add(key)
            queue = [key]
            for a, b in queue:
                for row in action:
                    img = (max(row[a], row[b]), min(row[a], row[b]))
                    if img not in seen:
                        seen.add(img)
                        queue.append(img)
        pairs = reps
    out = []
    for j, i in pairs:
        A, B = subs[j], subs[i]
        if opts.mutually_permutable:
            cert = mutually_permutable(W, A, B, exhaustive=opts.exhaustive)
            if not cert.mutually_permutable:
                continue
        else:
            cert = FactorizationCertificate(A, B, True, None, product_size(A, B))
        out.append(cert)
    out.sort(key=lambda c: (-c.A.order, -c.B.order, c.A.fingerprint, c.B.fingerprint))
    return out


def find_mp_factorizations(G: FiniteGroup, options: FactorizationOptions | None = None,
                           **kw) -> list[FactorizationCertificate]:
    kw.setdefault("mutually_permutable", True)
    return find_factorizations(G, options, **kw)


def hall_candidates(G, pi) -> list[SubgroupRef]:
    W = as_subgroup(G)
    primes = sorted(set(pi) & set(prime_factors(W.order))) if W.order > 1 else []
    target = pi_part(W.order, primes)
    if target == W.order:
        return [W]
    if target == 1:
        return [W.ambient.trivial()]
    if len(primes) == 1:
        return sorted(conjugates(W, sylow_subgroup(W, primes[0])), key=SubgroupRef.sort_key)
    return [S for S in all_subgroups(W) if S.order == target]


def hall_factorization(G, A: SubgroupRef, B: SubgroupRef, pi) -> HallWitness | None:
    """A Hall pi-subgroup H with H = (H n A)(H n B) and both intersections Hall in A, B."""
    W = as_subgroup(G)
    Gamb = _same_ambient(W, A, B)
    pi = frozenset(pi)
    a_target, b_target = pi_part(A.order, pi), pi_part(B.order, pi)
    for H in hall_candidates(W, pi):
        ha, hb = H.mask & A.mask, H.mask & B.mask
        na, nb = ha.bit_count(), hb.bit_count()
        if na != a_target or nb != b_target:
            continue
        if na * nb != H.order * (ha & hb).bit_count():
            continue
        return HallWitness(H, Gamb.subgroup_from_mask(ha), Gamb.subgroup_from_mask(hb), pi)
    return None


__all__ = [
    "FactorizationCertificate", "FactorizationOptions", "HallWitness", "product_size",
    "is_product", "product_set_mask", "permutes", "cyclic_prime_power_subgroups",
    "mutually_permutable", "find_factorizations", "find_mp_factorizations",
    "hall_candidates", "hall_factorization",
]
