"""Permutation groups: generators, stabilizer chain, element space, subgroups.

A :class:`FiniteGroup` is immutable once built; the stabilizer chain, the
sorted element list and the Cayley table are computed on first use and
memoised on the instance.  Subgroups are :class:`SubgroupRef` values that
carry a bitmask over the ambient group's sorted element list, so every
structural computation on a subgroup reuses the ambient Cayley table.
"""

from __future__ import annotations

import hashlib
import threading
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .chain import StabilizerChain, build_chain
from .errors import CapExceeded, DegreeMismatch, NotAPermutation, NotMember
from .perm import DEFAULT_DEGREE_CAP, Permutation


@dataclass(frozen=True)
class Caps:
    degree: int = DEFAULT_DEGREE_CAP
    enumeration: int = 200_000
    lattice: int = 2000
    table: int = 5000


DEFAULT_CAPS = Caps()


def mask_from_bool(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(arr.astype(bool), bitorder="little").tobytes(), "little")


def mask_from_indices(indices: Iterable[int], n: int) -> int:
    arr = np.zeros(n, dtype=bool)
    arr[np.fromiter(indices, dtype=np.int64)] = True
    return mask_from_bool(arr)


def mask_to_bool(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def mask_to_indices(mask: int, n: int) -> np.ndarray:
    return np.flatnonzero(mask_to_bool(mask, n))


class FiniteGroup:
    """Group generated by permutations of a common degree."""

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None,
                 caps: Caps | None = None, name: str | None = None):
        self.caps = caps or DEFAULT_CAPS
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise DegreeMismatch("degree required for a group with no generators")
            degree = gens[0].degree
        if degree > self.caps.degree:
            raise CapExceeded("degree", degree, self.caps.degree)
        for g in gens:
            if not isinstance(g, Permutation):
                raise NotAPermutation(f"{g!r} is not a Permutation")
            if g.degree != degree:
                raise DegreeMismatch(f"generator degree {g.degree} != group degree {degree}")
        self.degree = degree
        self.generators = gens
        self.name = name
        self._lock = threading.RLock()
        self._memo: dict = {}

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<FiniteGroup{label} degree={self.degree} gens={len(self.generators)}>"

    # -- memo helpers -------------------------------------------------
    def memo(self, key, compute):
        """Per-group cache for derived structure (lattice, classes, ...)."""
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    # -- chain level ---------------------------------------------------
    @cached_property
    def chain(self) -> StabilizerChain:
        return build_chain(list(self.generators), self.degree, self.caps.degree)

    @property
    def order(self) -> int:
        return self.chain.order

    def __len__(self) -> int:
        return self.order

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def member(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} != group degree {self.degree}")
        return self.chain.contains(p.array_form)

    __contains__ = member

    def orbit(self, point: int) -> set[int]:
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} outside 1..{self.degree}")
        seen = {point - 1}
        queue = [point - 1]
        imgs = [g.array_form for g in self.generators]
        for x in queue:
            for g in imgs:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return {x + 1 for x in seen}

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    # -- element space -------------------------------------------------
    def _check_enumerable(self) -> None:
        if self.order > self.caps.enumeration:
            raise CapExceeded("group order", self.order, self.caps.enumeration)

    @cached_property
    def element_array(self) -> np.ndarray:
        """(order, degree) array of 0-based images, rows sorted lexicographically."""
        self._check_enumerable()
        d = self.degree
        current = np.arange(d, dtype=np.int32)[None, :]
        for level in reversed(self.chain.levels):
            trans = np.array(list(level.transversal.values()), dtype=np.int32)
            current = trans[:, current].reshape(-1, d)
        order = np.lexsort(current.T[::-1])
        arr = np.ascontiguousarray(current[order])
        arr.setflags(write=False)
        return arr

    @cached_property
    def elements(self) -> list[Permutation]:
        return [Permutation._raw(tuple(row)) for row in self.element_array.tolist()]

    @cached_property
    def _index(self) -> dict[Permutation, int]:
        return {p: i for i, p in enumerate(self.elements)}

    def index(self, p: Permutation) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise NotMember(f"{p} is not an element of {self!r}") from None

    def element(self, i: int) -> Permutation:
        return self.elements[int(i)]

    @cached_property
    def _base_keys(self):
        base = [lv.point for lv in self.chain.levels]
        d = self.degree
        if d ** max(len(base), 1) >= 2 ** 62:
            return None
        radix = np.array([d ** k for k in range(len(base))], dtype=np.int64)
        keys = self.element_array[:, base].astype(np.int64) @ radix
        order = np.argsort(keys)
        return base, radix, keys[order], order

    def _lookup_rows(self, rows: np.ndarray) -> np.ndarray:
        bk = self._base_keys
        if bk is None:
            idx = self._index
            return np.array([idx[Permutation._raw(tuple(r))] for r in rows.tolist()], dtype=np.int32)
        base, radix, sorted_keys, order = bk
        keys = rows[:, base].astype(np.int64) @ radix
        return order[np.searchsorted(sorted_keys, keys)].astype(np.int32)

    @cached_property
    def table(self) -> np.ndarray:
        """Cayley table: ``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        n = self.order
        if n > self.caps.table:
            raise CapExceeded("group order (Cayley table)", n, self.caps.table)
        E = self.element_array
        out = np.empty((n, n), dtype=np.int32)
        bk = self._base_keys
        if bk is None:
            for i in range(n):
                out[i] = self._lookup_rows(E[:, E[i]])
        else:
            base, radix, sorted_keys, order = bk
            for i in range(n):
                keys = E[:, E[i, base]].astype(np.int64) @ radix
                out[i] = order[np.searchsorted(sorted_keys, keys)]
        out.setflags(write=False)
        return out

    @cached_property
    def ktable(self):
        """Cayley table in the form expected by the active kernel backend."""
        return kernels.prepare_table(self.table)

    @cached_property
    def inv(self) -> np.ndarray:
        n = self.order
        E = self.element_array
        inverse_rows = np.empty_like(E)
        inverse_rows[np.arange(n)[:, None], E] = np.arange(self.degree, dtype=np.int32)[None, :]
        out = self._lookup_rows(inverse_rows)
        out.setflags(write=False)
        return out

    @cached_property
    def element_orders(self) -> np.ndarray:
        if self.order <= self.caps.table:
            out = kernels.element_orders(self.ktable)
        else:
            out = np.array([p.order() for p in self.elements], dtype=np.int32)
        out.setflags(write=False)
        return out

    @cached_property
    def gen_indices(self) -> list[int]:
        return [self.index(g) for g in self.generators]

    def conj_map(self, g: int) -> np.ndarray:
        """Index map x -> g^-1 x g over all elements."""
        t = self.table
        return t[t[self.inv[g], :], g]

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    # -- subgroups -----------------------------------------------------
    def whole(self) -> "SubgroupRef":
        return self.memo("whole", lambda: SubgroupRef(self, (1 << self.order) - 1, self.generators))

    def trivial(self) -> "SubgroupRef":
        return self.memo("trivial", lambda: SubgroupRef(self, 1, ()))

    def subgroup(self, generators: Iterable[Permutation]) -> "SubgroupRef":
        gens = tuple(generators)
        idx = [self.index(g) for g in gens]
        return SubgroupRef(self, mask_from_bool(kernels.closure(self.ktable, idx)), gens)

    def subgroup_from_indices(self, gen_indices: Sequence[int]) -> "SubgroupRef":
        gi = [int(i) for i in gen_indices]
        mask = mask_from_bool(kernels.closure(self.ktable, gi))
        return SubgroupRef(self, mask, tuple(self.elements[i] for i in gi))

    def subgroup_from_mask(self, mask: int) -> "SubgroupRef":
        """Wrap a mask known to be a subgroup, choosing a small generating set."""
        return SubgroupRef(self, mask, tuple(self.elements[i] for i in self.generating_indices(mask)))

    def generating_indices(self, mask: int) -> list[int]:
        """Greedy generating set: elements of largest order first, ties by index."""
        if mask == 1:
            return []
        n = self.order
        idx = mask_to_indices(mask, n)
        orders = self.element_orders[idx]
        ranked = idx[np.lexsort((idx, -orders))]
        gens: list[int] = []
        cur = np.zeros(n, dtype=bool)
        cur[0] = True
        count, target = 1, int(mask.bit_count())
        for x in ranked.tolist():
            if cur[x]:
                continue
            gens.append(x)
            cur = kernels.closure(self.ktable, gens, np.flatnonzero(cur)).astype(bool)
            count = int(cur.sum())
            if count == target:
                break
        return gens


class SubgroupRef:
    """A subgroup of ``ambient``, identified by its element bitmask.

    Two refs are equal iff they share an ambient group and an element set,
    which is equivalent to equal fingerprints for the same ambient.
    """

    __slots__ = ("ambient", "mask", "generators", "_cache")

    def __init__(self, ambient: FiniteGroup, mask: int, generators: Sequence[Permutation]):
        self.ambient = ambient
        self.mask = mask
        self.generators = tuple(generators)
        self._cache: dict = {}

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubgroupRef) and other.ambient is self.ambient
                and other.mask == self.mask)

    def __hash__(self) -> int:
        return hash((id(self.ambient), self.mask))

    def __repr__(self) -> str:
        return f"<SubgroupRef order={self.order} of {self.ambient!r}>"

    def _get(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    @property
    def indices(self) -> np.ndarray:
        return self._get("indices", lambda: mask_to_indices(self.mask, self.ambient.order))

    @property
    def bool_mask(self) -> np.ndarray:
        return self._get("bool", lambda: mask_to_bool(self.mask, self.ambient.order))

    @property
    def gen_indices(self) -> list[int]:
        return self._get("gen_indices", lambda: [self.ambient.index(g) for g in self.generators])

    def elements(self) -> list[Permutation]:
        els = self.ambient.elements
        return [els[i] for i in self.indices.tolist()]

    @property
    def fingerprint(self) -> str:
        """Hash of the sorted element list; stable across runs and platforms."""
        def compute():
            rows = self.ambient.element_array[self.indices]
            h = hashlib.blake2b(digest_size=16)
            h.update(str(self.ambient.degree).encode())
            h.update(np.ascontiguousarray(rows, dtype="<i4").tobytes())
            return h.hexdigest()
        return self._get("fingerprint", compute)

    def sort_key(self) -> tuple[int, str]:
        return (self.order, self.fingerprint)

    def contains_index(self, i: int) -> bool:
        return bool(self.mask >> int(i) & 1)

    def __contains__(self, p: Permutation) -> bool:
        try:
            return self.contains_index(self.ambient.index(p))
        except NotMember:
            return False

    def is_subgroup_of(self, other: "SubgroupRef") -> bool:
        return self.mask & other.mask == self.mask

    __le__ = is_subgroup_of

    def __lt__(self, other: "SubgroupRef") -> bool:
        return self.is_subgroup_of(other) and self.mask != other.mask

    def is_trivial(self) -> bool:
        return self.mask == 1

    def is_whole(self) -> bool:
        return self.mask == (1 << self.ambient.order) - 1

    def as_group(self, name: str | None = None) -> FiniteGroup:
        """Standalone FiniteGroup on the same points with this subgroup's generators."""
        return self._get("as_group", lambda: FiniteGroup(
            self.generators, self.ambient.degree, self.ambient.caps, name=name))

    def intersection(self, other: "SubgroupRef") -> "SubgroupRef":
        return self.ambient.subgroup_from_mask(self.mask & other.mask)

    def join(self, other: "SubgroupRef") -> "SubgroupRef":
        G = self.ambient
        gi = self.gen_indices + other.gen_indices
        mask = mask_from_bool(kernels.closure(G.ktable, gi, self.indices))
        return SubgroupRef(G, mask, self.generators + other.generators)


def as_subgroup(X: "FiniteGroup | SubgroupRef") -> SubgroupRef:
    if isinstance(X, SubgroupRef):
        return X
    if isinstance(X, FiniteGroup):
        return X.whole()
    raise TypeError(f"expected FiniteGroup or SubgroupRef, got {type(X).__name__}")


def build_group(generators: Sequence[Permutation], degree: int | None = None, **kw) -> FiniteGroup:
    return FiniteGroup(generators, degree, **kw)


def enumerate_elements(G: FiniteGroup) -> list[Permutation]:
    return list(G.elements)


def member(G: FiniteGroup, p: Permutation) -> bool:
    return G.member(p)


def orbit(G: FiniteGroup, point: int) -> set[int]:
    return G.orbit(point)
