"""Deterministic Schreier-Sims.

Each new base point is the smallest point moved by the generator that forces
the extension, so identical generator lists always yield identical chains.
Permutations are handled as 0-based tuples here; the public wrapper types live
in ``perm`` and ``group``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .errors import CapExceeded, DegreeMismatch
from .perm import DEFAULT_DEGREE_CAP, Permutation


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple([q[i] for i in p])


def _inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _is_id(p: tuple) -> bool:
    return all(i == j for i, j in enumerate(p))


@dataclass
class ChainLevel:
    point: int  # 0-based base point
    generators: list[tuple] = field(default_factory=list)
    transversal: dict[int, tuple] = field(default_factory=dict)  # orbit point -> u, u[point] == key

    @property
    def orbit(self) -> list[int]:
        return list(self.transversal)


@dataclass
class StabilizerChain:
    degree: int
    levels: list[ChainLevel]

    @property
    def base(self) -> list[int]:
        """1-based base points."""
        return [lv.point + 1 for lv in self.levels]

    @property
    def order(self) -> int:
        return prod(len(lv.transversal) for lv in self.levels)

    def strong_generators(self, level: int = 0) -> list[Permutation]:
        if level >= len(self.levels):
            return []
        return [Permutation._raw(g) for g in self.levels[level].generators]

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        """Strip ``g`` through the chain; return (residue, level reached)."""
        for k in range(start, len(self.levels)):
            lv = self.levels[k]
            beta = g[lv.point]
            u = lv.transversal.get(beta)
            if u is None:
                return g, k
            g = _mul(g, _inv(u))
        return g, len(self.levels)

    def contains(self, g: tuple) -> bool:
        residue, _ = self.sift(g)
        return _is_id(residue)


def _orbit_transversal(point: int, gens: list[tuple], degree: int) -> dict[int, tuple]:
    ident = tuple(range(degree))
    trans = {point: ident}
    queue = [point]
    for x in queue:
        u = trans[x]
        for s in gens:
            y = s[x]
            if y not in trans:
                trans[y] = _mul(u, s)
                queue.append(y)
    return trans


def _first_moved(g: tuple) -> int:
    for i, j in enumerate(g):
        if i != j:
            return i
    raise ValueError("identity has no moved point")


def build_chain(generators: list[Permutation], degree: int | None = None,
                degree_cap: int = DEFAULT_DEGREE_CAP) -> StabilizerChain:
    if degree is None:
        if not generators:
            raise DegreeMismatch("degree required for an empty generator list")
        degree = generators[0].degree
    if degree > degree_cap:
        raise CapExceeded("degree", degree, degree_cap)
    for g in generators:
        if g.degree != degree:
            raise DegreeMismatch(f"generator degree {g.degree} != {degree}")
    gens = [g.array_form for g in generators if not g.is_identity()]

    levels: list[ChainLevel] = []
    strong: list[tuple] = []

    def fixes_prefix(g: tuple, k: int) -> bool:
        return all(g[levels[j].point] == levels[j].point for j in range(k))

    for g in gens:
        if g in strong:
            continue
        strong.append(g)
        if all(g[lv.point] == lv.point for lv in levels):
            levels.append(ChainLevel(_first_moved(g)))

    checked: list[set] = []

    def refresh(k: int) -> None:
        lv = levels[k]
        checked[k].clear()
        lv.generators = [g for g in strong if fixes_prefix(g, k)]
        lv.transversal = _orbit_transversal(lv.point, lv.generators, degree)

    # checked[k]: (orbit point, generator) pairs whose Schreier generator sifted through.
    checked.extend(set() for _ in levels)
    for k in range(len(levels)):
        refresh(k)
    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        extended_to = None
        for x in list(lv.transversal):
            ux = lv.transversal[x]
            for s in lv.generators:
                key = (x, s)
                if key in checked[i]:
                    continue
                y = s[x]
                h = _mul(_mul(ux, s), _inv(lv.transversal[y]))
                residue = h
                j = i + 1
                if not _is_id(h):
                    chain_view = StabilizerChain(degree, levels)
                    residue, j = chain_view.sift(h, i + 1)
                if _is_id(residue):
                    checked[i].add(key)
                    continue
                if j == len(levels):
                    levels.append(ChainLevel(_first_moved(residue)))
                    checked.append(set())
                strong.append(residue)
                for k in range(i + 1, j + 1):
                    refresh(k)
                extended_to = j
                break
            if extended_to is not None:
                break
        if extended_to is not None:
            i = extended_to
        else:
            i -= 1
    return StabilizerChain(degree, levels)
