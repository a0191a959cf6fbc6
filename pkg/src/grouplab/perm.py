"""Permutations on {1..n} with a right-action product.

Points are 1-based at the API surface (cycle notation, ``p(x)``); images are
stored 0-based internally.  The product ``p * q`` applies ``p`` first, then
``q``: ``(p * q)(x) == q(p(x))``.
"""

from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Sequence

from .errors import DegreeMismatch, NotAPermutation, ParseError

DEFAULT_DEGREE_CAP = 4096


class Permutation:
    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int], *, zero_based: bool = False):
        if zero_based:
            img = tuple(images)
        else:
            img = tuple(i - 1 for i in images)
        n = len(img)
        if n == 0:
            raise NotAPermutation("degree must be positive")
        if sorted(img) != list(range(n)):
            raise NotAPermutation(f"images {tuple(i + 1 for i in img)} are not a bijection on 1..{n}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        p = object.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise NotAPermutation("degree must be positive")
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise NotAPermutation(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise NotAPermutation(f"point {pt} repeated")
                seen.add(pt)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image sequence."""
        return tuple(i + 1 for i in self._img)

    @property
    def array_form(self) -> tuple[int, ...]:
        """0-based image tuple."""
        return self._img

    def __call__(self, point: int) -> int:
        if not 1 <= point <= len(self._img):
            raise ValueError(f"point {point} outside 1..{len(self._img)}")
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other._img) != len(self._img):
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")
        q = other._img
        return Permutation._raw(tuple([q[i] for i in self._img]))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, j in enumerate(self._img):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    __invert__ = inverse

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """Return ``g^-1 * self * g``."""
        return g.inverse() * self * g

    def commutator(self, other: "Permutation") -> "Permutation":
        """Return ``[self, other] = self^-1 other^-1 self other``."""
        return self.inverse() * other.inverse() * self * other

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * len(self._img)
        out = []
        for start in range(len(self._img)):
            if seen[start] or self._img[start] == start:
                continue
            cyc = [start + 1]
            seen[start] = True
            j = self._img[start]
            while j != start:
                seen[j] = True
                cyc.append(j + 1)
                j = self._img[j]
            out.append(tuple(cyc))
        return out

    def cycle_lengths(self) -> list[int]:
        seen = [False] * len(self._img)
        out = []
        for start in range(len(self._img)):
            if seen[start]:
                continue
            n = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self._img[j]
                n += 1
            out.append(n)
        return out

    def order(self) -> int:
        return reduce(math.lcm, self.cycle_lengths(), 1)

    def support(self) -> list[int]:
        return [i + 1 for i, j in enumerate(self._img) if i != j]

    def extend(self, degree: int, offset: int = 0) -> "Permutation":
        """Embed into Sym(degree), shifting every point by ``offset``."""
        if offset + len(self._img) > degree:
            raise DegreeMismatch("target degree too small")
        img = list(range(degree))
        for i, j in enumerate(self._img):
            img[i + offset] = j + offset
        return Permutation._raw(tuple(img))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __le__(self, other: "Permutation") -> bool:
        return self._img <= other._img

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    return p * q


def perm_order(p: Permutation) -> int:
    return p.order()


def format_cycles(p: Permutation) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(,)|(\S))")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation such as ``(1 2 3)(4 5)``; ``()`` is the identity.

    Points inside a cycle may be separated by whitespace or commas.  Raises
    ParseError with a 1-based column on malformed input.
    """
    cycles: list[list[int]] = []
    current: list[int] | None = None
    seen: dict[int, int] = {}
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        col = m.start(m.lastindex) + 1
        opening, closing, number, comma, junk = m.groups()
        if opening:
            if current is not None:
                raise ParseError("nested '('", column=col)
            current = []
        elif closing:
            if current is None:
                raise ParseError("unmatched ')'", column=col)
            if current:
                cycles.append(current)
            current = None
        elif number:
            if current is None:
                raise ParseError("point outside a cycle", column=col)
            pt = int(number)
            if pt < 1:
                raise ParseError("points are 1-based", column=col)
            if pt in seen:
                raise ParseError(f"repeated point {pt}", column=col)
            seen[pt] = col
            current.append(pt)
        elif comma:
            if current is None:
                raise ParseError("unexpected ','", column=col)
        else:
            raise ParseError(f"unexpected character {junk!r}", column=col)
        pos = m.end()
    if current is not None:
        raise ParseError("unterminated cycle", column=len(text) + 1)
    if not text.strip():
        raise ParseError("empty permutation text", column=1)
    top = max(seen, default=1)
    if degree is None:
        degree = top
    elif top > degree:
        raise ParseError(f"point {top} exceeds degree {degree}", column=seen[top])
    return Permutation.from_cycles(cycles, degree)
