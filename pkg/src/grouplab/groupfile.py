"""Reading and writing generator files.

Format (UTF-8)::

    # grouplab-gens v1
    degree 6
    gen (1 2 3)
    gen (4 5)          # trailing comments are allowed
    subgroup A         # fixture files only
    gen (1 2 3)
    subgroup B
    gen (4 5)

Generators before the first ``subgroup`` line generate the ambient group.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field

from .errors import CapExceeded, ParseError
from .group import Caps, DEFAULT_CAPS, FiniteGroup
from .perm import format_cycles, parse_cycles

HEADER = "# grouplab-gens v1"
_DEGREE = re.compile(r"^degree\s+(\S+)\s*$")
_GEN = re.compile(r"^gen(\s+)(.*)$")
_SUB = re.compile(r"^subgroup\s+(\S+)\s*$")


@dataclass
class GeneratorFile:
    degree: int
    generators: list = field(default_factory=list)
    subgroups: dict = field(default_factory=dict)  # name -> list of Permutation

    def group(self, caps: Caps | None = None, name: str | None = None) -> FiniteGroup:
        return FiniteGroup(self.generators, degree=self.degree, caps=caps, name=name)


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def parse_generator_text(text: str, caps: Caps | None = None) -> GeneratorFile:
    caps = caps or DEFAULT_CAPS
    lines = text.splitlines()
    if not lines or lines[0].lstrip("﻿").rstrip() != HEADER:
        raise ParseError(f"first line must be {HEADER!r}", line=1, column=1)
    degree = None
    out: GeneratorFile | None = None
    target: list | None = None
    for lineno, raw in enumerate(lines[1:], start=2):
        body = _strip_comment(raw).rstrip()
        if not body.strip():
            continue
        indent = len(body) - len(body.lstrip())
        stripped = body.strip()
        if degree is None:
            m = _DEGREE.match(stripped)
            if not m:
                raise ParseError("expected 'degree <n>'", line=lineno, column=indent + 1)
            try:
                degree = int(m.group(1))
            except ValueError:
                raise ParseError(f"bad degree {m.group(1)!r}", line=lineno,
                                 column=indent + stripped.index(m.group(1)) + 1) from None
            if degree < 1:
                raise ParseError("degree must be positive", line=lineno, column=indent + 8)
            if degree > caps.degree:
                raise CapExceeded("degree", degree, caps.degree)
            out = GeneratorFile(degree)
            target = out.generators
            continue
        m = _GEN.match(stripped)
        if m:
            offset = indent + 3 + len(m.group(1))
            try:
                p = parse_cycles(m.group(2), degree)
            except ParseError as exc:
                col = offset + (exc.column or 1)
                raise ParseError(exc.message, line=lineno, column=col) from None
            target.append(p)
            continue
        m = _SUB.match(stripped)
        if m:
            name = m.group(1)
            if name in out.subgroups:
                raise ParseError(f"subgroup {name} defined twice", line=lineno, column=indent + 1)
            target = out.subgroups[name] = []
            continue
        if _DEGREE.match(stripped):
            raise ParseError("degree given twice", line=lineno, column=indent + 1)
        word = stripped.split()[0]
        raise ParseError(f"unknown directive {word!r}", line=lineno, column=indent + 1)
    if out is None:
        raise ParseError("missing 'degree <n>' line", line=len(lines) + 1, column=1)
    return out


def read_generator_file(path, caps: Caps | None = None) -> GeneratorFile:
    with open(path, encoding="utf-8") as fh:
        return parse_generator_text(fh.read(), caps)


def parse_group_file(path, caps: Caps | None = None) -> FiniteGroup:
    gf = read_generator_file(path, caps)
    name = os.path.splitext(os.path.basename(str(path)))[0]
    return gf.group(caps, name=name)


def parse_fixture_file(path, caps: Caps | None = None):
    """Fixture with ``subgroup A`` and ``subgroup B``; missing factors default to G."""
    from .constructions import FactorizedFixture
    gf = read_generator_file(path, caps)
    name = os.path.splitext(os.path.basename(str(path)))[0]
    G = gf.group(caps, name=name)
    extra = set(gf.subgroups) - {"A", "B"}
    if extra:
        raise ParseError(f"unknown subgroup section(s): {', '.join(sorted(extra))}")
    for key, gens in gf.subgroups.items():
        for g in gens:
            if not G.member(g):
                raise ParseError(f"generator {g} of subgroup {key} is not in the group")
    A = G.subgroup(gf.subgroups["A"]) if "A" in gf.subgroups else G.whole()
    B = G.subgroup(gf.subgroups["B"]) if "B" in gf.subgroups else G.whole()
    fx = FactorizedFixture(G, A, B, name, provenance=f"file {path}")
    fx.check()
    return fx


def format_generators(degree: int, generators, subgroups: dict | None = None,
                      comment: str | None = None) -> str:
    lines = [HEADER, f"degree {degree}"]
    lines.extend(f"gen {format_cycles(g)}" for g in generators)
    for name, gens in (subgroups or {}).items():
        lines.append(f"subgroup {name}")
        lines.extend(f"gen {format_cycles(g)}" for g in gens)
    if comment:
        lines.append("# " + comment.replace("\n", " "))
    return "\n".join(lines) + "\n"


def write_group_file(G: FiniteGroup, path) -> None:
    text = format_generators(G.degree, G.generators, comment=G.name)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def write_fixture_file(fixture, path) -> None:
    G = fixture.G
    text = format_generators(G.degree, G.generators,
                             {"A": fixture.A.generators, "B": fixture.B.generators},
                             comment=fixture.label)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)

