"""Permutation groups, factorised groups G = AB and class-size theorem checkers."""

from .errors import (CapExceeded, DegreeMismatch, GroupLabError, NotAPermutation, NotASubgroup,
                     NotMember, NotNormal, ParseError, SpecError)
from .perm import Permutation, format_cycles, parse_cycles
from .group import Caps, FiniteGroup, SubgroupRef
from .constructions import FactorizedFixture, GroupSpec, builtin_example, construct
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CapExceeded", "Caps", "DegreeMismatch", "FactorizedFixture", "FiniteGroup",
    "GroupLabError", "GroupSpec", "NotAPermutation", "NotASubgroup", "NotMember", "NotNormal",
    "ParseError", "Permutation", "SpecError", "SubgroupRef", "builtin_example", "construct",
    "format_cycles", "parse_cycles", "__version__",
]
