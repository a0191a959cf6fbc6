"""Group-class predicates and the class-size hypothesis checks over A and B."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .group import FiniteGroup, SubgroupRef, as_subgroup
from .numtheory import (is_prime, is_prime_power, is_square_free, p_part, prime_factors,
                        require_prime)
from .perm import Permutation
from . import structure as st


# ------------------------------------------------------------ group classes

def is_soluble(X) -> bool:
    return st.derived_series(X)[-1].is_trivial()


def is_nilpotent(X) -> bool:
    return st.lower_central_series(X)[-1].is_trivial()


def is_abelian(X) -> bool:
    return st.is_abelian(X)


def is_p_group(X, p: int | None = None) -> bool:
    H = as_subgroup(X)
    ps = prime_factors(H.order) if H.order > 1 else []
    if p is None:
        return len(ps) <= 1
    return ps in ([], [p])


def is_p_nilpotent(X, p: int) -> bool:
    """Normal p-complement exists, i.e. O_{p'} has full p'-order."""
    require_prime(p)
    H = as_subgroup(X)
    return st.p_prime_core(H, p).order == H.order // p_part(H.order, p)


def _factor_is_p_or_pprime(n: int, p: int) -> bool:
    return p_part(n, p) in (1, n)


def is_p_soluble(X, p: int) -> bool:
    require_prime(p)
    return all(_factor_is_p_or_pprime(n, p) for n in st.chief_series(X).factor_orders)


def is_supersoluble(X) -> bool:
    return all(is_prime(n) for n in st.chief_series(X).factor_orders)


def is_p_supersoluble(X, p: int) -> bool:
    require_prime(p)
    return all(n % p or n == p for n in st.chief_series(X).factor_orders)


def elementary_abelian_prime(X) -> int | None:
    """The prime p if X is a nontrivial elementary abelian p-group, else None."""
    H = as_subgroup(X)
    if H.order == 1 or not st.is_abelian(H):
        return None
    ps = prime_factors(H.order)
    if len(ps) != 1:
        return None
    orders = H.ambient.element_orders[H.indices]
    return ps[0] if bool(np.all(orders[1:] == ps[0])) else None


def is_elementary_abelian(X) -> bool:
    """Abelian with all non-identity elements of one prime order (trivial counts)."""
    H = as_subgroup(X)
    return H.order == 1 or elementary_abelian_prime(H) is not None


def sylows_elementary_abelian(X) -> bool:
    H = as_subgroup(X)
    if H.order == 1:
        return True
    return all(is_elementary_abelian(st.sylow_subgroup(H, p)) for p in prime_factors(H.order))


# ------------------------------------------------------------ element filters

def _order_of(x) -> int:
    return x.order() if isinstance(x, Permutation) else int(x)


def is_p_regular(x, p: int) -> bool:
    """Order of x (a permutation or an order) not divisible by p."""
    return _order_of(x) % p != 0


def is_p_element(x, p: int) -> bool:
    return p_part(_order_of(x), p) == _order_of(x)


def is_prime_power_order(x) -> bool:
    return is_prime_power(_order_of(x))


# ------------------------------------------------------------ hypotheses

VARIANTS = ("KNOCHE", "THM_A", "THM_B", "THM_C_ALLP", "THM_D_SQFREE", "THM_E_ALLP_REG",
            "COR_SQFREE_ALL", "CW", "ELEM", "PNILP")

NEEDS_PRIME = {"KNOCHE", "THM_A", "THM_B", "CW", "ELEM", "PNILP"}


@dataclass(frozen=True)
class HypothesisVariant:
    """Which elements are scanned and what their class sizes must satisfy.

    ``scope`` is ``"factors"`` (elements of A u B) or ``"group"`` (all of G);
    ``element_filter`` names the element predicate and ``clause`` the size
    condition (``"p2"``: p^2 does not divide, ``"p2_all"``: the same for each
    prime dividing |G| with p-regularity relative to that prime,
    ``"squarefree"``).
    """

    ident: str
    p: int | None = None
    scope: str = "factors"
    element_filter: str = "all"
    clause: str = "p2"
    class_in: str = "G"  # "G" or "P" (Knoche: class sizes inside the p-group itself)
    side_conditions: tuple = ()
    mutual_permutability: bool = False

    @classmethod
    def make(cls, ident: str, p: int | None = None) -> "HypothesisVariant":
        ident = ident.upper()
        if ident not in VARIANTS:
            raise ValueError(f"unknown hypothesis variant {ident!r}")
        if ident in NEEDS_PRIME:
            if p is None:
                raise ValueError(f"{ident} needs a prime")
            require_prime(p)
        else:
            p = None
        table = {
            "KNOCHE": dict(element_filter="all", clause="p2", class_in="P",
                           side_conditions=("p_group",)),
            "THM_A": dict(element_filter="p_regular_prime_power", clause="p2",
                          side_conditions=("gcd",), mutual_permutability=True),
            "THM_B": dict(element_filter="p_regular_prime_power", clause="p2",
                          side_conditions=("p_soluble",), mutual_permutability=True),
            "THM_C_ALLP": dict(element_filter="p_regular_prime_power", clause="p2_all",
                               mutual_permutability=True),
            "THM_D_SQFREE": dict(element_filter="prime_power", clause="squarefree",
                                 side_conditions=("supersoluble",)),
            "THM_E_ALLP_REG": dict(element_filter="p_regular", clause="p2_all",
                                   mutual_permutability=True),
            "COR_SQFREE_ALL": dict(element_filter="all", clause="squarefree",
                                   mutual_permutability=True),
            "CW": dict(scope="group", element_filter="all", clause="p2",
                       side_conditions=("p_divides", "cw_primes")),
            "ELEM": dict(element_filter="p_regular_prime_power", clause="p2",
                         side_conditions=("soluble", "p_nilpotent"), mutual_permutability=True),
            "PNILP": dict(element_filter="p_element", clause="p2",
                          side_conditions=("p_nilpotent",)),
        }
        return cls(ident, p, **table[ident])

    def describe(self) -> str:
        filt = {
            "all": "every x",
            "p_regular_prime_power": "every p-regular x of prime power order",
            "prime_power": "every x of prime power order",
            "p_regular": "every p-regular x",
            "p_element": "every p-element x",
        }[self.element_filter]
        where = "in G" if self.scope == "group" else "in A u B"
        cond = {"p2": "p^2 does not divide |x^%s|" % self.class_in,
                "p2_all": "p^2 does not divide |x^G| for each prime p",
                "squarefree": "|x^G| is square-free"}[self.clause]
        prime = f" (p={self.p})" if self.p else ""
        return f"{self.ident}{prime}: {filt} {where}: {cond}"


@dataclass
class SideCondition:
    name: str
    holds: bool
    detail: str = ""


@dataclass
class HypothesisFailure:
    element: Permutation
    factor: str  # "A", "B", "A,B" or "G"
    class_size: int
    clause: str


@dataclass
class HypothesisOutcome:
    variant: HypothesisVariant
    satisfied: bool
    side_conditions: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    elements_checked: int = 0

    @property
    def failed_side_conditions(self) -> list:
        return [s for s in self.side_conditions if not s.holds]


def _side_condition(name: str, G: FiniteGroup, p: int | None, fixture, exhaustive: bool) -> SideCondition:
    n = G.order
    if name == "gcd":
        g = gcd(p - 1, n)
        return SideCondition("gcd(p-1,|G|)=1", g == 1, f"gcd({p - 1},{n})={g}")
    if name == "p_group":
        ok = is_p_group(G, p)
        return SideCondition("G is a p-group", ok, f"|G|={n}")
    if name == "p_soluble":
        return SideCondition("G is p-soluble", is_p_soluble(G, p))
    if name == "supersoluble":
        return SideCondition("G is supersoluble", is_supersoluble(G))
    if name == "soluble":
        return SideCondition("G is soluble", is_soluble(G))
    if name == "p_nilpotent":
        return SideCondition("G is p-nilpotent", is_p_nilpotent(G, p))
    if name == "p_divides":
        return SideCondition("p divides |G|", n % p == 0, f"|G|={n}")
    if name == "cw_primes":
        bad = [q for q in prime_factors(n)] if n > 1 else []
        bad = [q for q in bad if (p - 1) % q == 0]
        return SideCondition("no prime divisor q of |G| divides p-1", not bad,
                             f"offending primes {bad}" if bad else "")
    if name == "mutually_permutable":
        from .factorization import mutually_permutable
        cert = mutually_permutable(G, fixture.A, fixture.B, exhaustive=exhaustive)
        return SideCondition("A and B mutually permutable", bool(cert.mutually_permutable),
                             "" if cert.mutually_permutable else str(cert.witness))
    raise ValueError(name)  # pragma: no cover


def _filter_mask(orders: np.ndarray, filt: str, p: int | None) -> np.ndarray:
    if filt == "all":
        return np.ones(len(orders), dtype=bool)
    pp = _prime_power_table(int(orders.max()) if len(orders) else 1)[orders]
    if filt == "prime_power":
        return pp
    if filt == "p_regular_prime_power":
        return pp & (orders % p != 0)
    if filt == "p_regular":
        return orders % p != 0
    if filt == "p_element":
        return np.array([p_part(int(o), p) == o for o in orders.tolist()], dtype=bool)
    raise ValueError(filt)  # pragma: no cover


_PP_CACHE: dict = {}


def _prime_power_table(top: int) -> np.ndarray:
    if top not in _PP_CACHE:
        _PP_CACHE[top] = np.array([False] + [is_prime_power(k) for k in range(1, top + 1)])
    return _PP_CACHE[top]


def _sqfree_table(top: int) -> np.ndarray:
    key = ("sq", top)
    if key not in _PP_CACHE:
        _PP_CACHE[key] = np.array([False] + [is_square_free(k) for k in range(1, top + 1)])
    return _PP_CACHE[key]


def scan_elements(fixture, variant: HypothesisVariant,
                  limit: int | None = None) -> tuple[list[HypothesisFailure], int]:
    """Violations of the variant's class-size clause over its element set."""
    G: FiniteGroup = fixture.G
    p = variant.p
    if variant.scope == "group":
        idx = np.arange(G.order)
        in_a = in_b = None
    else:
        in_a = fixture.A.bool_mask
        in_b = fixture.B.bool_mask
        idx = np.flatnonzero(in_a | in_b)
    orders = G.element_orders[idx].astype(np.int64)
    sizes = st.class_size_array(G)[idx]
    checked = 0
    bad_sets = []  # (mask over idx, clause text)
    if variant.clause == "squarefree":
        sel = _filter_mask(orders, variant.element_filter, p)
        checked = int(sel.sum())
        sq = _sqfree_table(int(sizes.max()))[sizes]
        bad_sets.append((sel & ~sq, "class size is not square-free"))
    elif variant.clause == "p2":
        sel = _filter_mask(orders, variant.element_filter, p)
        checked = int(sel.sum())
        bad_sets.append((sel & (sizes % (p * p) == 0), f"{p}^2 divides the class size"))
    else:  # p2_all
        primes = prime_factors(G.order) if G.order > 1 else []
        for q in primes:
            sel = _filter_mask(orders, variant.element_filter, q)
            checked += int(sel.sum())
            bad_sets.append((sel & (sizes % (q * q) == 0), f"{q}^2 divides the class size"))
    failures = []
    for bad, clause in bad_sets:
        for k in np.flatnonzero(bad).tolist():
            i = int(idx[k])
            if in_a is None:
                factor = "G"
            else:
                factor = ",".join(n for n, m in (("A", in_a), ("B", in_b)) if m[i])
            failures.append(HypothesisFailure(G.element(i), factor, int(sizes[k]), clause))
            if limit is not None and len(failures) >= limit:
                return failures, checked
    return failures, checked


def check_hypothesis(fixture, variant: HypothesisVariant | str, p: int | None = None,
                     exhaustive: bool = True, failure_limit: int | None = None) -> HypothesisOutcome:
    """Evaluate side conditions first, then scan the variant's elements.

    Variants taken from mutually permutable theorems include the mutual
    permutability of A and B as a side condition.
    """
    if isinstance(variant, str):
        variant = HypothesisVariant.make(variant, p)
    G = fixture.G
    names = list(variant.side_conditions)
    if variant.mutual_permutability:
        names.append("mutually_permutable")
    sides = [_side_condition(nm, G, variant.p, fixture, exhaustive) for nm in names]
    failures, checked = scan_elements(fixture, variant, failure_limit)
    ok = all(s.holds for s in sides) and not failures
    return HypothesisOutcome(variant, ok, sides, failures, checked)

__all__ = [
    "is_soluble", "is_nilpotent", "is_abelian", "is_p_group", "is_p_nilpotent", "is_p_soluble",
    "is_supersoluble", "is_p_supersoluble", "is_elementary_abelian", "elementary_abelian_prime",
    "sylows_elementary_abelian", "is_p_regular", "is_p_element", "is_prime_power_order",
    "is_square_free", "HypothesisVariant", "HypothesisOutcome", "HypothesisFailure",
    "SideCondition", "check_hypothesis", "scan_elements", "VARIANTS",
]
