"""Named groups, products, bundled factorised fixtures and the sweep catalog."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import CapExceeded, SpecError
from .group import Caps, DEFAULT_CAPS, FiniteGroup, SubgroupRef, mask_from_indices
from .perm import Permutation

KINDS = ("cyclic", "dihedral", "dicyclic", "symmetric", "alternating", "metacyclic",
         "direct", "semidirect", "file", "builtin")


@dataclass(frozen=True)
class GroupSpec:
    """Declarative description of a group.

    ``param`` holds the integer parameters of the simple kinds; for
    ``dihedral`` and ``dicyclic`` the parameter is the group order.
    ``metacyclic`` takes ``(m, n, r)`` and builds ``[C_m]C_n`` with the
    generator of ``C_n`` acting as ``a -> a^r``.
    """

    kind: str
    param: tuple = ()
    factors: tuple = ()
    action: tuple = ()  # semidirect: per acting generator, images of the normal generators
    path: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecError(f"unknown group kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``kind:p1,p2`` tokens joined by ``x`` into a spec.

        ``"dihedral:14 x metacyclic:7,3,2"`` is the direct product of D14 and
        [C7]C3; ``"builtin:sg300_25"`` and ``"file:path"`` are accepted too.
        """
        parts = [t.strip() for t in re.split(r"\s+x\s+", text.strip()) if t.strip()]
        if not parts:
            raise SpecError("empty group spec")
        specs = [cls._parse_one(t) for t in parts]
        return specs[0] if len(specs) == 1 else cls("direct", factors=tuple(specs))

    @classmethod
    def _parse_one(cls, token: str) -> "GroupSpec":
        kind, _, rest = token.partition(":")
        kind = kind.strip().lower()
        aliases = {"c": "cyclic", "d": "dihedral", "dic": "dicyclic", "q": "dicyclic",
                   "quaternion": "dicyclic", "sym": "symmetric", "s": "symmetric",
                   "alt": "alternating", "a": "alternating"}
        kind = aliases.get(kind, kind)
        if kind == "file":
            return cls("file", path=rest.strip())
        if kind == "builtin":
            return cls("builtin", path=rest.strip())
        try:
            param = tuple(int(v) for v in rest.split(",") if v.strip())
        except ValueError as exc:
            raise SpecError(f"bad parameters in {token!r}") from exc
        return cls.simple(kind, *param)

    @classmethod
    def simple(cls, kind: str, *param: int) -> "GroupSpec":
        spec = cls(kind, tuple(param))
        spec.closed_form_order()  # validates parameters
        return spec

    def closed_form_order(self) -> int:
        k, p = self.kind, self.param
        need = {"cyclic": 1, "dihedral": 1, "dicyclic": 1, "symmetric": 1,
                "alternating": 1, "metacyclic": 3}
        if k in need and len(p) != need[k]:
            raise SpecError(f"{k} takes {need[k]} integer parameter(s)")
        if k in need and any(v < 1 for v in p):
            raise SpecError(f"{k} parameters must be positive")
        if k == "cyclic":
            return p[0]
        if k == "dihedral":
            if p[0] % 2:
                raise SpecError("dihedral order must be even")
            return p[0]
        if k == "dicyclic":
            if p[0] % 4:
                raise SpecError("dicyclic order must be a multiple of 4")
            return p[0]
        if k == "symmetric":
            return math.factorial(p[0])
        if k == "alternating":
            return max(1, math.factorial(p[0]) // 2)
        if k == "metacyclic":
            m, n, r = p
            if math.gcd(r, m) != 1 or pow(r, n, m) != 1 % m:
                raise SpecError("metacyclic needs gcd(r, m) = 1 and r^n = 1 mod m")
            return m * n
        if k == "direct":
            return math.prod(f.closed_form_order() for f in self.factors)
        if k == "semidirect":
            return self.factors[0].closed_form_order() * self.factors[1].closed_form_order()
        if k == "builtin":
            if self.path in BUILTIN_ORDERS:
                return BUILTIN_ORDERS[self.path]
            return builtin_example(self.path).G.order
        if k == "file":
            from .groupfile import parse_group_file
            return parse_group_file(self.path).order
        raise SpecError(f"no closed form for {k}")  # pragma: no cover

    def label(self) -> str:
        k, p = self.kind, self.param
        if k == "cyclic":
            return f"C{p[0]}"
        if k == "dihedral":
            return f"D{p[0]}"
        if k == "dicyclic":
            return "Q8" if p[0] == 8 else f"Dic{p[0]}"
        if k == "symmetric":
            return f"Sym({p[0]})"
        if k == "alternating":
            return f"Alt({p[0]})"
        if k == "metacyclic":
            return f"[C{p[0]}]C{p[1]}"
        if k == "direct":
            return " x ".join(f.label() for f in self.factors)
        if k == "semidirect":
            return f"[{self.factors[0].label()}]({self.factors[1].label()})"
        return f"{k}:{self.path}"

    def to_text(self) -> str:
        """Inverse of :meth:`parse` for the kinds it accepts."""
        if self.kind == "direct":
            return " x ".join(f.to_text() for f in self.factors)
        if self.kind in ("file", "builtin"):
            return f"{self.kind}:{self.path}"
        if self.kind == "semidirect":
            raise SpecError("semidirect specs have no text form")
        return f"{self.kind}:{','.join(map(str, self.param))}"


@dataclass
class Product:
    """A product group with its two factors as subgroups and the embeddings."""

    group: FiniteGroup
    left: SubgroupRef
    right: SubgroupRef
    embed_left: Callable[[Permutation], Permutation]
    embed_right: Callable[[Permutation], Permutation]


@dataclass
class FactorizedFixture:
    G: FiniteGroup
    A: SubgroupRef
    B: SubgroupRef
    label: str
    provenance: str = ""
    notes: dict = field(default_factory=dict)

    def check(self) -> None:
        """Raise SpecError unless G = AB."""
        if self.A.ambient is not self.G or self.B.ambient is not self.G:
            raise SpecError(f"{self.label}: factors do not live in G")
        inter = (self.A.mask & self.B.mask).bit_count()
        if self.A.order * self.B.order != self.G.order * inter:
            raise SpecError(f"{self.label}: G is not the product AB")


# ------------------------------------------------------------ simple kinds

def _perm(images0: Sequence[int]) -> Permutation:
    return Permutation(list(images0), zero_based=True)


def cyclic(n: int, caps: Caps | None = None) -> FiniteGroup:
    if n < 1:
        raise SpecError("cyclic order must be positive")
    if n == 1:
        return FiniteGroup([], degree=1, caps=caps, name="C1")
    return FiniteGroup([_perm([(i + 1) % n for i in range(n)])], caps=caps, name=f"C{n}")


def dihedral(order: int, caps: Caps | None = None) -> FiniteGroup:
    """Dihedral group of the given ORDER (D8 has order 8)."""
    if order < 2 or order % 2:
        raise SpecError("dihedral order must be even and at least 2")
    n = order // 2
    name = f"D{order}"
    if n == 1:
        return FiniteGroup([_perm([1, 0])], caps=caps, name=name)
    if n == 2:
        return FiniteGroup([_perm([1, 0, 2, 3]), _perm([0, 1, 3, 2])], caps=caps, name=name)
    rot = _perm([(i + 1) % n for i in range(n)])
    ref = _perm([(-i) % n for i in range(n)])
    return FiniteGroup([rot, ref], caps=caps, name=name)


def dicyclic(order: int, caps: Caps | None = None) -> FiniteGroup:
    """Dicyclic group of order 4n in its regular representation (Q8 for n = 2).

    Elements are ``a^k x^e`` with ``a^(2n) = 1``, ``x^2 = a^n`` and
    ``x^-1 a x = a^-1``; point ``k + 2n*e`` stands for ``a^k x^e``.
    """
    if order < 4 or order % 4:
        raise SpecError("dicyclic order must be a positive multiple of 4")
    n = order // 4
    m = 2 * n

    def mul(u, v):
        (k, e), (l, f) = u, v
        if e == 0:
            return ((k + l) % m, f)
        if f == 0:
            return ((k - l) % m, 1)
        return ((k - l + n) % m, 0)

    pts = [(k, e) for e in (0, 1) for k in range(m)]
    pos = {u: i for i, u in enumerate(pts)}
    gens = [_perm([pos[mul(u, g)] for u in pts]) for g in ((1, 0), (0, 1))]
    return FiniteGroup(gens, caps=caps, name="Q8" if order == 8 else f"Dic{order}")


def quaternion(caps: Caps | None = None) -> FiniteGroup:
    return dicyclic(8, caps)


def symmetric(n: int, caps: Caps | None = None) -> FiniteGroup:
    if n < 1:
        raise SpecError("degree must be positive")
    name = f"Sym({n})"
    if n == 1:
        return FiniteGroup([], degree=1, caps=caps, name=name)
    if n == 2:
        return FiniteGroup([_perm([1, 0])], caps=caps, name=name)
    cyc = _perm([(i + 1) % n for i in range(n)])
    tr = _perm([1, 0] + list(range(2, n)))
    return FiniteGroup([cyc, tr], caps=caps, name=name)


def alternating(n: int, caps: Caps | None = None) -> FiniteGroup:
    if n < 1:
        raise SpecError("degree must be positive")
    name = f"Alt({n})"
    if n <= 2:
        return FiniteGroup([], degree=n, caps=caps, name=name)
    three = _perm([1, 2, 0] + list(range(3, n)))
    if n == 3:
        return FiniteGroup([three], caps=caps, name=name)
    if n % 2:
        long = _perm([(i + 1) % n for i in range(n)])
    else:
        long = _perm([0] + [(i % (n - 1)) + 1 for i in range(1, n)])
    return FiniteGroup([three, long], caps=caps, name=name)


# ------------------------------------------------------------ products

def direct_product(G: FiniteGroup, H: FiniteGroup, caps: Caps | None = None) -> Product:
    caps = caps or G.caps
    d1, d2 = G.degree, H.degree
    degree = d1 + d2
    if degree > caps.degree:
        raise CapExceeded("degree", degree, caps.degree)

    def left(p: Permutation) -> Permutation:
        return p.extend(degree, 0)

    def right(p: Permutation) -> Permutation:
        return p.extend(degree, d1)

    gl = [left(g) for g in G.generators]
    gr = [right(h) for h in H.generators]
    name = f"{G.name} x {H.name}" if G.name and H.name else None
    P = FiniteGroup(gl + gr, degree=degree, caps=caps, name=name)
    return Product(P, P.subgroup(gl), P.subgroup(gr), left, right)


def direct_product_many(groups: Sequence[FiniteGroup], caps: Caps | None = None) -> FiniteGroup:
    out = groups[0]
    for H in groups[1:]:
        out = direct_product(out, H, caps).group
    return out


def _extend_automorphism(N: FiniteGroup, images: Sequence[Permutation]) -> list[int]:
    """Element-index map of the automorphism sending N.generators[k] to images[k]."""
    if len(images) != len(N.generators):
        raise SpecError("action table must give one image per generator of N")
    img_idx = []
    for im in images:
        if im.degree != N.degree or not N.member(im):
            raise SpecError(f"action image {im} is not an element of N")
        img_idx.append(N.index(im))
    gen_idx = N.gen_indices
    t = N.table
    amap = [-1] * N.order
    amap[0] = 0
    queue = [0]
    for m in queue:
        am = amap[m]
        for g, ig in zip(gen_idx, img_idx):
            mg = int(t[m, g])
            target = int(t[am, ig])
            if amap[mg] < 0:
                amap[mg] = target
                queue.append(mg)
            elif amap[mg] != target:
                raise SpecError("action is not a homomorphism of N")
    if len(set(amap)) != N.order:
        raise SpecError("action is not bijective on N")
    return amap


def semidirect_product(N: FiniteGroup, H: FiniteGroup, action, caps: Caps | None = None) -> Product:
    """``N`` extended by ``H`` acting through ``action``.

    ``action`` maps each generator of ``H`` (by position, or by the
    permutation itself when a dict is given) to the list of images of
    ``N.generators``.  Conjugating by the embedded ``h`` applies that
    automorphism.  The result acts on the regular ``N``-set followed by the
    points of ``H``.
    """
    caps = caps or N.caps
    if isinstance(action, dict):
        tables = [action[h] for h in H.generators]
    else:
        tables = list(action)
    if len(tables) != len(H.generators):
        raise SpecError("one action table per generator of H is required")
    n = N.order
    degree = n + H.degree
    if degree > caps.degree:
        raise CapExceeded("degree", degree, caps.degree)
    t = N.table
    rho = [Permutation._raw(tuple(int(v) for v in t[:, g]) + tuple(range(n, degree)))
           for g in N.gen_indices]
    shift = [Permutation._raw(tuple(range(n)) + tuple(x + n for x in h.array_form))
             for h in H.generators]
    acting = []
    for h, tab in zip(shift, tables):
        amap = _extend_automorphism(N, tab)
        acting.append(Permutation._raw(tuple(amap) + h.array_form[n:]))
    name = f"[{N.name}]({H.name})" if N.name and H.name else None
    G = FiniteGroup(rho + acting, degree=degree, caps=caps, name=name)
    if G.order != n * H.order:
        raise SpecError("action does not respect the relations of H")
    index = N._index

    def embed_n(x: Permutation) -> Permutation:
        return rho_of(index[x])

    def rho_of(i: int) -> Permutation:
        return Permutation._raw(tuple(int(v) for v in t[:, i]) + tuple(range(n, degree)))

    amaps = {h: a for h, a in zip(H.generators, acting)}

    def embed_h(x: Permutation) -> Permutation:
        # express x as a word through H's chain-free element closure
        return _word_image(H, x, amaps, degree)

    return Product(G, G.subgroup(rho), G.subgroup(acting), embed_n, embed_h)


def _word_image(H: FiniteGroup, x: Permutation, images: dict, degree: int) -> Permutation:
    """Image of ``x`` under the homomorphism fixed on H.generators by ``images``."""
    if x.is_identity():
        return Permutation.identity(degree)
    t = H.table
    target = H.index(x)
    prev = {0: None}
    queue = [0]
    gi = H.gen_indices
    for m in queue:
        for k, g in enumerate(gi):
            y = int(t[m, g])
            if y not in prev:
                prev[y] = (m, k)
                queue.append(y)
        if target in prev:
            break
    word = []
    cur = target
    while prev[cur] is not None:
        cur, k = prev[cur]
        word.append(k)
    out = Permutation.identity(degree)
    for k in reversed(word):
        out = out * images[H.generators[k]]
    return out


def metacyclic(m: int, n: int, r: int, caps: Caps | None = None) -> FiniteGroup:
    """[C_m]C_n with the generator of C_n acting by a -> a^r."""
    GroupSpec.simple("metacyclic", m, n, r)
    Cm, Cn = cyclic(m, caps), cyclic(n, caps)
    if m == 1:
        return Cn
    a = Cm.generators[0]
    if n == 1:
        return Cm
    G = semidirect_product(Cm, Cn, [[a ** r]], caps).group
    G.name = f"[C{m}]C{n}"
    return G


# ------------------------------------------------------------ spec dispatcher

def construct(spec: GroupSpec | str, caps: Caps | None = None) -> FiniteGroup:
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    k, p = spec.kind, spec.param
    if k in ("cyclic", "dihedral", "dicyclic", "symmetric", "alternating", "metacyclic"):
        order = spec.closed_form_order()
        cap = (caps or DEFAULT_CAPS).enumeration
        if order > cap:
            raise CapExceeded("group order", order, cap)
    if k == "cyclic":
        return cyclic(p[0], caps)
    if k == "dihedral":
        return dihedral(p[0], caps)
    if k == "dicyclic":
        return dicyclic(p[0], caps)
    if k == "symmetric":
        return symmetric(p[0], caps)
    if k == "alternating":
        return alternating(p[0], caps)
    if k == "metacyclic":
        return metacyclic(*p, caps=caps)
    if k == "direct":
        if not spec.factors:
            raise SpecError("direct product needs at least one factor")
        return direct_product_many([construct(f, caps) for f in spec.factors], caps)
    if k == "semidirect":
        N, H = (construct(f, caps) for f in spec.factors)
        return semidirect_product(N, H, spec.action, caps).group
    if k == "file":
        from .groupfile import parse_group_file
        return parse_group_file(spec.path, caps=caps)
    if k == "builtin":
        return builtin_example(spec.path).G
    raise SpecError(f"cannot construct {k}")  # pragma: no cover


# ------------------------------------------------------------ fixtures

def _fixture_from_product(prod: Product, label: str, provenance: str) -> FactorizedFixture:
    fx = FactorizedFixture(prod.group, prod.left, prod.right, label, provenance)
    prod.group.name = label
    fx.check()
    return fx


def _q8_x_d8(caps) -> FactorizedFixture:
    return _fixture_from_product(direct_product(quaternion(caps), dihedral(8, caps)),
                                 "q8_x_d8", "Q8 x D8, direct factors")


def _sg32_35(caps) -> FactorizedFixture:
    # C4 = <c> extended by Q8 = <i, j>: i centralises c and j inverts it
    C4 = cyclic(4, caps)
    Q8 = quaternion(caps)
    c = C4.generators[0]
    prod = semidirect_product(C4, Q8, [[c], [c ** 3]], caps)
    fx = _fixture_from_product(prod, "sg32_35", "C4 extended by Q8 (32#35)")
    fx.notes["quaternion_factor"] = "B"
    return fx


_SG300_MATRICES = {
    # row-vector action on C5 x C5 = <e1, e2>; images of (1 2 3), (1 2), (4 5)
    "c": ((2, 1), (3, 2)),
    "t": ((4, 0), (0, 1)),
    "z": ((4, 0), (0, 4)),
}


def _sg300_25(caps) -> FactorizedFixture:
    N = direct_product(cyclic(5, caps), cyclic(5, caps)).group
    e1, e2 = N.generators
    H = FiniteGroup([Permutation.from_cycles([(1, 2, 3)], 5), Permutation.from_cycles([(1, 2)], 5),
                     Permutation.from_cycles([(4, 5)], 5)], caps=caps, name="Sym(3) x C2")

    def table(mat):
        return [(e1 ** row[0]) * (e2 ** row[1]) for row in mat]

    action = [table(_SG300_MATRICES[k]) for k in ("c", "t", "z")]
    prod = semidirect_product(N, H, action, caps)
    G = prod.group
    rho = list(prod.left.generators)
    c_el, t_el, z_el = prod.right.generators
    A = G.subgroup(rho + [t_el, z_el])
    B = G.subgroup(rho + [c_el])
    fx = FactorizedFixture(G, A, B, "sg300_25",
                           "[C5 x C5](Sym(3) x C2) (300#25); A = D10 x D10, B = [C5 x C5]C3")
    G.name = "sg300_25"
    fx.check()
    return fx


def _s4_a4_sylow2(caps) -> FactorizedFixture:
    from .structure import sylow_subgroup
    G = symmetric(4, caps)
    G.name = "s4_a4_sylow2"
    A = G.subgroup(alternating(4).generators)
    B = sylow_subgroup(G, 2)
    fx = FactorizedFixture(G, A, B, "s4_a4_sylow2", "Sym(4) = Alt(4) * Sylow 2-subgroup")
    fx.check()
    return fx


def _s3_x_s3(caps) -> FactorizedFixture:
    return _fixture_from_product(direct_product(symmetric(3, caps), symmetric(3, caps)),
                                 "s3_x_s3", "Sym(3) x Sym(3), direct factors")


def _d14_x_294_9(caps) -> FactorizedFixture:
    B = direct_product(dihedral(14, caps), metacyclic(7, 3, 2, caps)).group
    return _fixture_from_product(direct_product(dihedral(14, caps), B),
                                 "d14_x_294_9", "D14 x (D14 x [C7]C3), the latter is 294#9")


def _d8_x_c5c4(caps) -> FactorizedFixture:
    return _fixture_from_product(direct_product(dihedral(8, caps), metacyclic(5, 4, 4, caps)),
                                 "d8_x_c5c4", "D8 x [C5]C4")


def _s3_x_s3xd10(caps) -> FactorizedFixture:
    B = direct_product(symmetric(3, caps), dihedral(10, caps)).group
    return _fixture_from_product(direct_product(symmetric(3, caps), B),
                                 "s3_x_s3xd10", "Sym(3) x (Sym(3) x D10)")


def _alt5(caps) -> FactorizedFixture:
    G = alternating(5, caps)
    G.name = "alt5"
    return FactorizedFixture(G, G.whole(), G.whole(), "alt5", "Alt(5) with A = B = G")


def dihedral_chain(primes: Sequence[int], caps: Caps | None = None) -> FactorizedFixture:
    """D_{2p1} x (D_{2p2} x ... x D_{2pn}) with A the first factor."""
    primes = list(primes)
    if len(primes) < 2:
        raise SpecError("dihedral_chain needs at least two primes")
    if len(set(primes)) != len(primes):
        raise SpecError("dihedral_chain primes must be distinct")
    rest = direct_product_many([dihedral(2 * p, caps) for p in primes[1:]], caps)
    label = "dihedral_chain(" + ",".join(map(str, primes)) + ")"
    return _fixture_from_product(direct_product(dihedral(2 * primes[0], caps), rest), label,
                                 "direct product of dihedral groups of order 2p")


BUILTIN_ORDERS = {
    "q8_x_d8": 64, "sg32_35": 32, "sg300_25": 300, "s4_a4_sylow2": 24, "s3_x_s3": 36,
    "d14_x_294_9": 4116, "d8_x_c5c4": 160, "s3_x_s3xd10": 360, "alt5": 60,
    "dihedral_chain(3,5,7)": 840,
}

BUILTIN_IDS = ("q8_x_d8", "sg32_35", "sg300_25", "s4_a4_sylow2", "s3_x_s3", "d14_x_294_9",
               "d8_x_c5c4", "s3_x_s3xd10", "alt5", "dihedral_chain(3,5,7)")

_BUILDERS = {
    "q8_x_d8": _q8_x_d8,
    "sg32_35": _sg32_35,
    "sg300_25": _sg300_25,
    "s4_a4_sylow2": _s4_a4_sylow2,
    "s3_x_s3": _s3_x_s3,
    "d14_x_294_9": _d14_x_294_9,
    "d8_x_c5c4": _d8_x_c5c4,
    "s3_x_s3xd10": _s3_x_s3xd10,
    "alt5": _alt5,
}

_CHAIN_RE = re.compile(r"^dihedral_chain\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)$")


def builtin_example(ident: str, caps: Caps | None = None) -> FactorizedFixture:
    ident = ident.strip()
    if ident in _BUILDERS:
        return _BUILDERS[ident](caps)
    m = _CHAIN_RE.match(ident)
    if m:
        return dihedral_chain([int(v) for v in m.group(1).split(",")], caps)
    raise SpecError(f"unknown builtin example {ident!r}; known: {', '.join(BUILTIN_IDS)}")


def fixture_from_group(G: FiniteGroup, label: str | None = None) -> FactorizedFixture:
    return FactorizedFixture(G, G.whole(), G.whole(), label or G.name or "group")


# ------------------------------------------------------------ sweep catalog

@dataclass(frozen=True)
class CatalogEntry:
    label: str
    spec: GroupSpec
    order: int

    def build(self, caps: Caps | None = None) -> FiniteGroup:
        G = construct(self.spec, caps)
        G.name = self.label
        return G


def base_pool(max_order: int = 100) -> list[GroupSpec]:
    """Cyclic, dihedral, dicyclic groups up to max_order plus Sym/Alt up to degree 5."""
    pool: list[GroupSpec] = []
    for n in range(1, max_order + 1):
        pool.append(GroupSpec.simple("cyclic", n))
    for n in range(6, max_order + 1, 2):  # orders 2 and 4 are C2 and C2 x C2
        pool.append(GroupSpec.simple("dihedral", n))
    pool.append(GroupSpec.simple("dihedral", 4))
    for n in range(8, max_order + 1, 4):  # order 4 is C4
        pool.append(GroupSpec.simple("dicyclic", n))
    for d in range(3, 6):
        for kind in ("symmetric", "alternating"):
            s = GroupSpec.simple(kind, d)
            if s.closed_form_order() <= max_order and s.closed_form_order() > 1:
                pool.append(s)
    return pool


def sweep_catalog(max_order: int = 100, pair_max_order: int | None = None,
                  include_builtins: bool = True) -> list[CatalogEntry]:
    """Deterministic list of catalog groups with order at most ``max_order``.

    Direct products of two nontrivial pool members are included while their
    order stays within ``pair_max_order`` (default: ``max_order``).
    """
    pair_cap = pair_max_order or max_order
    pool = base_pool(max_order)
    entries: dict[str, CatalogEntry] = {}
    for s in pool:
        o = s.closed_form_order()
        entries.setdefault(s.label(), CatalogEntry(s.label(), s, o))
    nontrivial = [s for s in pool if s.closed_form_order() > 1]
    for i, a in enumerate(nontrivial):
        for b in nontrivial[i:]:
            o = a.closed_form_order() * b.closed_form_order()
            if o <= pair_cap:
                s = GroupSpec("direct", factors=(a, b))
                entries.setdefault(s.label(), CatalogEntry(s.label(), s, o))
    if include_builtins:
        for ident in BUILTIN_IDS:
            o = BUILTIN_ORDERS[ident]
            if o <= max_order:
                s = GroupSpec("builtin", path=ident)
                entries.setdefault(ident, CatalogEntry(ident, s, o))
    return sorted(entries.values(), key=lambda e: (e.order, e.label))
