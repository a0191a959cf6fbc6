"""Theorem verifiers, the gap reproduction mode, the proposition checker and sweeps."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, replace
from typing import Iterable

from . import structure as st
from .constructions import CatalogEntry, FactorizedFixture, sweep_catalog
from .errors import CapExceeded, GroupLabError
from .factorization import find_mp_factorizations
from .group import FiniteGroup, SubgroupRef
from .numtheory import p_part, prime_factors, require_prime
from .predicates import (HypothesisOutcome, HypothesisVariant, SideCondition, check_hypothesis,
                         is_elementary_abelian, is_p_nilpotent, is_p_soluble, is_p_supersoluble,
                         is_soluble, is_supersoluble)

PASS, VACUOUS, FAIL = "PASS", "VACUOUS", "FAIL"

# theorem id -> (hypothesis variant, needs a prime)
THEOREMS = {
    "KNOCHE": ("KNOCHE", True),
    "THM_A": ("THM_A", True),
    "THM_B": ("THM_B", True),
    "THM_C": ("THM_C_ALLP", False),
    "THM_D": ("THM_D_SQFREE", False),
    "THM_E": ("THM_E_ALLP_REG", False),
    "COR": ("COR_SQFREE_ALL", False),
    "THM_ELEM": ("ELEM", True),
    "COR_PNILP": ("PNILP", True),
}

ALIASES = {"A": "THM_A", "B": "THM_B", "C": "THM_C", "D": "THM_D", "E": "THM_E",
           "ELEM": "THM_ELEM", "PNILP": "COR_PNILP"}

SWEEP_DEFAULT = ("KNOCHE", "THM_A", "THM_B", "THM_C", "THM_D", "THM_E", "COR")


def normalize_theorem(ident: str) -> str:
    key = ident.strip().upper()
    key = ALIASES.get(key, key)
    if key not in THEOREMS:
        raise ValueError(f"unknown theorem id {ident!r}")
    return key


@dataclass
class Conclusion:
    name: str
    holds: bool
    witness: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    theorem: str
    label: str
    group_order: int
    a_order: int
    b_order: int
    prime: int | None
    hypotheses: HypothesisOutcome
    conclusions: list
    verdict: str
    millis: float = 0.0

    def conclusion(self, name: str) -> Conclusion:
        for c in self.conclusions:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, timing: bool = True) -> dict:
        h = self.hypotheses
        out = {
            "theorem": self.theorem,
            "prime": self.prime,
            "fixture": {"label": self.label, "group_order": self.group_order,
                        "a_order": self.a_order, "b_order": self.b_order},
            "hypotheses": {
                "satisfied": h.satisfied,
                "side_conditions": [{"name": s.name, "holds": s.holds, "detail": s.detail}
                                    for s in h.side_conditions],
                "failures": [{"element": str(f.element), "factor": f.factor,
                              "class_size": f.class_size, "clause": f.clause}
                             for f in h.failures],
            },
            "conclusions": [{"name": c.name, "holds": c.holds, "witness": c.witness}
                            for c in self.conclusions],
            "verdict": self.verdict,
        }
        if timing:
            out["millis"] = round(self.millis, 3)
        return out


def _gens(S: SubgroupRef) -> list[str]:
    return [str(g) for g in S.generators]


def _quotient_sylow_elementary(G: FiniteGroup, N: SubgroupRef, p: int) -> tuple[bool, dict]:
    """Whether a Sylow p-subgroup of G/N is elementary abelian (N normal)."""
    P = st.sylow_subgroup(G, p)
    gi = P.gen_indices
    nm = N.bool_mask
    for i, a in enumerate(gi):
        if not nm[st.element_power_index(G, a, p)]:
            return False, {"element": str(G.element(a)), "reason": "p-th power outside N"}
        for b in gi[i + 1:]:
            c = st._commutator_index(G, a, b)
            if not nm[c]:
                return False, {"elements": [str(G.element(a)), str(G.element(b))],
                               "reason": "commutator outside N"}
    order = p_part(G.order // N.order, p)
    return True, {"sylow_order": order}


def _knoche_conclusions(P: SubgroupRef, p: int) -> list[Conclusion]:
    D = st.derived_subgroup(P)
    Phi = st.frattini(P)
    Z = st.center(P)
    chain_ok = D.is_subgroup_of(Phi) and Phi.is_subgroup_of(Z)
    return [
        Conclusion("P' <= Phi(P) <= Z(P)", chain_ok,
                   {"derived_order": D.order, "frattini_order": Phi.order, "center_order": Z.order}),
        Conclusion("P' elementary abelian", is_elementary_abelian(D),
                   {"derived_generators": _gens(D), "derived_order": D.order}),
        Conclusion("|P'| <= p^2", D.order <= p * p, {"derived_order": D.order}),
    ]


def _conclusions_thm_d(G: FiniteGroup) -> list[Conclusion]:
    D = st.derived_subgroup(G)
    sylows = {}
    ok_syl = True
    for q in (prime_factors(D.order) if D.order > 1 else []):
        S = st.sylow_subgroup(D, q)
        ea = is_elementary_abelian(S)
        ok_syl &= ea
        sylows[str(q)] = {"order": S.order, "elementary_abelian": ea}
    F = st.fitting(G)
    FD = st.derived_subgroup(F)
    parts = {str(q): p_part(FD.order, q) for q in (prime_factors(FD.order) if FD.order > 1 else [])}
    bad = {q: v for q, v in parts.items() if v > int(q) ** 2}
    return [
        Conclusion("G' abelian", st.is_abelian(D),
                   {"derived_order": D.order, "derived_generators": _gens(D)}),
        Conclusion("Sylow subgroups of G' elementary abelian", ok_syl,
                   {"derived_order": D.order, "sylows": sylows}),
        Conclusion("|F(G)'|_p <= p^2 for all p", not bad,
                   {"fitting_order": F.order, "fitting_derived_order": FD.order,
                    "p_parts": parts}),
    ]


def _conclusions_thm_c(G: FiniteGroup) -> list[Conclusion]:
    F = st.fitting(G)
    ss = is_supersoluble(G)
    ok = True
    data = {}
    for q in (prime_factors(G.order) if G.order > 1 else []):
        holds, w = _quotient_sylow_elementary(G, F, q)
        data[str(q)] = w
        ok &= holds
    chief = list(st.chief_series(G).factor_orders)
    return [
        Conclusion("G supersoluble", ss, {"chief_factor_orders": chief}),
        Conclusion("Sylow subgroups of G/F(G) elementary abelian", ok,
                   {"fitting_order": F.order, "quotient_order": G.order // F.order,
                    "sylows": data}),
    ]


def _conclusions_thm_e(G: FiniteGroup) -> list[Conclusion]:
    F = st.fitting(G)
    idx = G.order // F.order
    parts = {str(q): p_part(idx, q) for q in (prime_factors(idx) if idx > 1 else [])}
    bad = {q: v for q, v in parts.items() if v > int(q) ** 2}
    return [Conclusion("|G/F(G)|_p <= p^2 for all p", not bad,
                       {"quotient_order": idx, "p_parts": parts})]


def _conclusions(theorem: str, G: FiniteGroup, p: int | None) -> list[Conclusion]:
    def compute():
        if theorem == "KNOCHE":
            return _knoche_conclusions(G.whole(), p)
        if theorem == "THM_A":
            Op = st.p_core(G, p)
            ea, w = _quotient_sylow_elementary(G, Op, p)
            w["op_order"] = Op.order
            return [
                Conclusion("G soluble", is_soluble(G), {}),
                Conclusion("G p-nilpotent", is_p_nilpotent(G, p),
                           {"p_complement_order": st.p_prime_core(G, p).order}),
                Conclusion("Sylow p-subgroups of G/O_p(G) elementary abelian", ea, w),
            ]
        if theorem == "THM_B":
            ps = is_p_soluble(G, p)
            return [Conclusion("G p-supersoluble", (not ps) or is_p_supersoluble(G, p),
                               {"p_soluble": ps,
                                "chief_factor_orders": list(st.chief_series(G).factor_orders)})]
        if theorem == "THM_D":
            return _conclusions_thm_d(G)
        if theorem == "THM_C":
            return _conclusions_thm_c(G)
        if theorem == "THM_E":
            return _conclusions_thm_e(G)
        if theorem == "COR":
            return _conclusions_thm_c(G) + _conclusions_thm_d(G) + _conclusions_thm_e(G)
        if theorem == "THM_ELEM":
            Op = st.p_core(G, p)
            ea, w = _quotient_sylow_elementary(G, Op, p)
            w["op_order"] = Op.order
            return [Conclusion("Sylow p-subgroups of G/O_p(G) elementary abelian", ea, w)]
        if theorem == "COR_PNILP":
            return _knoche_conclusions(st.sylow_subgroup(G, p), p)
        raise ValueError(theorem)  # pragma: no cover
    return G.memo(("conclusions", theorem, p), compute)


def verify(theorem: str, fixture: FactorizedFixture, p: int | None = None,
           exhaustive: bool = True, mutually_permutable_known: bool | None = None,
           failure_limit: int | None = None) -> VerificationReport:
    """Evaluate hypotheses, then (only if they hold) the theorem's conclusions.

    ``mutually_permutable_known`` lets a caller that already established
    mutual permutability of A and B skip recomputing it.
    """
    start = time.perf_counter()
    theorem = normalize_theorem(theorem)
    variant_id, needs_p = THEOREMS[theorem]
    if needs_p:
        if p is None:
            raise ValueError(f"{theorem} needs a prime")
        require_prime(p)
    else:
        p = None
    variant = HypothesisVariant.make(variant_id, p)
    G = fixture.G
    if mutually_permutable_known is not None and variant.mutual_permutability:
        base = replace(variant, mutual_permutability=False)
        hyp = check_hypothesis(fixture, base, exhaustive=exhaustive, failure_limit=failure_limit)
        side = SideCondition("A and B mutually permutable", bool(mutually_permutable_known),
                             "established by the caller")
        hyp = HypothesisOutcome(variant, hyp.satisfied and bool(mutually_permutable_known),
                                hyp.side_conditions + [side], hyp.failures, hyp.elements_checked)
    else:
        hyp = check_hypothesis(fixture, variant, exhaustive=exhaustive, failure_limit=failure_limit)
    if hyp.satisfied:
        conclusions = list(_conclusions(theorem, G, p))
        verdict = PASS if all(c.holds for c in conclusions) else FAIL
    else:
        conclusions = []
        verdict = VACUOUS
    millis = (time.perf_counter() - start) * 1000
    return VerificationReport(theorem, fixture.label, G.order, fixture.A.order, fixture.B.order,
                              p, hyp, conclusions, verdict, millis)


def verify_all_primes(theorem: str, fixture: FactorizedFixture, **kw) -> list[VerificationReport]:
    theorem = normalize_theorem(theorem)
    if not THEOREMS[theorem][1]:
        return [verify(theorem, fixture, **kw)]
    n = fixture.G.order
    return [verify(theorem, fixture, q, **kw) for q in (prime_factors(n) if n > 1 else [])]


# ------------------------------------------------------------ gap reproduction

@dataclass
class CWGapReport:
    label: str
    group_order: int
    prime: int
    hypotheses: HypothesisOutcome
    claim: Conclusion
    clauses: list
    verdict: str  # "CLAIM_FAILS", "CLAIM_HOLDS" or VACUOUS

    @property
    def claim_fails(self) -> bool:
        return self.verdict == "CLAIM_FAILS"

    def to_dict(self) -> dict:
        h = self.hypotheses
        return {
            "mode": "cw-gap",
            "prime": self.prime,
            "group": {"label": self.label, "group_order": self.group_order},
            "hypotheses": {
                "satisfied": h.satisfied,
                "side_conditions": [{"name": s.name, "holds": s.holds, "detail": s.detail}
                                    for s in h.side_conditions],
                "failures": [{"element": str(f.element), "factor": f.factor,
                              "class_size": f.class_size, "clause": f.clause}
                             for f in h.failures],
            },
            "claim": {"name": self.claim.name, "holds": self.claim.holds,
                      "witness": self.claim.witness},
            "clauses": [{"name": c.name, "holds": c.holds, "witness": c.witness}
                        for c in self.clauses],
            "verdict": self.verdict,
        }


def check_cw_gap(G: FiniteGroup, p: int, label: str | None = None) -> CWGapReport:
    """Test the claim |G/O_p(G)|_p <= p under 'no class size divisible by p^2'."""
    require_prime(p)
    fx = FactorizedFixture(G, G.whole(), G.whole(), label or G.name or "group")
    hyp = check_hypothesis(fx, HypothesisVariant.make("CW", p))
    Op = st.p_core(G, p)
    gp = p_part(G.order, p)
    qp = gp // Op.order
    claim = Conclusion("|G/O_p(G)|_p <= p", qp <= p,
                       {"op_order": Op.order, "sylow_order": gp, "quotient_p_part": qp})
    P = st.sylow_subgroup(G, p)
    PD = st.derived_subgroup(P)
    clauses = [
        Conclusion("G soluble", is_soluble(G), {}),
        Conclusion("G p-nilpotent", is_p_nilpotent(G, p), {}),
        Conclusion("|P'| <= p", PD.order <= p, {"derived_order": PD.order}),
    ]
    if P.order != Op.order:
        clauses.append(Conclusion("O_p(G) abelian", st.is_abelian(Op), {"op_order": Op.order}))
    if not hyp.satisfied:
        verdict = VACUOUS
    else:
        verdict = "CLAIM_HOLDS" if claim.holds else "CLAIM_FAILS"
    return CWGapReport(fx.label, G.order, p, hyp, claim, clauses, verdict)


# ------------------------------------------------------------ proposition checker

@dataclass
class PropositionReport:
    label: str
    prime: int
    n_order: int
    preconditions: list  # SideCondition
    parts: list  # (name, status, witness)

    @property
    def verdict(self) -> str:
        statuses = [s for _, s, _ in self.parts]
        if FAIL in statuses:
            return FAIL
        return PASS if PASS in statuses else VACUOUS

    def to_dict(self) -> dict:
        return {
            "mode": "proposition",
            "prime": self.prime,
            "group": {"label": self.label, "n_order": self.n_order},
            "preconditions": [{"name": s.name, "holds": s.holds, "detail": s.detail}
                              for s in self.preconditions],
            "parts": [{"name": n, "status": s, "witness": w} for n, s, w in self.parts],
            "verdict": self.verdict,
        }


def check_proposition(G: FiniteGroup, N: SubgroupRef, p: int, label: str | None = None) -> PropositionReport:
    """Both parts of the O_p(G/N O_p(G)) proposition for an abelian minimal normal p'-subgroup N."""
    require_prime(p)
    W = G.whole()
    pre = []
    normal = st.is_normal(W, N)
    pre.append(SideCondition("N normal in G", normal))
    pre.append(SideCondition("N abelian", st.is_abelian(N)))
    pre.append(SideCondition("N a p'-group", N.order % p != 0, f"|N|={N.order}"))
    minimal = normal and not N.is_trivial() and any(
        M == N for M in st.minimal_normal_subgroups(W))
    pre.append(SideCondition("N minimal normal", minimal))
    label = label or G.name or "group"
    if not all(s.holds for s in pre):
        return PropositionReport(label, p, N.order, pre,
                                 [("part 1", VACUOUS, {}), ("part 2", VACUOUS, {})])
    Op = st.p_core(W, p)
    M = N.join(Op)
    Q = st.quotient(W, M)
    O = st.p_core(Q.group, p)
    parts = []
    pn = is_p_nilpotent(G, p)
    sizes = st.class_size_array(G)[N.indices]
    small = bool((sizes % (p * p) != 0).all())
    w1 = {"quotient_op_order": O.order, "p_nilpotent": pn, "class_sizes_ok": small}
    if pn and small:
        parts.append(("part 1", PASS if O.order <= p else FAIL, w1))
    else:
        parts.append(("part 1", VACUOUS, w1))
    if O.order == p:
        K = Q.preimage(O)
        P = st.sylow_subgroup(K, p)
        C = st.centralizer_of_indices(N, P.gen_indices)
        parts.append(("part 2", PASS if C.is_trivial() else FAIL,
                      {"centralizer_order": C.order, "sylow_generators": _gens(P)}))
    else:
        parts.append(("part 2", VACUOUS, {"quotient_op_order": O.order}))
    return PropositionReport(label, p, N.order, pre, parts)


# ------------------------------------------------------------ sweep

@dataclass
class SweepEntry:
    group: str
    group_order: int
    factorization: int
    a_order: int
    b_order: int
    theorem: str
    prime: int | None
    verdict: str


@dataclass
class SweepOptions:
    max_order: int = 100
    pair_max_order: int | None = None
    theorems: tuple = SWEEP_DEFAULT
    keep_going: bool = False
    exhaustive: bool = False
    dedupe_conjugates: bool = True
    primes: tuple | None = None  # restrict prime-dependent theorems to these primes


@dataclass
class SweepReport:
    description: str
    entries: list = field(default_factory=list)
    anomalies: list = field(default_factory=list)  # VerificationReport for every FAIL
    skipped: list = field(default_factory=list)  # (group label, reason)
    groups: int = 0
    factorizations: int = 0
    halted: bool = False
    seconds: float = 0.0

    @property
    def counts(self) -> dict:
        out = {PASS: 0, VACUOUS: 0, FAIL: 0}
        for e in self.entries:
            out[e.verdict] += 1
        return out

    def counts_by_theorem(self) -> dict:
        out: dict = {}
        for e in self.entries:
            out.setdefault(e.theorem, {PASS: 0, VACUOUS: 0, FAIL: 0})[e.verdict] += 1
        return dict(sorted(out.items()))

    def to_dict(self, timing: bool = True, details: bool = False) -> dict:
        out = {
            "catalog": self.description,
            "groups": self.groups,
            "factorizations": self.factorizations,
            "reports": len(self.entries),
            "counts": self.counts,
            "counts_by_theorem": self.counts_by_theorem(),
            "anomalies": [r.to_dict(timing=False) for r in self.anomalies],
            "skipped": [{"group": g, "reason": r} for g, r in self.skipped],
            "halted": self.halted,
        }
        if details:
            out["entries"] = [e.__dict__ for e in self.entries]
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def sweep(catalog: Iterable[CatalogEntry | FactorizedFixture] | None = None, theorems: Iterable[str] | None = None,
          options: SweepOptions | None = None, progress=None) -> SweepReport:
    """Run verifiers over every proper mutually permutable factorization of each group.

    Catalog items may also be fixtures, in which case only their own
    factorization is checked (mutual permutability is then tested, not assumed).
    """
    opts = options or SweepOptions()
    start = time.perf_counter()
    if catalog is None:
        catalog = sweep_catalog(opts.max_order, opts.pair_max_order)
    catalog = list(catalog)
    names = [normalize_theorem(t) for t in (theorems or opts.theorems)]
    report = SweepReport(f"{len(catalog)} groups; theorems {','.join(names)}")
    for entry in catalog:
        try:
            if isinstance(entry, FactorizedFixture):
                G, label = entry.G, entry.label
                fixtures = [entry]
                known = None
            else:
                G, label = entry.build(), entry.label
                facts = find_mp_factorizations(G, dedupe_conjugates=opts.dedupe_conjugates,
                                               exhaustive=opts.exhaustive)
                fixtures = [FactorizedFixture(G, c.A, c.B, label) for c in facts]
                known = True
        except (CapExceeded, GroupLabError) as exc:
            report.skipped.append((entry.label, str(exc)))
            continue
        report.groups += 1
        primes = prime_factors(G.order) if G.order > 1 else []
        if opts.primes is not None:
            primes = [q for q in primes if q in opts.primes]
        for k, fx in enumerate(fixtures):
            report.factorizations += 1
            for th in names:
                ps = primes if THEOREMS[th][1] else [None]
                for p in ps:
                    r = verify(th, fx, p, mutually_permutable_known=known, failure_limit=1,
                               exhaustive=opts.exhaustive)
                    report.entries.append(SweepEntry(label, G.order, k, fx.A.order,
                                                     fx.B.order, th, p, r.verdict))
                    if r.verdict == FAIL:
                        full = verify(th, fx, p, mutually_permutable_known=known)
                        report.anomalies.append(full)
                        if not opts.keep_going:
                            report.halted = True
                            report.seconds = time.perf_counter() - start
                            return report
        if progress is not None:
            progress(label, len(fixtures))
    report.seconds = time.perf_counter() - start
    return report


# ------------------------------------------------------------ emission

def _human_verification(r: VerificationReport) -> str:
    p = f" p={r.prime}" if r.prime else ""
    lines = [f"{r.theorem}{p} on {r.label} (|G|={r.group_order}, |A|={r.a_order}, |B|={r.b_order}):"
             f" {r.verdict}"]
    for s in r.hypotheses.side_conditions:
        mark = "ok" if s.holds else "FAILED"
        detail = f" [{s.detail}]" if s.detail else ""
        lines.append(f"  hypothesis {s.name}: {mark}{detail}")
    nfail = len(r.hypotheses.failures)
    if nfail:
        f = r.hypotheses.failures[0]
        lines.append(f"  hypothesis class sizes: FAILED ({nfail} element(s); e.g. {f.element} in"
                     f" {f.factor} has class size {f.class_size}: {f.clause})")
    else:
        lines.append(f"  hypothesis class sizes: ok ({r.hypotheses.elements_checked} element checks)")
    for c in r.conclusions:
        lines.append(f"  conclusion {c.name}: {'holds' if c.holds else 'FAILS'}"
                     f" {json.dumps(c.witness, sort_keys=True)}")
    return "\n".join(lines)


def _human_cw(r: CWGapReport) -> str:
    lines = [f"cw-gap p={r.prime} on {r.label} (|G|={r.group_order}): {r.verdict}"]
    for s in r.hypotheses.side_conditions:
        lines.append(f"  hypothesis {s.name}: {'ok' if s.holds else 'FAILED'}")
    lines.append(f"  hypothesis no class size divisible by p^2: "
                 f"{'ok' if not r.hypotheses.failures else 'FAILED'}")
    lines.append(f"  claim {r.claim.name}: {'holds' if r.claim.holds else 'FAILS'}"
                 f" {json.dumps(r.claim.witness, sort_keys=True)}")
    for c in r.clauses:
        lines.append(f"  clause {c.name}: {'holds' if c.holds else 'fails'}")
    return "\n".join(lines)


def _human_prop(r: PropositionReport) -> str:
    lines = [f"proposition p={r.prime} on {r.label} (|N|={r.n_order}): {r.verdict}"]
    for s in r.preconditions:
        lines.append(f"  precondition {s.name}: {'ok' if s.holds else 'FAILED'}")
    for name, status, w in r.parts:
        lines.append(f"  {name}: {status} {json.dumps(w, sort_keys=True)}")
    return "\n".join(lines)


def _human_sweep(r: SweepReport) -> str:
    c = r.counts
    lines = [f"sweep: {r.description}",
             f"  groups={r.groups} factorizations={r.factorizations} reports={len(r.entries)}"
             f" PASS={c[PASS]} VACUOUS={c[VACUOUS]} FAIL={c[FAIL]}"]
    for th, cc in r.counts_by_theorem().items():
        lines.append(f"  {th}: PASS={cc[PASS]} VACUOUS={cc[VACUOUS]} FAIL={cc[FAIL]}")
    for g, why in r.skipped:
        lines.append(f"  skipped {g}: {why}")
    for a in r.anomalies:
        lines.append("  ANOMALY " + _human_verification(a).replace("\n", "\n  "))
    if r.halted:
        lines.append("  halted at first FAIL")
    return "\n".join(lines)


def emit_report(report, fmt: str = "human", timing: bool = True) -> str:
    """Render a report as human text or JSON (stable key order)."""
    if fmt not in ("human", "json"):
        raise ValueError("format must be 'human' or 'json'")
    if fmt == "json":
        if isinstance(report, list):
            data = [_as_dict(r, timing) for r in report]
        else:
            data = _as_dict(report, timing)
        return json.dumps(data, indent=2)
    if isinstance(report, list):
        return "\n".join(emit_report(r, fmt) for r in report)
    if isinstance(report, VerificationReport):
        return _human_verification(report)
    if isinstance(report, CWGapReport):
        return _human_cw(report)
    if isinstance(report, PropositionReport):
        return _human_prop(report)
    if isinstance(report, SweepReport):
        return _human_sweep(report)
    raise TypeError(f"cannot emit {type(report).__name__}")


def _as_dict(report, timing: bool) -> dict:
    if isinstance(report, (VerificationReport, SweepReport)):
        return report.to_dict(timing=timing)
    return report.to_dict()


__all__ = [
    "PASS", "VACUOUS", "FAIL", "THEOREMS", "ALIASES", "normalize_theorem", "Conclusion",
    "VerificationReport", "verify", "verify_all_primes", "CWGapReport", "check_cw_gap",
    "PropositionReport", "check_proposition", "SweepOptions", "SweepReport", "SweepEntry",
    "sweep", "emit_report",
]
