"""End-to-end acceptance checks, each timed against its own budget."""

from contextlib import contextmanager
from time import perf_counter

from grouplab import structure as st
from grouplab.constructions import builtin_example
from grouplab.factorization import is_product, mutually_permutable
from grouplab.numtheory import p_part
from grouplab.predicates import (check_hypothesis, is_abelian, is_elementary_abelian,
                                 is_p_nilpotent, is_p_supersoluble, is_soluble, is_supersoluble)
from grouplab.verify import (FAIL, PASS, SWEEP_DEFAULT, VACUOUS, SweepOptions, check_cw_gap, sweep,
                             verify)

import acceptance_log
import properties as pr


@contextmanager
def criterion(number: int, title: str, limit: float | None):
    start = perf_counter()
    passed = False
    try:
        yield
        passed = True
    finally:
        elapsed = perf_counter() - start
        in_time = limit is None or elapsed < limit
        acceptance_log.record(number, title, passed and in_time, elapsed, limit)
    assert in_time, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"


def sizes_on(G, S):
    return st.class_size_array(G)[S.indices]


def test_01_q8_x_d8_class_sizes():
    with criterion(1, "q8_x_d8: A u B class sizes at most 2, some G class size divisible by 4", 1):
        fx = builtin_example("q8_x_d8")
        G = fx.G
        assert max(sizes_on(G, fx.A).max(), sizes_on(G, fx.B).max()) == 2
        assert (st.class_size_array(G) % 4 == 0).any()


def test_02_sg32_35_structure():
    with criterion(2, "sg32_35: P' = Phi = Z elementary abelian of order 4, Q8 element of class 4", 1):
        fx = builtin_example("sg32_35")
        P = fx.G
        D, F, Z = st.derived_subgroup(P), st.frattini(P), st.center(P)
        assert D == F == Z
        assert D.order == 4 and is_elementary_abelian(D)
        Q8 = fx.B if fx.notes["quaternion_factor"] == "B" else fx.A
        assert Q8.order == 8 and not is_abelian(Q8)
        assert (sizes_on(P, Q8) == 4).any()


def test_03_sg300_25():
    with criterion(3, "sg300_25: O_2 = 1, |G|_2 = 4, no class size divisible by 4, MP, claim fails", 30):
        fx = builtin_example("sg300_25")
        G, A, B = fx.G, fx.A, fx.B
        assert G.order == 300
        assert st.p_core(G, 2).is_trivial()
        assert p_part(G.order, 2) == 4
        assert not (st.class_size_array(G) % 4 == 0).any()
        assert A.order == 100 and B.order == 75
        assert st.derived_subgroup(A).order == 25 and st.center(A).is_trivial()
        assert st.p_core(B, 5).order == 25 and B.order // 25 == 3
        cert = mutually_permutable(G, A, B, exhaustive=True)
        assert len(st.all_subgroups(B)) > 1
        assert is_product(G, A, B) and cert.mutually_permutable
        assert (st.class_size_array(A)[A.indices] % 4 == 0).any()
        assert check_hypothesis(fx, "THM_A", 2).satisfied
        gap = check_cw_gap(G, 2)
        assert gap.hypotheses.satisfied and gap.claim_fails
        assert gap.claim.witness["op_order"] == 1 and gap.claim.witness["quotient_p_part"] == 4


def test_04_sym4():
    with criterion(4, "s4_a4_sylow2: THM_B p=3 PASS, chief factors 4,3,2, 3-supersoluble only", 1):
        fx = builtin_example("s4_a4_sylow2")
        assert verify("THM_B", fx, 3).verdict == PASS
        assert sorted(st.chief_series(fx.G).factor_orders) == [2, 3, 4]
        assert not is_supersoluble(fx.G) and is_p_supersoluble(fx.G, 3)


def test_05_s3_x_s3():
    with criterion(5, "s3_x_s3: THM_A p=2 and THM_D PASS, G' = C3 x C3, |G/F| = 4 elementary", 1):
        fx = builtin_example("s3_x_s3")
        G = fx.G
        assert verify("THM_A", fx, 2).verdict == PASS
        assert verify("THM_D", fx).verdict == PASS
        D = st.derived_subgroup(G)
        assert D.order == 9 and is_elementary_abelian(D)
        assert int(G.element_orders[D.indices].max()) == 3  # not cyclic
        Q = st.quotient(G, st.fitting(G)).group
        assert Q.order == 4 and is_elementary_abelian(Q)


def test_06_d14_x_294_9():
    with criterion(6, "d14_x_294_9: THM_D hypotheses, |G'| = 343 elementary abelian, F' = 1", 60):
        fx = builtin_example("d14_x_294_9")
        G = fx.G
        assert check_hypothesis(fx, "THM_D_SQFREE").satisfied
        D = st.derived_subgroup(G)
        assert D.order == 343 and is_abelian(D)
        assert is_elementary_abelian(st.sylow_subgroup(D, 7))
        assert st.derived_subgroup(st.fitting(G)).is_trivial()
        r = verify("THM_D", fx)
        assert r.verdict == PASS


def test_07_d8_x_c5c4():
    with criterion(7, "d8_x_c5c4: 2-nilpotent, A u B class sizes prime to 4, O_2 nonabelian of 16", 5):
        fx = builtin_example("d8_x_c5c4")
        G = fx.G
        assert is_p_nilpotent(G, 2)
        for S in (fx.A, fx.B):
            assert not (sizes_on(G, S) % 4 == 0).any()
        O2 = st.p_core(G, 2)
        assert O2.order == 16 and not is_abelian(O2)


def test_08_dihedral_chain():
    with criterion(8, "dihedral_chain(3,5,7): THM_C PASS, G/F elementary abelian of order 8", 10):
        fx = builtin_example("dihedral_chain(3,5,7)")
        assert verify("THM_C", fx).verdict == PASS
        Q = st.quotient(fx.G, st.fitting(fx.G)).group
        assert Q.order == 8 and is_elementary_abelian(Q)


def test_09_alt5_negative_control():
    with criterion(9, "alt5 p=3: THM_A VACUOUS on the gcd clause, not soluble", 1):
        fx = builtin_example("alt5")
        r = verify("THM_A", fx, 3)
        assert r.verdict == VACUOUS
        assert [s.name for s in r.hypotheses.failed_side_conditions] == ["gcd(p-1,|G|)=1"]
        assert not is_soluble(fx.G)


def test_10_sweep_zero_fail():
    with criterion(10, "sweep of the catalog up to order 100: zero FAIL verdicts", 600):
        report = sweep(options=SweepOptions(max_order=100, theorems=SWEEP_DEFAULT, keep_going=True))
        assert report.groups > 500
        assert report.counts[PASS] > 0
        assert report.counts[FAIL] == 0, [e for e in report.entries if e.verdict == FAIL][:3]


def test_11_property_suites():
    with criterion(11, "property suites over every catalog group within 2000 elements", None):
        totals = {name: pr.Tally() for name in pr.PROPERTIES}
        groups = 0
        for label in pr.catalog_subjects():
            subject = pr.build_subject(label)
            assert subject.G.order <= pr.ENUMERATION_CAP
            for name, tally in pr.run_all(subject).items():
                totals[name].add(tally)
            groups += 1
        assert groups > 500
        for name, tally in totals.items():
            assert tally.checked > 0, f"{name}: no instances met the hypotheses"
        bad = {name: t.violations[:3] for name, t in totals.items() if t.violations}
        assert not bad, bad
