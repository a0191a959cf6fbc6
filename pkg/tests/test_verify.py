import json

import pytest

from grouplab import structure as st
from grouplab.constructions import (CatalogEntry, GroupSpec, builtin_example, cyclic, dihedral,
                                    symmetric)
from grouplab.predicates import is_supersoluble
from grouplab.verify import (FAIL, PASS, VACUOUS, Conclusion, SweepOptions, VerificationReport,
                             check_cw_gap, check_proposition, emit_report, normalize_theorem,
                             sweep, verify)

SCHEMA_KEYS = ["theorem", "prime", "fixture", "hypotheses", "conclusions", "verdict", "millis"]


def test_theorem_aliases():
    assert normalize_theorem("a") == "THM_A"
    assert normalize_theorem("PNILP") == "COR_PNILP"
    with pytest.raises(ValueError):
        normalize_theorem("Z")


def test_prime_required():
    with pytest.raises(ValueError):
        verify("A", builtin_example("s3_x_s3"))


def test_thm_a_on_s3_x_s3():
    r = verify("THM_A", builtin_example("s3_x_s3"), 2)
    assert r.verdict == PASS
    assert [c.holds for c in r.conclusions] == [True, True, True]


def test_thm_c_on_dihedral_chain():
    r = verify("THM_C", builtin_example("dihedral_chain(3,5,7)"))
    assert r.verdict == PASS
    quotient = r.conclusion("Sylow subgroups of G/F(G) elementary abelian").witness
    assert quotient["quotient_order"] == 8


def test_thm_b_on_s4():
    assert verify("THM_B", builtin_example("s4_a4_sylow2"), 3).verdict == PASS


def test_thm_d_records_derived_order():
    r = verify("THM_D", builtin_example("d14_x_294_9"))
    assert r.verdict == PASS
    w = r.conclusion("Sylow subgroups of G' elementary abelian").witness
    assert w["derived_order"] == 343
    assert w["sylows"]["7"] == {"order": 343, "elementary_abelian": True}


def test_alt5_is_vacuous_with_gcd_failure():
    r = verify("A", builtin_example("alt5"), 3)
    assert r.verdict == VACUOUS and r.conclusions == []
    assert [s.name for s in r.hypotheses.failed_side_conditions] == ["gcd(p-1,|G|)=1"]
    text = emit_report(r, "human")
    assert "gcd(p-1,|G|)=1: FAILED" in text


def test_verdict_invariant():
    for ident in ("s3_x_s3", "q8_x_d8", "sg32_35", "d8_x_c5c4"):
        fx = builtin_example(ident)
        for th in ("KNOCHE", "A", "B", "C", "D", "E", "COR", "ELEM", "PNILP"):
            primes = [2] if th in ("KNOCHE", "A", "B", "ELEM", "PNILP") else [None]
            for p in primes:
                r = verify(th, fx, p)
                if not r.hypotheses.satisfied:
                    assert r.verdict == VACUOUS
                elif all(c.holds for c in r.conclusions):
                    assert r.verdict == PASS
                else:
                    assert r.verdict == FAIL


def test_thm_c_pass_implies_supersoluble_independently():
    fx = builtin_example("d8_x_c5c4")
    r = verify("C", fx)
    assert r.verdict == PASS
    assert is_supersoluble(fx.G)


def test_json_schema_and_determinism():
    fx = builtin_example("s3_x_s3")
    r = verify("A", fx, 2)
    data = json.loads(emit_report(r, "json"))
    assert list(data) == SCHEMA_KEYS
    assert list(data["fixture"]) == ["label", "group_order", "a_order", "b_order"]
    assert list(data["hypotheses"]) == ["satisfied", "side_conditions", "failures"]
    assert data["verdict"] == "PASS"
    again = verify("A", builtin_example("s3_x_s3"), 2)
    assert emit_report(r, "json", timing=False) == emit_report(again, "json", timing=False)


def test_failure_json_carries_witnesses():
    fx = builtin_example("s3_x_s3xd10")
    r = verify("E", fx)
    data = json.loads(emit_report(r, "json"))
    f = data["hypotheses"]["failures"][0]
    assert set(f) == {"element", "factor", "class_size", "clause"}
    assert f["element"].startswith("(")


def test_fail_report_json_includes_witness():
    # a synthetic FAIL report still serialises its witness data in full
    fx = builtin_example("s3_x_s3")
    base = verify("A", fx, 2)
    fake = VerificationReport("THM_A", fx.label, 36, 6, 6, 2, base.hypotheses,
                              [Conclusion("x", False, {"element": "(1 2)", "class_size": 4,
                                                       "subgroup_generators": ["(1 2 3)"]})],
                              FAIL)
    data = json.loads(emit_report(fake, "json"))
    assert data["verdict"] == "FAIL"
    assert data["conclusions"][0]["witness"]["subgroup_generators"] == ["(1 2 3)"]


def test_cw_gap_examples():
    r = check_cw_gap(builtin_example("sg300_25").G, 2)
    assert r.hypotheses.satisfied and r.claim_fails
    assert r.claim.witness == {"op_order": 1, "sylow_order": 4, "quotient_p_part": 4}
    assert all(c.holds for c in r.clauses)
    r = check_cw_gap(symmetric(3), 2)
    assert r.hypotheses.satisfied and r.verdict == "CLAIM_HOLDS"
    assert r.claim.witness["quotient_p_part"] == 2
    r = check_cw_gap(cyclic(4), 2)
    assert r.hypotheses.satisfied and r.verdict == "CLAIM_HOLDS"


@pytest.mark.parametrize("q", [3, 5, 7])
def test_proposition_on_dihedral(q):
    G = dihedral(2 * q)
    N = next(M for M in st.minimal_normal_subgroups(G) if M.order == q)
    r = check_proposition(G, N, 2)
    parts = {name: status for name, status, _ in r.parts}
    assert parts == {"part 1": PASS, "part 2": PASS}


def test_proposition_abelian_case():
    G = cyclic(6)
    N = next(M for M in st.minimal_normal_subgroups(G) if M.order == 3)
    r = check_proposition(G, N, 2)
    assert dict((n, s) for n, s, _ in r.parts)["part 1"] == PASS
    assert r.parts[0][2]["quotient_op_order"] == 1


def test_proposition_precondition_failure():
    G = symmetric(4)
    V = st.fitting(G)
    r = check_proposition(G, V, 2)  # V is a 2-group, not a 2'-group
    assert r.verdict == VACUOUS
    assert not all(s.holds for s in r.preconditions)


def test_sweep_abelian_group():
    entry = CatalogEntry("C6", GroupSpec.simple("cyclic", 6), 6)
    r = sweep([entry], ["THM_C"])
    assert r.entries and all(e.verdict == PASS for e in r.entries)
    assert sum(r.counts.values()) == len(r.entries)


def test_sweep_fixture_with_prime():
    r = sweep([builtin_example("sg300_25")], ["THM_A"], SweepOptions(primes=(2,)))
    assert [e.verdict for e in r.entries] == [PASS]


def test_sweep_small_catalog_has_no_fail_and_is_deterministic():
    opts = SweepOptions(max_order=24, keep_going=True)
    a = sweep(options=opts)
    b = sweep(options=opts)
    assert a.counts[FAIL] == 0 and a.groups > 20
    assert emit_report(a, "json", timing=False) == emit_report(b, "json", timing=False)
    assert sum(a.counts.values()) == len(a.entries)
