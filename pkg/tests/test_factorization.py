import pytest
from hypothesis import given, settings, strategies as hst

from grouplab import structure as st
from grouplab.constructions import (builtin_example, construct, cyclic, direct_product,
                                    symmetric)
from grouplab.factorization import (find_factorizations, find_mp_factorizations,
                                    hall_factorization, is_product, mutually_permutable, permutes,
                                    product_set_mask)
from grouplab.perm import parse_cycles

import oracles


def sub(G, *texts):
    return G.subgroup([parse_cycles(t, G.degree) for t in texts])


def test_is_product_examples():
    S4 = symmetric(4)
    A4 = st.derived_subgroup(S4)
    D8 = st.sylow_subgroup(S4, 2)
    assert is_product(S4, A4, D8)
    S3 = symmetric(3)
    t = sub(S3, "(1 2)")
    assert not is_product(S3, t, t)
    assert is_product(S3, S3.whole(), S3.trivial())


def test_permutes_examples():
    S3 = symmetric(3)
    assert permutes(st.derived_subgroup(S3), sub(S3, "(1 2)"))
    a, b = sub(S3, "(1 2)"), sub(S3, "(1 3)")
    assert not permutes(a, b)
    assert not permutes(a, b, method="sets")
    assert product_set_mask(a, b).bit_count() == 4
    S4 = symmetric(4)
    assert permutes(st.sylow_subgroup(S4, 2), sub(S4, "(1 2 3)"))


def test_mutually_permutable_examples():
    assert mutually_permutable(*(lambda f: (f.G, f.A, f.B))(builtin_example("s4_a4_sylow2"))) \
        .mutually_permutable
    fx = builtin_example("s3_x_s3")
    assert mutually_permutable(fx.G, fx.A, fx.B).mutually_permutable
    fx = builtin_example("sg300_25")
    assert mutually_permutable(fx.G, fx.A, fx.B, exhaustive=True).mutually_permutable


def test_non_mp_witness():
    S3 = symmetric(3)
    a = sub(S3, "(1 2)")
    cert = mutually_permutable(S3, S3.whole(), a)
    # <(1 2)> must permute with every subgroup of G = A, and <(1 3)> breaks that
    assert cert.is_product and not cert.mutually_permutable
    assert cert.witness["subgroup_of"] == "A" and cert.witness["subgroup_order"] == 2
    assert not oracles.mutually_permutable(set(S3.elements), set(a.elements()), 3)
    S4 = symmetric(4)
    A = sub(S4, "(1 2 3)")
    B = st.sylow_subgroup(S4, 2)
    cert = mutually_permutable(S4, A, B)
    assert cert.is_product and not cert.mutually_permutable
    assert cert.witness["kind"] == "permutability"


def test_find_mp_factorizations_cyclic_prime():
    C5 = cyclic(5)
    certs = find_mp_factorizations(C5, proper=False, include_whole=True)
    assert sorted((c.A.order, c.B.order) for c in certs) == [(5, 1), (5, 5)]
    assert find_mp_factorizations(C5) == []


def test_find_mp_factorizations_sym4_and_sym3():
    S4 = symmetric(4)
    A4 = st.derived_subgroup(S4)
    pairs = find_mp_factorizations(S4)
    sylows = st.conjugates(S4, st.sylow_subgroup(S4, 2))
    for P in sylows:
        assert any(c.A == A4 and c.B == P for c in pairs)
    S3 = symmetric(3)
    found = find_mp_factorizations(S3)
    A3 = st.derived_subgroup(S3)
    c2s = [S for S in st.all_subgroups(S3) if S.order == 2]
    for t in c2s:
        assert any(c.A == A3 and c.B == t for c in found)
    ordered = [(c.A.order, c.B.order) for c in pairs]
    assert ordered == sorted(ordered, reverse=True)


def test_dedupe_by_conjugacy():
    S4 = symmetric(4)
    assert len(find_mp_factorizations(S4, dedupe_conjugates=True)) < \
        len(find_mp_factorizations(S4))


def test_hall_factorization_examples():
    fx = builtin_example("s4_a4_sylow2")
    w = hall_factorization(fx.G, fx.A, fx.B, {2})
    assert w.H.order == 8 and w.H_cap_A.order == 4 and w.H_cap_B == fx.B
    w = hall_factorization(fx.G, fx.A, fx.B, {2, 3})
    assert w.H.is_whole() and w.H_cap_A == fx.A and w.H_cap_B == fx.B
    fx = builtin_example("s3_x_s3")
    w = hall_factorization(fx.G, fx.A, fx.B, {3})
    assert w.H.order == 9 and w.H_cap_A.order == 3 and w.H_cap_B.order == 3


SPECS = ["symmetric:3", "symmetric:4", "dihedral:8", "dicyclic:8", "dihedral:12",
         "metacyclic:7,3,2", "dihedral:6 x cyclic:2", "alternating:4"]


@settings(max_examples=25, deadline=None)
@given(hst.sampled_from(SPECS))
def test_mp_matches_brute_force(spec):
    G = construct(spec)
    for cert in find_factorizations(G, mutually_permutable=False):
        A, B = set(cert.A.elements()), set(cert.B.elements())
        brute = oracles.mutually_permutable(A, B, G.degree)
        assert mutually_permutable(G, cert.A, cert.B).mutually_permutable == brute


@settings(max_examples=25, deadline=None)
@given(hst.sampled_from(SPECS + ["dihedral:24", "dicyclic:16 x cyclic:2", "symmetric:3 x cyclic:6"]))
def test_cyclic_test_equals_exhaustive(spec):
    G = construct(spec)
    for cert in find_factorizations(G, mutually_permutable=False):
        full = mutually_permutable(G, cert.A, cert.B, exhaustive=True).mutually_permutable
        short = mutually_permutable(G, cert.A, cert.B, exhaustive=False).mutually_permutable
        assert full == short


def test_direct_factors_are_mutually_permutable():
    prod = direct_product(symmetric(3), cyclic(4))
    cert = mutually_permutable(prod.group, prod.left, prod.right)
    assert cert.is_product and cert.mutually_permutable


def test_size_identity_matches_product_set():
    G = symmetric(4)
    subs = st.all_subgroups(G)
    for A in subs[::3]:
        for B in subs[::4]:
            full = product_set_mask(A, B).bit_count() == G.order
            assert is_product(G, A, B) == full
