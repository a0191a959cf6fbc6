import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grouplab import kernels
from grouplab.constructions import construct

BACKENDS = [kernels.python_backend]
if kernels.compiled_backend is not None:
    BACKENDS.append(kernels.compiled_backend)

SPECS = ["symmetric:4", "dihedral:20", "dicyclic:16 x cyclic:3", "alternating:5", "metacyclic:7,3,2"]


def ids(mod):
    return mod.BACKEND


@pytest.fixture(scope="module", params=SPECS)
def group(request):
    return construct(request.param)


@pytest.mark.parametrize("mod", BACKENDS, ids=ids)
def test_closure_is_generated_subgroup(group, mod):
    kt = mod.prepare_table(group.table)
    whole = mod.closure(kt, group.gen_indices)
    assert int(whole.sum()) == group.order
    one = mod.closure(kt, [])
    assert int(one.sum()) == 1 and one[0]


@pytest.mark.parametrize("mod", BACKENDS, ids=ids)
def test_conjugation_orbits_label_smallest(group, mod):
    kt = mod.prepare_table(group.table)
    lab = mod.conjugation_orbits(kt, group.inv, group.gen_indices)
    els = group.elements
    for i in range(0, group.order, max(1, group.order // 25)):
        cls = {els.index(g.inverse() * els[i] * g) for g in els}
        assert lab[i] == min(cls)
        assert all(lab[j] == lab[i] for j in cls)


@pytest.mark.parametrize("mod", BACKENDS, ids=ids)
def test_element_orders(group, mod):
    kt = mod.prepare_table(group.table)
    orders = mod.element_orders(kt)
    assert [int(o) for o in orders] == [x.order() for x in group.elements]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SPECS), st.data())
def test_backends_agree(spec, data):
    G = construct(spec)
    n = G.order
    a = data.draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=12, unique=True))
    b = data.draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=12, unique=True))
    outs = []
    for mod in BACKENDS:
        kt = mod.prepare_table(G.table)
        outs.append((
            np.asarray(mod.closure(kt, a)),
            np.asarray(mod.product_mask(kt, np.array(a, dtype=np.int32), np.array(b, dtype=np.int32))),
            np.asarray(mod.conjugation_orbits(kt, G.inv, np.array(a, dtype=np.int32))),
        ))
    for other in outs[1:]:
        for x, y in zip(outs[0], other):
            assert np.array_equal(x.astype(np.int64), y.astype(np.int64))
    prod = outs[0][1]
    els = G.elements
    expected = {els.index(els[i] * els[j]) for i in a for j in b}
    assert set(np.flatnonzero(prod).tolist()) == expected


def test_env_var_forces_python_backend():
    code = "from grouplab import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, GROUPLAB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.skipif(kernels.compiled_backend is None, reason="compiled kernels not built")
def test_compiled_backend_selected_by_default():
    assert kernels.BACKEND == kernels.compiled_backend.BACKEND
