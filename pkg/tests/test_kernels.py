"""Backend equivalence: the compiled kernels must match the pure ones."""

import numpy as np
import pytest

from qgdet import _kernels, _slow
from qgdet.fixtures import (
    _perm_bit_table,
    complete_graph,
    make_rng,
    random_connected_graph,
)

try:
    from qgdet import _fast
except ImportError:
    _fast = None

BACKENDS = [("slow", _slow)] + ([("fast", _fast)] if _fast else [])


def _edge_arrays(g):
    eu = np.asarray([e[0] for e in g.edges], dtype=np.int64)
    ev = np.asarray([e[1] for e in g.edges], dtype=np.int64)
    return eu, ev


@pytest.mark.parametrize("name, impl", BACKENDS)
def test_count_known_values(name, impl):
    eu, ev = _edge_arrays(complete_graph(5))
    assert impl.count_spanning_subsets(5, eu, ev) == 125


@pytest.mark.skipif(_fast is None, reason="compiled kernels not built")
def test_backends_agree_on_counts():
    rng = make_rng(61)
    for _ in range(30):
        g = random_connected_graph(rng, 8)
        eu, ev = _edge_arrays(g)
        assert _fast.count_spanning_subsets(g.vertex_count, eu, ev) == _slow.count_spanning_subsets(
            g.vertex_count, eu, ev
        )


@pytest.mark.skipif(_fast is None, reason="compiled kernels not built")
def test_backends_agree_on_canonical_forms():
    rng = make_rng(62)
    for n in (4, 5, 6):
        table = _perm_bit_table(n)
        n_bits = table.shape[1]
        masks = rng.integers(0, 1 << n_bits, size=200, dtype=np.int64)
        a = _fast.canonical_forms(masks, table)
        b = _slow.canonical_forms(masks, table)
        np.testing.assert_array_equal(a, b)


@pytest.mark.parametrize("name, impl", BACKENDS)
def test_canonical_form_is_permutation_invariant(name, impl):
    # applying any vertex permutation first must not change the canonical form
    rng = make_rng(63)
    n = 5
    table = _perm_bit_table(n)
    n_bits = table.shape[1]
    masks = rng.integers(0, 1 << n_bits, size=50, dtype=np.int64)
    canon = impl.canonical_forms(masks, table)
    p = 17  # arbitrary permutation row
    permuted = np.zeros_like(masks)
    for i, mask in enumerate(masks):
        img = 0
        for b in range(n_bits):
            if (int(mask) >> b) & 1:
                img |= 1 << int(table[p, b])
        permuted[i] = img
    np.testing.assert_array_equal(impl.canonical_forms(permuted, table), canon)


def test_selected_backend_exports():
    assert _kernels.BACKEND in ("cython", "python")
    assert callable(_kernels.count_spanning_subsets)
    assert callable(_kernels.canonical_forms)
