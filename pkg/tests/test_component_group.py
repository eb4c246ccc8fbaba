from itertools import combinations

import pytest
from hypothesis import assume, given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from shimura_cert.component_group import (
    FlowProblem,
    component_group,
    is_killed_by,
    laplacian,
    smith_normal_form,
    smooth_model_hypotheses,
    verify_flow,
)
from shimura_cert.shimura_graph import V1, Edge, Graph, Vertex


def make_graph(n, pairs, width=1):
    return Graph([Vertex(V1, i, 1) for i in range(n)], [Edge(a, b, width) for a, b in pairs])


def cycle(k):
    return make_graph(k, [(i, (i + 1) % k) for i in range(k)])


# -- Laplacian ----------------------------------------------------------------------

def test_two_cycle_laplacian():
    assert laplacian(cycle(2)).iota == [[-2, 2], [2, -2]]


def test_path_has_trivial_group():
    cg = component_group(laplacian(make_graph(4, [(0, 1), (1, 2), (2, 3)])))
    assert cg.invariant_factors == [] and cg.order == 1


@pytest.mark.parametrize("k", range(2, 9))
def test_cycle_group_is_cyclic(k):
    cg = component_group(laplacian(cycle(k)))
    assert cg.invariant_factors == [k] and cg.order == k


def test_laplacian_requires_unit_widths():
    with pytest.raises(ValueError):
        laplacian(make_graph(2, [(0, 1)], width=2))


def test_disconnected_graph_has_free_part():
    with pytest.warns(UserWarning):
        cg = component_group(laplacian(make_graph(4, [(0, 1), (2, 3)])))
    assert cg.free_rank == 1 and cg.order is None


# -- matrix-tree -------------------------------------------------------------------

def _spanning_trees(n, pairs):
    """Brute-force count of spanning trees of a multigraph."""
    count = 0
    for sub in combinations(range(len(pairs)), n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for k in sub:
            a, b = (find(x) for x in pairs[k])
            if a == b:
                ok = False
                break
            parent[a] = b
        count += ok
    return count


@st.composite
def connected_multigraphs(draw):
    n = draw(st.integers(2, 8))
    # a random spanning tree, then a few extra edges (loops excluded)
    pairs = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12 - (n - 1)))
    pairs += [(a, b) for a, b in extra if a != b]
    return n, pairs


@given(connected_multigraphs())
def test_matrix_tree(data):
    n, pairs = data
    cg = component_group(laplacian(make_graph(n, pairs)))
    assert cg.is_finite
    assert cg.order == _spanning_trees(n, pairs)


# -- Smith normal form ------------------------------------------------------------------

matrices = st.integers(1, 5).flatmap(lambda m: st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=m, max_size=m)))


def _mat_mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


@given(matrices)
def test_snf_agrees_with_sympy(A):
    S = smith_normal_form(A)
    ref = sympy_snf(Matrix(A), domain=ZZ)
    want = [abs(int(ref[i, i])) for i in range(min(ref.shape))]
    got = [abs(d) for d in S.diag] + [0] * (min(len(A), len(A[0])) - len(S.diag))
    assert got[:len(want)] == want
    D = _mat_mul(_mat_mul(S.U, A), S.V)
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            assert x == (S.diag[i] if i == j and i < len(S.diag) else 0)
    assert abs(Matrix(S.U).det()) == 1 and abs(Matrix(S.V).det()) == 1


@given(matrices, st.lists(st.integers(-5, 5), min_size=5, max_size=5))
def test_snf_solve(A, x):
    x = x[:len(A[0])]
    b = [sum(a * y for a, y in zip(row, x)) for row in A]
    S = smith_normal_form(A)
    sol = S.solve(b)
    assert sol is not None
    assert [sum(a * y for a, y in zip(row, sol)) for row in A] == b


@given(connected_multigraphs(), st.integers(1, 30), st.integers(1, 6), st.data())
def test_membership_is_monotone_under_multiples(data, n, k, draw):
    nv, pairs = data
    c1 = draw.draw(st.integers(0, nv - 1))
    c2 = draw.draw(st.integers(0, nv - 1))
    assume(c1 != c2)
    cg = component_group(laplacian(make_graph(nv, pairs)))
    if is_killed_by(cg, n, c1, c2):
        assert is_killed_by(cg, k * n, c1, c2)
    # the group order kills everything
    assert is_killed_by(cg, cg.order, c1, c2)


def test_cycle_membership():
    cg = component_group(laplacian(cycle(5)))
    assert is_killed_by(cg, 5, 1, 0)
    assert not is_killed_by(cg, 1, 1, 0)
    assert not is_killed_by(cg, 4, 2, 0)
    with pytest.raises(ValueError):
        is_killed_by(cg, 5, 0, 0)


# -- flows ---------------------------------------------------------------------------------

def test_flow_on_two_cycle():
    rep = verify_flow(FlowProblem([2, -2], [1, 0], source=0, sink=1), cycle(2))
    assert rep.ok and rep.residuals == [0, 0]
    assert not verify_flow(FlowProblem([1, -1], [1, 0]), cycle(2)).ok


def test_flow_on_cycle_is_monotone():
    # unit current from 0 to 2 around a 4-cycle splits evenly
    rep = verify_flow(FlowProblem([2, 0, -2, 0], [2, 1, 0, 1], source=0, sink=2), cycle(4))
    assert rep.ok and rep.monotone


def test_flow_rejects_unbalanced_current():
    with pytest.raises(ValueError):
        FlowProblem([1, 0], [0, 0])


@given(connected_multigraphs(), st.lists(st.integers(-10, 10), min_size=8, max_size=8), st.data())
def test_law_k(data, pot, draw):
    n, pairs = data
    g = make_graph(n, pairs)
    v = pot[:n]
    iota = laplacian(g).iota
    current = [-sum(iota[c][d] * v[d] for d in range(n)) for c in range(n)]
    assert verify_flow(FlowProblem(current, v), g).ok
    c = draw.draw(st.integers(0, n - 1))
    d = draw.draw(st.integers(0, n - 1))
    assume(c != d)
    bumped = list(current)
    bumped[c] += 1
    bumped[d] -= 1
    rep = verify_flow(FlowProblem(bumped, v), g)
    assert not rep.ok and set(rep.bad_vertices) == {c, d}


# -- smooth model hypotheses on toy graphs ---------------------------------------------------

def test_hypotheses_on_cycle():
    g = cycle(6)
    h = smooth_model_hypotheses(g, None, 0, 5)
    assert h.two_points and h.non_disconnecting and h.not_killed
    assert h.torsion_free is None and not h.all_hold
    h = smooth_model_hypotheses(g, None, 0, 6)
    assert not h.not_killed and h.killed_by == [1, 2, 3, 4, 5]
    # 2 (C3 - C0) is killed by 3 as well
    assert smooth_model_hypotheses(g, None, 0, 2).killed_by == [3]


def test_hypotheses_fail_on_a_bridge():
    g = make_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    h = smooth_model_hypotheses(g, None, 0, 1)
    assert not h.two_points and not h.non_disconnecting
