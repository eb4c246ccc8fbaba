from fractions import Fraction

import pytest

from shimura_cert.arith import QuadExtElem, class_number, kronecker
from shimura_cert.shimura_graph import V1, Edge, Graph, Vertex, analyse_graph
from shimura_cert.winding import (
    CycleFailure,
    CyclePath,
    boundary,
    cycle_shape_report,
    eisenstein_vector,
    find_cycle_combination,
    gross_vector,
    gross_vectors,
    lift_to_desingularized,
    push_vertices,
)
from shimura_cert.winding.gross import coefficient_denominator, edge_embedding_counts

# class-number-one orders and their (integer) j-invariants
CM_J = {3: 0, 4: 1728, 12: 54000, 16: 287496, 27: -12288000, 67: -147197952000}


@pytest.fixture(scope="module", params=[(13, 11), (17, 11), (5, 23)], ids=str)
def bundle(request):
    return analyse_graph(*request.param)


def test_eisenstein_weights():
    assert eisenstein_vector(11).weight == Fraction(10, 12)
    assert eisenstein_vector(251).weight == Fraction(250, 12)
    assert sorted(eisenstein_vector(11).entries) == [Fraction(1, 3), Fraction(1, 2)]
    with pytest.raises(ValueError):
        eisenstein_vector(3)


def test_coefficient_denominators():
    assert [coefficient_denominator(w) for w in (1, 2, 3)] == [1, 1, 2]
    assert [coefficient_denominator(w, "units") for w in (1, 2, 3)] == [1, 2, 3]
    with pytest.raises(ValueError):
        coefficient_denominator(2, "mass")


def test_boundary_of_simple_vectors():
    g = Graph([Vertex(V1, i, 1) for i in range(3)], [Edge(0, 1, 1), Edge(1, 2, 1), Edge(2, 0, 1)])
    assert boundary(g, [1, 1, 1]) == [0, 0, 0]
    assert boundary(g, [1, 0, 0]) == [-1, 1, 0]
    assert boundary(g, [0, 0, 0]) == [0, 0, 0]


def test_embedding_sum_over_edges(bundle):
    """Total optimal embeddings into the level-p classes: h(-D)(1 - chi(q))(1 + chi(p))."""
    g = bundle.graph
    discs = [D for D in (3, 4, 7, 8, 11, 12, 15, 16, 19, 20, 24, 27, 35, 40) if g.p % D and g.q % D]
    counts = edge_embedding_counts(g, discs)
    for D in discs:
        want = class_number(D) * (1 - kronecker(-D, g.q)) * (1 + kronecker(-D, g.p))
        assert sum(counts[D]) == want, D


def test_gross_vector_support_lies_over_cm_points(bundle):
    g = bundle.graph
    for D, j in CM_J.items():
        v = gross_vector(g, D)
        if v.flag:
            assert not any(v.coefficients)
            continue
        root = QuadExtElem(j % g.q, 0, g.q)
        for k in v.support():
            e = g.edges[k]
            assert g.vertices[e.source].j == root and g.vertices[e.target].j == root


def test_flagged_vector_is_zero(bundle_13_11):
    g = bundle_13_11.graph
    # -7 is a square mod 11, so 11 splits
    v = gross_vector(g, 7)
    assert v.flag and "splits" in v.flag and not any(v.coefficients)


def test_cleared_vectors_are_integral(bundle):
    for v in gross_vectors(bundle.graph, [3, 4, 12, 16]).values():
        assert all((6 * c).denominator == 1 for c in v.coefficients)
        assert all(c >= 0 for c in v.coefficients)


def test_pushforward_commutes_with_boundary(bundle):
    g, Q = bundle.graph, bundle.quotient
    for v in gross_vectors(g, [3, 4, 12]).values():
        assert boundary(Q, v.pushforward(Q)) == push_vertices(Q, boundary(g, v.coefficients))
        lifted = lift_to_desingularized(bundle.desingularized, v.pushforward(Q))
        assert (not any(boundary(Q, v.pushforward(Q)))) <= (not any(boundary(bundle.desingularized, lifted)))


def test_no_discriminants(bundle_13_11):
    res = find_cycle_combination(bundle_13_11, [])
    assert isinstance(res, CycleFailure) and not res.found


def test_cycle_search_small(bundle):
    discs = [D for D in CM_J if not gross_vector(bundle.graph, D).flag]
    res = find_cycle_combination(bundle, discs)
    if isinstance(res, CyclePath):
        D = bundle.desingularized
        assert res.boundary_zero and not any(boundary(D, res.edge_vector))
        assert res.prime_to_p
        assert bundle.exceptional in {D.edges[k].source for k in res.exceptional_edges} | {
            D.edges[k].target for k in res.exceptional_edges}
        shape = cycle_shape_report(res, D)
        assert shape.components >= 1
    else:
        assert res.reason


def test_cycle_shape_on_toy_cycle():
    g = Graph([Vertex(V1, i, 1) for i in range(4)], [Edge(0, 1, 1), Edge(1, 0, 1), Edge(2, 3, 1), Edge(3, 2, 1)])
    c = CyclePath(5, [4], [1], [Fraction(1)] * 4, [0], Fraction(1), True)
    shape = cycle_shape_report(c, g)
    assert shape.components == 2 and shape.component_vertices == [[0, 1], [2, 3]]
    assert shape.per_disc[4]["splitting"] == "split"
    with pytest.raises(ValueError):
        cycle_shape_report(CyclePath(5, [4], [1], [Fraction(1), 0, 0, 0], [0], Fraction(1), False), g)


@pytest.mark.slow
def test_e4_sits_on_the_width_two_edges(bundle_137_251):
    b = bundle_137_251
    v = gross_vector(b.graph, 4)
    assert sorted(v.support()) == sorted(k for k, e in enumerate(b.graph.edges) if e.width == 2)
    pushed = v.pushforward(b.quotient)
    assert [k for k, c in enumerate(pushed) if c] == [b.desingularized.blowup_of[b.exceptional]]
