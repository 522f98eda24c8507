import random

import pytest

from twinmis.embedding import embed_full, embed_minimal, project
from twinmis.generators import random_graph
from twinmis.graph import GraphError, build_graph, is_mis, weight_of
from twinmis.orthogonality import validate_pairing
from twinmis.solvers import solve_max
from oracles import all_graphs, brute_mis, brute_opt


def _check_info(info):
    G, E = info.original, info.embedded
    assert info.original_vertices | info.added_vertices == E.vertices
    assert E.induced(info.original_vertices) == G
    for p in info.added_vertices:
        assert E.weights[p] == 0
        assert E.neighbors(p) == {info.attach[p]}
    validate_pairing(E, info.pairing)


def test_embed_full_triangle(k3):
    info = embed_full(k3)
    assert info.embedded.n == 6
    assert info.pairing.pairs == ((0, 3), (1, 4), (2, 5))
    assert info.attach == {3: 0, 4: 1, 5: 2}
    _check_info(info)


def test_embed_full_trivial_cases():
    info = embed_full(build_graph(0, [], []))
    assert info.embedded.n == 0 and info.pairing.pairs == ()
    info = embed_full(build_graph(1, [5], []))
    assert info.embedded.weights == (5, 0) and info.embedded.edges() == [(0, 1)]


def test_embed_minimal_examples(p4, k3, edge):
    info = embed_minimal(p4)
    assert info.added_vertices == frozenset()
    assert info.pairing.pairs == ((0, 1), (2, 3))
    assert embed_minimal(k3).embedded == embed_full(k3).embedded
    assert embed_minimal(edge).embedded == edge


def test_project_examples(k3, edge):
    info = embed_full(k3)
    assert project(info, {0, 4, 5}) == {0}
    assert project(embed_minimal(edge), {0}) == {0}


def test_project_repairs_zero_weight_ties():
    G = build_graph(2, [0, 0], [(0, 1)])
    info = embed_full(G)
    assert is_mis(info.embedded, {2, 3})
    assert project(info, {2, 3}) == {0}


def test_project_rejects_non_mis(k3):
    with pytest.raises(GraphError):
        project(embed_full(k3), {0})


@pytest.mark.parametrize("embed", [embed_full, embed_minimal])
@pytest.mark.parametrize("n", range(1, 6))
def test_embedding_exhaustive(embed, n):
    rng = random.Random(n)
    for G in all_graphs(n):
        G = G.with_weights([rng.randint(0, 3) for _ in range(n)])
        info = embed(G)
        _check_info(info)
        assert len(info.added_vertices) <= n
        embedded_mis = brute_mis(info.embedded)
        restricted = {U & info.original_vertices for U in embedded_mis}
        for U in brute_mis(G):
            assert U in restricted
        assert brute_opt(info.embedded) == brute_opt(G)
        for Ue in embedded_mis:
            assert is_mis(G, project(info, Ue))


def test_minimal_never_adds_more_than_full():
    rng = random.Random(5)
    for _ in range(300):
        G = random_graph(rng.randint(0, 12), rng.random(), rng, 0, 5)
        assert len(embed_minimal(G).added_vertices) <= len(embed_full(G).added_vertices)


@pytest.mark.parametrize("embed", [embed_full, embed_minimal])
def test_optimum_preserved_randomized(embed):
    rng = random.Random(17)
    for _ in range(150):
        G = random_graph(rng.randint(1, 12), rng.random(), rng, 0, 6)
        info = embed(G)
        inner = solve_max(info.embedded)
        U = project(info, inner.set)
        assert is_mis(G, U)
        assert weight_of(G, U) == inner.weight == solve_max(G).weight
