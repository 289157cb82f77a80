import pytest

import mutvis


def test_path_has_two():
    g = mutvis.Graph(4, [(0, 1), (1, 2), (2, 3)])
    r = mutvis.mu_set(g)
    assert r.mu == 2
    assert r.set == [0, 3]
    assert r.removed_sigma == [1, 2]
    assert r.shape == "no-t-arrow"


def test_complete_bipartite():
    g = mutvis.family("complete-bipartite", [2, 3])
    r = mutvis.mu_set(g)
    assert r.mu == 4
    assert r.removed_extra == [(0, "special-vertex")]
    assert mutvis.mu_bruteforce(g)[0] == 4


def test_random_graphs_agree_with_oracle():
    for seed in range(1, 30):
        g = mutvis.random_dh(9, seed)
        r = mutvis.mu_set(g)
        assert mutvis.is_mutual_visibility_set(g, r.set)
        assert r.mu == mutvis.mu_bruteforce(g)[0]


def test_recognition_and_errors():
    c5 = mutvis.Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert not mutvis.is_distance_hereditary(c5)
    assert not mutvis.is_dh_metric(c5)
    with pytest.raises(mutvis.NotDistanceHereditaryError):
        mutvis.mu_set(c5)
    with pytest.raises(mutvis.DisconnectedGraphError):
        mutvis.mu_set(mutvis.Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        mutvis.Graph(2, [(0, 5)])
    with pytest.raises(mutvis.CapExceededError):
        mutvis.mu_bruteforce(mutvis.family("path", [20]))


def test_decompose_octahedron():
    d = mutvis.decompose(mutvis.family("octahedron"))
    assert d["shape"] == "head-connected"
    assert len(d["t_arrows"]) == 3
    assert sorted(b["type"] for b in d["bags"]) == ["K", "S", "S", "S"]
    assert "digraph" in mutvis.decomposition_dot(mutvis.family("octahedron"))


def test_edge_list_round_trip():
    g = mutvis.random_dh(40, 5)
    assert mutvis.parse_edge_list(mutvis.to_edge_list(g)) == g
    assert mutvis.cut_vertices(mutvis.family("path", [3])) == [1]
