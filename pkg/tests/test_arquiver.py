"""Mesh-category tests: Hom dimensions by three independent routes,
orbit combinatorics against the polygon model, and the cluster-variable
dictionary."""
import itertools

import pytest

from clusterfrieze.arquiver import (
    CatObject,
    MeshWindow,
    ZQVertex,
    cat_object,
    cell_to_vertex,
    cluster_tilting_objects,
    cluster_variable_of,
    compatible,
    frieze_from_ct,
    glide,
    hom_c,
    hom_dim_mesh,
    hom_dim_mesh_paths,
    hom_dim_rectangle,
    mutate_ct,
    orbit_diagonal,
    sigma,
    sigma_inv,
    tau,
    vertex_to_cell,
)
from clusterfrieze.errors import InvalidInput, WindowTooSmall
from clusterfrieze.exchange import cluster_variables, enumerate_seeds
from clusterfrieze.frieze import (
    LightningBolt,
    bolt_to_quiver,
    domain_rep,
    enumerate_bolts,
    from_quiddity,
    fundamental_domain,
)
from clusterfrieze.laurent import LaurentPoly
from clusterfrieze.quiver import dynkin


def all_diagonals(N):
    return [
        (a, b)
        for a in range(1, N + 1)
        for b in range(a + 2, N + 1)
        if not (a == 1 and b == N)
    ]


def vertex_for_diagonal(n, d):
    return cell_to_vertex(domain_rep(n, d))


class TestCoordinates:
    def test_cell_vertex_round_trip(self):
        for i in range(1, 7):
            for m in range(-5, 6):
                v = ZQVertex(i, m)
                assert cell_to_vertex(vertex_to_cell(v)) == v

    def test_cell_map_values(self):
        assert vertex_to_cell(ZQVertex(1, 0)) == (0, 2)
        assert vertex_to_cell(ZQVertex(3, 4)) == (4, 8)
        assert cell_to_vertex((2, 5)) == ZQVertex(2, 2)

    def test_tau_and_sigma(self):
        v = ZQVertex(2, 3)
        assert tau(v) == ZQVertex(2, 2)
        assert sigma(4, v) == ZQVertex(3, 5)
        assert sigma_inv(4, sigma(4, v)) == v
        # glide on cells is (a, b) -> (b - N, a)
        for n in range(1, 6):
            for i in range(1, n + 1):
                for m in range(-3, 7):
                    w = ZQVertex(i, m)
                    a, b = vertex_to_cell(w)
                    assert vertex_to_cell(glide(n, w)) == (b - (n + 3), a)

    def test_tau_on_diagonals_rotates(self):
        assert tau(cat_object(6, (2, 5))) == CatObject(6, 1, 4)
        assert tau(cat_object(6, (1, 3))) == CatObject(6, 2, 6)
        with pytest.raises(InvalidInput):
            tau((1, 3))

    def test_vertex_range_checked(self):
        with pytest.raises(InvalidInput):
            sigma(2, ZQVertex(3, 0))
        with pytest.raises(InvalidInput):
            orbit_diagonal(2, ZQVertex(0, 1))


class TestOrbits:
    def test_orbit_diagonal_examples(self):
        assert orbit_diagonal(2, ZQVertex(1, 1)) == CatObject(5, 1, 3)
        assert orbit_diagonal(2, ZQVertex(2, 1)) == CatObject(5, 1, 4)
        assert orbit_diagonal(2, ZQVertex(1, 5)) == CatObject(5, 2, 5)
        assert orbit_diagonal(3, ZQVertex(3, 4)) == CatObject(6, 2, 4)

    def test_tau_equivariance(self):
        for n in range(1, 6):
            for i in range(1, n + 1):
                for m in range(-4, 9):
                    v = ZQVertex(i, m)
                    assert orbit_diagonal(n, tau(v)) == tau(orbit_diagonal(n, v))

    def test_sigma_acts_as_tau_on_orbits(self):
        for n in range(1, 6):
            for i in range(1, n + 1):
                for m in range(-4, 9):
                    v = ZQVertex(i, m)
                    assert orbit_diagonal(n, sigma(n, v)) == tau(orbit_diagonal(n, v))

    def test_glide_fixes_orbits(self):
        for n in range(1, 6):
            for i in range(1, n + 1):
                for m in range(-4, 9):
                    v = ZQVertex(i, m)
                    assert orbit_diagonal(n, glide(n, v)) == orbit_diagonal(n, v)

    def test_fundamental_domain_bijection(self):
        for n in range(1, 7):
            N = n + 3
            reps = {orbit_diagonal(n, cell_to_vertex(c)) for c in fundamental_domain(n)}
            assert len(reps) == n * (n + 3) // 2
            assert reps == {cat_object(N, d) for d in all_diagonals(N)}


class TestHomDims:
    def test_identity_is_one(self):
        w = MeshWindow(3, 0, 5)
        for v in w.vertices():
            assert hom_dim_mesh(w, v, v) == 1
            assert hom_dim_rectangle(3, v, v) == 1

    def test_boundary_composite_vanishes(self):
        # (1,m) -> (2,m) -> (1,m+1) is a zero relation, so the longer
        # route around through the top row must die with it
        w = MeshWindow(3, 0, 4)
        assert hom_dim_mesh(w, ZQVertex(1, 0), ZQVertex(1, 1)) == 0
        assert hom_dim_mesh(w, ZQVertex(1, 0), ZQVertex(2, 1)) == 0
        assert hom_dim_rectangle(3, ZQVertex(1, 0), ZQVertex(1, 1)) == 0

    def test_rank_two_hammock_by_hand(self):
        w = MeshWindow(2, 0, 4)
        X = ZQVertex(1, 1)
        assert {v for v in w.vertices() if hom_dim_mesh(w, X, v) == 1} == {
            ZQVertex(1, 1),
            ZQVertex(2, 1),
        }
        Y = ZQVertex(2, 1)
        assert {v for v in w.vertices() if hom_dim_mesh(w, Y, v) == 1} == {
            ZQVertex(2, 1),
            ZQVertex(1, 2),
        }

    def test_rectangle_equals_mesh_exhaustive(self):
        for n, m1 in [(1, 4), (2, 4), (3, 4)]:
            w = MeshWindow(n, 0, m1)
            for X, Y in itertools.product(w.vertices(), repeat=2):
                assert hom_dim_mesh(w, X, Y) == hom_dim_rectangle(n, X, Y), (n, X, Y)

    def test_mesh_equals_literal_path_quotient(self):
        # the union-find propagation against a brute-force rank
        # computation over the rationals
        for n, m1 in [(2, 4), (3, 4), (4, 3)]:
            w = MeshWindow(n, 0, m1)
            for X, Y in itertools.product(w.vertices(), repeat=2):
                assert hom_dim_mesh(w, X, Y) == hom_dim_mesh_paths(w, X, Y), (n, X, Y)

    def test_window_containment_required(self):
        w = MeshWindow(2, 0, 3)
        with pytest.raises(WindowTooSmall):
            hom_dim_mesh(w, ZQVertex(1, -1), ZQVertex(1, 2))
        with pytest.raises(WindowTooSmall):
            hom_dim_mesh_paths(w, ZQVertex(1, 0), ZQVertex(1, 4))

    def test_window_validation(self):
        with pytest.raises(InvalidInput):
            MeshWindow(0, 0, 3)
        with pytest.raises(InvalidInput):
            MeshWindow(2, 3, 1)
        w = MeshWindow(2, -1, 1)
        assert w.contains(ZQVertex(2, -1)) and not w.contains(ZQVertex(3, 0))
        assert len(w.vertices()) == 6


class TestOrbitCategory:
    def test_objects_are_rigid(self):
        for n in range(1, 5):
            N = n + 3
            for d in all_diagonals(N):
                v = vertex_for_diagonal(n, d)
                assert hom_c(n, v, sigma(n, v)) == 0

    def test_ext_vanishing_is_noncrossing(self):
        for n in range(2, 5):
            N = n + 3
            for d1, d2 in itertools.product(all_diagonals(N), repeat=2):
                X, Y = cat_object(N, d1), cat_object(N, d2)
                ext = hom_c(
                    n, vertex_for_diagonal(n, d1), sigma(n, vertex_for_diagonal(n, d2))
                )
                assert compatible(X, Y) == (ext == 0), (n, d1, d2)

    def test_ext_symmetry(self):
        n, N = 3, 6
        for d1, d2 in itertools.combinations(all_diagonals(N), 2):
            e1 = hom_c(n, vertex_for_diagonal(n, d1), sigma(n, vertex_for_diagonal(n, d2)))
            e2 = hom_c(n, vertex_for_diagonal(n, d2), sigma(n, vertex_for_diagonal(n, d1)))
            assert e1 == e2

    def test_compatible_rejects_mixed_polygons(self):
        with pytest.raises(InvalidInput):
            compatible(cat_object(5, (1, 3)), cat_object(6, (1, 3)))


class TestClusterTilting:
    def test_counts_are_catalan(self):
        assert [len(cluster_tilting_objects(n)) for n in (1, 2, 3, 4)] == [2, 5, 14, 42]

    def test_summands_pairwise_compatible_and_maximal(self):
        for n in (2, 3):
            N = n + 3
            for T in cluster_tilting_objects(n):
                assert len(T) == n
                for X, Y in itertools.combinations(T, 2):
                    assert compatible(X, Y)
                for d in all_diagonals(N):
                    extra = cat_object(N, d)
                    if extra in T:
                        continue
                    assert any(not compatible(extra, X) for X in T)

    def test_mutation_is_a_flip(self):
        for T in cluster_tilting_objects(2):
            for X in T:
                T2 = mutate_ct(T, X)
                assert len(T2) == 2 and len(T & T2) == 1
                back = next(iter(T2 - T))
                assert mutate_ct(T2, back) == T
        T = next(iter(cluster_tilting_objects(2)))
        outside = next(
            cat_object(5, d) for d in all_diagonals(5) if cat_object(5, d) not in T
        )
        with pytest.raises(InvalidInput):
            mutate_ct(T, outside)

    def test_flip_graph_is_the_pentagon(self):
        cts = cluster_tilting_objects(2)
        index = {T: i for i, T in enumerate(cts)}
        neighbors = {i: set() for i in index.values()}
        for T in cts:
            for X in T:
                neighbors[index[T]].add(index[mutate_ct(T, X)])
        assert all(len(nb) == 2 for nb in neighbors.values())
        # a connected 2-regular graph on 5 nodes is the 5-cycle
        seen, frontier = {0}, [0]
        while frontier:
            cur = frontier.pop()
            for nb in neighbors[cur]:
                if nb not in seen:
                    seen.add(nb)
                    frontier.append(nb)
        assert seen == set(neighbors)

    def test_frieze_from_ct_definition_example(self):
        T = frozenset(
            cat_object(9, d) for d in [(2, 9), (3, 9), (3, 8), (4, 8), (5, 8), (6, 8)]
        )
        f = frieze_from_ct(T)
        assert f == from_quiddity((1, 2, 3, 2, 2, 2, 1, 5, 3))
        for X in T:
            assert f.m(X.a, X.b) == 1

    def test_frieze_from_ct_rejects_mixed(self):
        bad = frozenset({cat_object(5, (1, 3)), cat_object(6, (2, 4))})
        with pytest.raises(InvalidInput):
            frieze_from_ct(bad)


class TestClusterVariableMap:
    def test_rank_one(self):
        bolt = LightningBolt([(1, 3)])
        assert str(cluster_variable_of(cat_object(4, (1, 3)), bolt)) == "x1"
        assert cluster_variable_of(cat_object(4, (2, 4)), bolt).pretty() == "2/x1"

    def test_bolt_summands_get_generators(self):
        for n in (2, 3):
            for bolt in enumerate_bolts(n):
                gens = {
                    str(cluster_variable_of(orbit_diagonal(n, cell_to_vertex(c)), bolt))
                    for c in bolt.cells
                }
                assert gens == {f"x{r}" for r in range(1, n + 1)}

    def test_phi_images_are_the_cluster_variables(self):
        for n, step in [(2, 1), (3, 4)]:
            N = n + 3
            for bolt in enumerate_bolts(n)[::step]:
                want = cluster_variables(bolt_to_quiver(bolt))
                got = frozenset(
                    cluster_variable_of(cat_object(N, d), bolt) for d in all_diagonals(N)
                )
                assert got == want

    def test_mesh_diamond_identity(self):
        # phi values satisfy the diamond rule across every mesh, with
        # out-of-band neighbors contributing 1
        bolt = LightningBolt([(2, 4), (1, 4), (1, 5)])
        n, N = 3, 6
        one = LaurentPoly.one(n)

        def phi(i, m):
            if i < 1 or i > n:
                return one
            return cluster_variable_of(orbit_diagonal(n, ZQVertex(i, m)), bolt)

        for m in range(1, N + 1):
            for i in range(1, n + 1):
                prod = phi(i, m) * phi(i, m + 1) - phi(i + 1, m) * phi(i - 1, m + 1)
                assert prod.is_one()

    def test_polygon_size_must_match(self):
        with pytest.raises(InvalidInput):
            cluster_variable_of(cat_object(6, (1, 3)), LightningBolt([(1, 3)]))

    def test_flip_graph_matches_exchange_graph(self):
        # CT mutation on diagonals and seed mutation agree for A_2:
        # both exchange structures are pentagons of the same size
        g = enumerate_seeds(dynkin("A", 2))
        assert len(g.nodes) == len(cluster_tilting_objects(2)) == 5
