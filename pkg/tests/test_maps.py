import pytest

from tamarimaps import (
    PlanarMap,
    closed_form,
    compose_parallel,
    compose_series,
    double_edge_map,
    enumerate_nonseparable,
    enumerate_nonseparable_by_composition,
    parallel_components,
    series_components,
    single_edge_map,
    single_loop_map,
)
from tamarimaps.maps import SeriesBrick, _multigraph_blocks


def triangle_map():
    # three vertices in a cycle; at each vertex the two darts in clockwise
    # order; built by hand, rooted along one side
    # vertices: {0,5}, {1,2}, {3,4}; edges (0,1), (2,3), (4,5)
    return PlanarMap((5, 2, 1, 4, 3, 0), 0)


def _with_pendant(M):
    # attach a new degree-1 vertex at the root vertex (always separable)
    from tamarimaps.maps import map_from_rotations

    rotations = [list(cyc) for cyc in M.rotations()]
    for cyc in rotations:
        if M.root in cyc:
            cyc.insert(cyc.index(M.root) + 1, "pendant-in")
    rotations.append(["pendant-out"])
    twin = {d: d ^ 1 for d in range(M.dart_count)}
    twin["pendant-in"] = "pendant-out"
    twin["pendant-out"] = "pendant-in"
    return map_from_rotations(rotations, twin, M.root)


def _with_loop(M):
    # attach a contractible loop at the root vertex (always separable)
    from tamarimaps.maps import map_from_rotations

    rotations = [list(cyc) for cyc in M.rotations()]
    for cyc in rotations:
        if M.root in cyc:
            at = cyc.index(M.root) + 1
            cyc[at:at] = ["loop-a", "loop-b"]
    twin = {d: d ^ 1 for d in range(M.dart_count)}
    twin["loop-a"] = "loop-b"
    twin["loop-b"] = "loop-a"
    return map_from_rotations(rotations, twin, M.root)


class TestPlanarMapBasics:
    def test_validation(self):
        with pytest.raises(ValueError):
            PlanarMap((0, 1, 2), 0)  # odd dart count
        with pytest.raises(ValueError):
            PlanarMap((0, 0, 1, 2), 0)  # not a permutation
        with pytest.raises(ValueError):
            PlanarMap((1, 0, 3, 2), 0)  # disconnected (two loops apart)

    def test_euler_gate_rejects_torus(self):
        # one vertex, two crossing loops: V=1, E=2, F=1 -> genus 1
        with pytest.raises(ValueError):
            PlanarMap((2, 3, 1, 0), 0)

    def test_single_edge(self):
        M = single_edge_map()
        assert (M.vertex_count, M.edge_count, M.face_count) == (2, 1, 1)
        assert M.outer_face_degree == 2

    def test_single_loop(self):
        M = single_loop_map()
        assert (M.vertex_count, M.edge_count, M.face_count) == (1, 1, 2)
        assert M.has_loop()

    def test_faces_of_double_edge(self):
        M = double_edge_map()
        assert sorted(len(f) for f in M.faces()) == [2, 2]

    def test_faces_of_triangle(self):
        M = triangle_map()
        assert (M.vertex_count, M.edge_count, M.face_count) == (3, 3, 2)
        assert sorted(len(f) for f in M.faces()) == [3, 3]

    def test_tree_shaped_map_has_one_face(self):
        # a path with two edges
        M = PlanarMap((0, 2, 1, 3), 0)
        assert M.face_count == 1
        assert M.outer_face_degree == 4

    def test_text_round_trip(self):
        for M in (single_edge_map(), double_edge_map(), triangle_map()):
            assert PlanarMap.from_text(M.to_text()) == M

    def test_text_rejects_garbage(self):
        with pytest.raises(ValueError):
            PlanarMap.from_text("darts 4\nroot 1\n")
        with pytest.raises(ValueError):
            PlanarMap.from_text("darts 4\nroot 1\nsigma 3 4 1\n")


class TestNonSeparability:
    def test_examples(self):
        assert double_edge_map().is_non_separable()
        assert not single_edge_map().is_non_separable()
        assert not single_loop_map().is_non_separable()
        assert triangle_map().is_non_separable()

    def test_two_loops_at_one_vertex(self):
        M = PlanarMap((1, 2, 3, 0), 0)  # bouquet of two loops, planar
        assert not M.is_non_separable()

    def test_agrees_with_bipartition_oracle(self, maps_by_edges):
        # definitional oracle on every connected planar map with <= 4 edges
        from itertools import permutations

        for m in (2, 3, 4):
            seen = set()
            for sigma in permutations(range(2 * m)):
                try:
                    M = PlanarMap(sigma, 0)
                except ValueError:
                    continue
                code = M.canonical_code()
                if code in seen:
                    continue
                seen.add(code)
                witness = M.separating_bipartition()
                assert M.is_non_separable() == (witness is None and m >= 2)

    def test_oracle_at_five_edges(self, maps_by_edges):
        # the whole 5-edge census is witness-free, and pendant or loop
        # attachments to the 4-edge census always produce a witness
        for M in maps_by_edges[5]:
            assert M.separating_bipartition() is None
        for M in maps_by_edges[4]:
            for grown in (_with_pendant(M), _with_loop(M)):
                assert grown.edge_count == 5
                assert not grown.is_non_separable()
                assert grown.separating_bipartition() is not None

    def test_bipartition_witness_shape(self):
        witness = single_loop_map().separating_bipartition()
        assert witness is None  # one edge only: no bipartition exists
        M = PlanarMap((1, 2, 3, 0), 0)
        sides = M.separating_bipartition()
        assert sides is not None and set(sides[0] | sides[1]) == {0, 1}


class TestCanonicalCode:
    def test_relabeling_invariance(self):
        M = triangle_map()
        # conjugate sigma by swapping the two non-root edge pairs
        swap = [0, 1, 4, 5, 2, 3]
        sigma = [0] * 6
        for d in range(6):
            sigma[swap[d]] = swap[M.sigma[d]]
        relabeled = PlanarMap(sigma, 0)
        assert relabeled.canonical_code() == M.canonical_code()
        assert relabeled.canonical_form() == M.canonical_form()

    def test_codes_separate_the_census(self, maps_by_edges):
        for m in (2, 3, 4):
            codes = {M.canonical_code() for M in maps_by_edges[m]}
            assert len(codes) == len(maps_by_edges[m])

    def test_code_survives_text_round_trip(self):
        M = triangle_map()
        assert PlanarMap.from_text(M.to_text()).canonical_code() == M.canonical_code()

    def test_rerooting_changes_the_code(self):
        # an asymmetric 4-edge map: a cycle with one side doubled; reversing
        # the root is not an automorphism there
        M = compose_series(
            [SeriesBrick(double_edge_map(), 1), SeriesBrick(single_edge_map(), 1)]
        )
        rerooted = PlanarMap(M.sigma, M.root ^ 1)
        assert rerooted.canonical_code() != M.canonical_code()

    def test_edge_reversal_symmetry_of_the_triangle(self):
        # the triangle admits the sphere rotation swapping a root dart with
        # its twin, so those two rootings share one code
        M = triangle_map()
        assert PlanarMap(M.sigma, 1).canonical_code() == M.canonical_code()


class TestDuality:
    def test_degree_swap(self, maps_by_edges):
        for m in range(2, 6):
            for M in maps_by_edges[m]:
                D = M.dual()
                assert D.edge_count == M.edge_count
                assert D.root_vertex_degree == M.outer_face_degree
                assert D.outer_face_degree == M.root_vertex_degree

    def test_preserves_non_separability(self, maps_by_edges):
        for m in range(2, 6):
            for M in maps_by_edges[m]:
                assert M.dual().is_non_separable()

    def test_involution(self, maps_by_edges):
        for m in range(2, 6):
            for M in maps_by_edges[m]:
                assert M.dual().dual() == M

    def test_double_edge_is_self_dual(self):
        M = double_edge_map()
        assert M.dual().is_isomorphic_to(M)

    def test_vertex_face_swap(self, maps_by_edges):
        for m in range(2, 6):
            for M in maps_by_edges[m]:
                D = M.dual()
                assert (D.vertex_count, D.face_count) == (M.face_count, M.vertex_count)

    def test_dual_is_a_census_involution(self, maps_by_edges):
        for m in range(2, 6):
            codes = {M.canonical_code() for M in maps_by_edges[m]}
            assert {M.dual().canonical_code() for M in maps_by_edges[m]} == codes


class TestCensus:
    def test_brute_force_counts(self, brute_maps_by_edges):
        assert [len(brute_maps_by_edges[m]) for m in range(2, 6)] == [1, 2, 6, 22]

    def test_counts_match_closed_form(self, brute_maps_by_edges):
        for m in range(2, 6):
            assert len(brute_maps_by_edges[m]) == closed_form(m - 2)

    def test_minimum_size_rejected(self):
        with pytest.raises(ValueError):
            enumerate_nonseparable(1)

    def test_composition_census_matches_brute_force(self, brute_maps_by_edges):
        for m in range(2, 6):
            composed = enumerate_nonseparable_by_composition(m)
            assert {M.canonical_code() for M in composed} == {
                M.canonical_code() for M in brute_maps_by_edges[m]
            }

    def test_composition_census_at_six_edges(self, maps_by_edges):
        assert len(maps_by_edges[6]) == closed_form(4) == 91

    def test_all_members_validate(self, maps_by_edges):
        for m in range(2, 7):
            for M in maps_by_edges[m]:
                assert M.is_non_separable()
                assert M.vertex_count - M.edge_count + M.face_count == 2


class TestSeriesDecomposition:
    def test_double_edge(self):
        bricks = series_components(double_edge_map())
        assert len(bricks) == 1
        assert bricks[0].component.edge_count == 1
        assert bricks[0].exposed == 1

    def test_round_trip(self, maps_by_edges):
        for m in range(2, 7):
            for M in maps_by_edges[m]:
                bricks = series_components(M)
                assert sum(K.edge_count for K, _ in bricks) == m - 1
                rebuilt = compose_series(bricks)
                assert rebuilt.is_isomorphic_to(M)

    def test_exposure_counts_give_outer_degree(self, maps_by_edges):
        for m in range(2, 6):
            for M in maps_by_edges[m]:
                bricks = series_components(M)
                assert M.outer_face_degree - 1 == sum(j for _, j in bricks)

    def test_compose_validates_bricks(self):
        with pytest.raises(ValueError):
            compose_series([])
        with pytest.raises(ValueError):
            compose_series([SeriesBrick(single_loop_map(), 1)])
        with pytest.raises(ValueError):
            compose_series([SeriesBrick(double_edge_map(), 2)])

    def test_compose_output_is_non_separable(self, brute_maps_by_edges):
        for K in brute_maps_by_edges[3]:
            for j in range(1, K.outer_face_degree):
                M = compose_series([SeriesBrick(single_edge_map(), 1), SeriesBrick(K, j)])
                assert M.is_non_separable()
                assert M.edge_count == 5


class TestParallelDecomposition:
    def test_double_edge(self):
        bricks = parallel_components(double_edge_map())
        assert len(bricks) == 1
        assert bricks[0].component.has_loop()
        assert bricks[0].root_side == 1

    def test_round_trip(self, maps_by_edges):
        for m in range(2, 7):
            for M in maps_by_edges[m]:
                bricks = parallel_components(M)
                assert sum(K.edge_count for K, _ in bricks) == m - 1
                rebuilt = compose_parallel(bricks)
                assert rebuilt.is_isomorphic_to(M)

    def test_root_side_counts_give_root_degree(self, maps_by_edges):
        for m in range(2, 6):
            for M in maps_by_edges[m]:
                bricks = parallel_components(M)
                assert M.root_vertex_degree - 1 == sum(j for _, j in bricks)

    def test_duality_exchanges_the_decompositions(self, maps_by_edges):
        # series bricks of the dual are the duals of the parallel bricks
        for m in range(2, 6):
            for M in maps_by_edges[m]:
                series_of_dual = [
                    (K.canonical_code(), j) for K, j in series_components(M.dual())
                ]
                parallel_dualized = [
                    (K.dual().canonical_code(), j) for K, j in parallel_components(M)
                ]
                assert sorted(series_of_dual) == sorted(parallel_dualized)


class TestBlocks:
    def test_bridge_and_cycle(self):
        # path a-b plus double edge b-c: two blocks, cut vertex b
        edges = [(0, 0, 1), (1, 1, 2), (2, 1, 2)]
        blocks, cuts = _multigraph_blocks(3, edges)
        assert sorted(sorted(b) for b in blocks) == [[0], [1, 2]]
        assert cuts == {1}

    def test_loops_rejected(self):
        with pytest.raises(ValueError):
            _multigraph_blocks(1, [(0, 0, 0)])
