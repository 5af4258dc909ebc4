from itertools import product

import pytest
from hypothesis import given

from conftest import canopies_with_element
from tamarimaps import (
    CanopyInterval,
    DyckPath,
    GridPath,
    PathPair,
    PointedSyncInterval,
    SyncInterval,
    canopy_to_sync,
    catalan,
    closed_form,
    compose_intervals,
    count_canopy_intervals_of_length,
    decompose_interval,
    dyck_rotation_covers,
    dyck_to_pathpair,
    enumerate_canopy_intervals,
    enumerate_dyck_paths,
    enumerate_sync_intervals,
    enumerate_tam,
    pathpair_to_dyck,
    sync_to_canopy,
    tam_covers,
    tamari_leq,
)
from tamarimaps.tamari import dyck_paths_by_type, enumerate_pointed_intervals, tam_leq


def all_canopies(n):
    return [GridPath("".join(w)) for w in product("EN", repeat=n)]


class TestOrder:
    def test_examples(self):
        assert tamari_leq(DyckPath("udud"), DyckPath("uudd"))
        assert not tamari_leq(DyckPath("uudd"), DyckPath("udud"))
        P = DyckPath("uududd")
        assert tamari_leq(P, P)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            tamari_leq(DyckPath("ud"), DyckPath("uudd"))

    def test_partial_order_axioms(self):
        paths = enumerate_dyck_paths(5)
        for P in paths:
            assert tamari_leq(P, P)
        for P in paths:
            for Q in paths:
                if tamari_leq(P, Q) and tamari_leq(Q, P):
                    assert P == Q
        leq = {
            (P.word, Q.word) for P in paths for Q in paths if tamari_leq(P, Q)
        }
        for a, b in leq:
            for c in paths:
                if (b, c.word) in leq:
                    assert (a, c.word) in leq

    def test_rotation_examples(self):
        assert [c.word for c in dyck_rotation_covers(DyckPath("udud"))] == ["uudd"]
        assert dyck_rotation_covers(DyckPath("uuuddd")) == []
        assert dyck_rotation_covers(DyckPath("ud" * 2))

    def test_rotation_closure_matches_leq(self):
        # cover closure is the independent oracle for the distance criterion
        for n in range(1, 7):
            paths = enumerate_dyck_paths(n)
            reach = {}
            for P in paths:
                seen = {P.word}
                stack = [P]
                while stack:
                    for c in dyck_rotation_covers(stack.pop()):
                        if c.word not in seen:
                            seen.add(c.word)
                            stack.append(c)
                reach[P.word] = seen
            for P in paths:
                for Q in paths:
                    assert (Q.word in reach[P.word]) == tamari_leq(P, Q)


class TestCanopyLattice:
    def test_enumerate_examples(self):
        assert [p.word for p in enumerate_tam(GridPath("EN"))] == ["EN", "NE"]
        assert [p.word for p in enumerate_tam(GridPath("NNN"))] == ["NNN"]
        assert len(enumerate_tam(GridPath("EEN"))) == 3

    def test_cover_examples(self):
        assert [c.word for c in tam_covers(GridPath("EN"), GridPath("EN"))] == ["NE"]
        assert tam_covers(GridPath("EN"), GridPath("NE")) == []
        assert tam_covers(GridPath("NE"), GridPath("NE")) == []

    def test_top_element_has_no_cover(self):
        for v in all_canopies(4):
            top = GridPath("N" * v.north_count + "E" * v.east_count)
            assert tam_covers(v, top) == []

    def test_cover_rejects_outside_element(self):
        with pytest.raises(ValueError):
            tam_covers(GridPath("NE"), GridPath("EN"))

    def test_partition_identity(self):
        # canopy lattices of length n-1 partition the size-n Dyck paths
        for n in range(1, 11):
            total = sum(len(enumerate_tam(v)) for v in all_canopies(n - 1))
            assert total == catalan(n)

    def test_covers_stay_in_lattice(self):
        for v in all_canopies(4):
            for e in enumerate_tam(v):
                for c in tam_covers(v, e):
                    assert c.weakly_above(v)


class TestPathPairBijection:
    def test_examples(self):
        assert dyck_to_pathpair(DyckPath("ud")) == PathPair(GridPath(""), GridPath(""))
        assert dyck_to_pathpair(DyckPath("udud")) == PathPair(GridPath("N"), GridPath("N"))
        assert dyck_to_pathpair(DyckPath("uudd")) == PathPair(GridPath("E"), GridPath("E"))

    def test_inverse_examples(self):
        assert pathpair_to_dyck(PathPair(GridPath(""), GridPath(""))).word == "ud"
        assert pathpair_to_dyck(PathPair(GridPath("N"), GridPath("N"))).word == "udud"
        assert pathpair_to_dyck(PathPair(GridPath("E"), GridPath("E"))).word == "uudd"

    def test_search_oracle(self):
        # the reconstruction agrees with a brute-force preimage search
        for n in range(1, 9):
            by_pair = {}
            for P in enumerate_dyck_paths(n):
                pp = dyck_to_pathpair(P)
                assert pp.upper.weakly_above(pp.canopy)
                assert pp.canopy == P.type_of()
                key = (pp.upper.word, pp.canopy.word)
                assert key not in by_pair, "bijection is not injective"
                by_pair[key] = P
            for (upper, canopy), P in by_pair.items():
                rebuilt = pathpair_to_dyck(PathPair(GridPath(upper), GridPath(canopy)))
                assert rebuilt == P

    def test_image_fills_each_lattice(self):
        for v in all_canopies(5):
            n = len(v) + 1
            fiber = [P for P in enumerate_dyck_paths(n) if P.type_of() == v]
            images = {dyck_to_pathpair(P).upper.word for P in fiber}
            assert images == {e.word for e in enumerate_tam(v)}

    def test_order_isomorphism_covers_to_covers(self):
        # within a fiber, rotation covers map exactly onto lattice covers
        for k in range(0, 6):
            for v in all_canopies(k):
                n = k + 1
                fiber = {P.word: P for P in enumerate_dyck_paths(n) if P.type_of() == v}
                for P in fiber.values():
                    image = dyck_to_pathpair(P).upper
                    fiber_covers = {
                        dyck_to_pathpair(c).upper.word
                        for c in dyck_rotation_covers(P)
                        if c.word in fiber
                    }
                    assert fiber_covers == {c.word for c in tam_covers(v, image)}

    def test_invalid_pair_reported(self):
        # pairs without a preimage cannot even be built: the pair type
        # rejects crossing or mismatched paths, and every valid pair has a
        # preimage (test_image_fills_each_lattice)
        with pytest.raises(ValueError):
            PathPair(GridPath("EN"), GridPath("NE"))
        with pytest.raises(ValueError):
            PathPair(GridPath("EE"), GridPath("EN"))


class TestIntervals:
    def test_sync_validation(self):
        SyncInterval(DyckPath("uuddud"), DyckPath("uududd"))
        with pytest.raises(ValueError):
            SyncInterval(DyckPath("udud"), DyckPath("uudd"))  # different types
        with pytest.raises(ValueError):
            SyncInterval(DyckPath("uududd"), DyckPath("uuddud"))  # wrong order

    def test_text_round_trip(self):
        I = SyncInterval(DyckPath("uuddud"), DyckPath("uududd"))
        assert SyncInterval.from_text(I.to_text()) == I
        empty = SyncInterval(DyckPath(""), DyckPath(""))
        assert SyncInterval.from_text(empty.to_text()) == empty

    def test_enumeration_counts(self):
        assert [i.to_text() for i in enumerate_sync_intervals(1)] == ["ud|ud"]
        assert [i.to_text() for i in enumerate_sync_intervals(2)] == [
            "udud|udud",
            "uudd|uudd",
        ]
        assert len(enumerate_sync_intervals(5)) == 91

    def test_counts_match_closed_form(self, sync_by_size):
        for n in range(1, 8):
            assert len(sync_by_size[n]) == closed_form(n - 1)


class TestSyncCanopyBijection:
    def test_examples(self):
        empty = sync_to_canopy(SyncInterval(DyckPath("ud"), DyckPath("ud")))
        assert empty.to_text() == "||"
        one = sync_to_canopy(SyncInterval(DyckPath("udud"), DyckPath("udud")))
        assert one.to_text() == "N|N|N"

    def test_round_trip(self, sync_by_size):
        for n in range(1, 7):
            for I in sync_by_size[n]:
                C = sync_to_canopy(I)
                assert canopy_to_sync(C) == I

    def test_canopy_counts(self):
        # canopy intervals of length n are counted by the closed form at n,
        # summed over the cover-closure interval counts of every lattice
        for n in range(0, 8):
            assert count_canopy_intervals_of_length(n) == closed_form(n)

    def test_canopy_fibers_at_length_two(self):
        sizes = {v.word: len(enumerate_canopy_intervals(v)) for v in all_canopies(2)}
        assert sizes == {"NN": 1, "NE": 1, "EN": 3, "EE": 1}

    def test_bijection_onto_canopy_intervals(self, sync_by_size):
        for n in range(1, 6):
            images = {sync_to_canopy(I).to_text() for I in sync_by_size[n]}
            direct = {
                C.to_text()
                for v in all_canopies(n - 1)
                for C in enumerate_canopy_intervals(v)
            }
            assert images == direct

    def test_canopy_interval_validation(self):
        CanopyInterval(GridPath("NE"), GridPath("EN"), GridPath("EN"))
        with pytest.raises(ValueError):
            CanopyInterval(GridPath("EN"), GridPath("NE"), GridPath("EN"))

    def test_tam_leq_matches_cover_closure(self):
        for k in range(1, 6):
            for v in all_canopies(k):
                elements = enumerate_tam(v)
                reach = {}
                for e in elements:
                    seen = {e.word}
                    stack = [e]
                    while stack:
                        for c in tam_covers(v, stack.pop()):
                            if c.word not in seen:
                                seen.add(c.word)
                                stack.append(c)
                    reach[e.word] = seen
                for a in elements:
                    for b in elements:
                        assert (b.word in reach[a.word]) == tam_leq(v, a, b)


class TestComposition:
    def test_trivial_example(self):
        empty = SyncInterval(DyckPath(""), DyckPath(""))
        out = compose_intervals(PointedSyncInterval(empty, 0), empty)
        assert out.to_text() == "ud|ud"

    def test_spec_example(self):
        base = SyncInterval(DyckPath("udud"), DyckPath("udud"))
        out = compose_intervals(
            PointedSyncInterval(base, 1), SyncInterval(DyckPath(""), DyckPath(""))
        )
        assert out.to_text() == "uuddud|uududd"

    def test_pointing_bounds(self):
        base = SyncInterval(DyckPath("udud"), DyckPath("udud"))
        PointedSyncInterval(base, 1)
        PointedSyncInterval(base, 2)
        with pytest.raises(ValueError):
            PointedSyncInterval(base, 0)
        with pytest.raises(ValueError):
            PointedSyncInterval(base, 3)

    def test_decompose_empty_rejected(self):
        with pytest.raises(ValueError):
            decompose_interval(SyncInterval(DyckPath(""), DyckPath("")))

    def test_round_trip(self, sync_by_size):
        for n in range(1, 8):
            for I in sync_by_size[n]:
                pointed, rest = decompose_interval(I)
                assert compose_intervals(pointed, rest) == I

    def test_compose_is_bijective(self, sync_by_size):
        for n in range(1, 6):
            built = set()
            for k in range(0, n):
                for pointed in enumerate_pointed_intervals(k):
                    for rest in sync_by_size[n - 1 - k]:
                        I = compose_intervals(pointed, rest)
                        assert I.size == n
                        key = I.to_text()
                        assert key not in built
                        built.add(key)
            assert built == {I.to_text() for I in sync_by_size[n]}

    def test_contacts_recursion(self, sync_by_size):
        # contacts(P)-1 adds up: lifted left part plus the unchanged tail
        for n in range(1, 6):
            for k in range(0, n):
                for pointed in enumerate_pointed_intervals(k):
                    for rest in sync_by_size[n - 1 - k]:
                        I = compose_intervals(pointed, rest)
                        left, right = pointed.split_lower()
                        lifted = DyckPath("u" + left.word + "d" + right.word)
                        assert I.lower.contacts() - 1 == (lifted.contacts() - 1) + (
                            rest.lower.contacts() - 1
                        )


class TestCanopyProperties:
    @given(canopies_with_element())
    def test_covers_are_strictly_greater(self, pair):
        v, element = pair
        for c in tam_covers(v, element):
            assert c != element
            assert tam_leq(v, element, c)
            assert not tam_leq(v, c, element)

    @given(canopies_with_element())
    def test_element_round_trips_through_dyck(self, pair):
        v, element = pair
        P = pathpair_to_dyck(PathPair(element, v))
        assert P.type_of() == v
        assert dyck_to_pathpair(P) == PathPair(element, v)

    @given(canopies_with_element())
    def test_horiz_steps_down_by_one_east(self, pair):
        v, element = pair
        points = element.points()
        for (x, y), step in zip(points, element.word):
            if step == "E":
                assert v.horiz((x, y)) == v.horiz((x + 1, y)) + 1


class TestFiberIsInterval:
    def test_each_fiber_is_a_tamari_interval(self):
        # every type fiber is a full interval of the Tamari order
        for n in range(1, 9):
            paths = enumerate_dyck_paths(n)
            for fiber_word, fiber in dyck_paths_by_type(n).items():
                bottom = [P for P in fiber if all(tamari_leq(P, Q) for Q in fiber)]
                top = [P for P in fiber if all(tamari_leq(Q, P) for Q in fiber)]
                assert len(bottom) == 1 and len(top) == 1
                lo, hi = bottom[0], top[0]
                members = {P.word for P in fiber}
                for P in paths:
                    if tamari_leq(lo, P) and tamari_leq(P, hi):
                        assert P.word in members
