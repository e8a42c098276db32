import pytest

from mmsep import errors
from mmsep.separating import (enumerate_separating_sets, sublevel_set,
                              validate_separating_set)
from mmsep.spaces import gen_grid, gen_path

from _families import random_instance, diameter_poles


def test_canonical_omega(path5):
    ss = validate_separating_set(path5, {"v0", "v1", "v2"}, "v0", "v4")
    assert ss.omega == frozenset({"v0", "v1", "v2"})
    assert ss.inner_boundary == frozenset({"v2"})
    assert ss.outer_boundary == frozenset({"v3"})
    assert ss.cut_edges == (("v2", "v3", 1.0),)
    assert ss.boundary == frozenset({"v2", "v3"})


def test_complement_swaps_sides(path5):
    ss = validate_separating_set(path5, {"v0", "v1", "v2"}, "v0", "v4")
    cc = ss.complement(path5)
    assert cc.omega == frozenset({"v3", "v4"})
    assert cc.inner_boundary == frozenset({"v3"})
    assert cc.outer_boundary == frozenset({"v2"})


def test_missing_pole_rejected(path5):
    with pytest.raises(errors.NotSeparating):
        validate_separating_set(path5, {"v1", "v2"}, "v0", "v4")
    with pytest.raises(errors.NotSeparating):
        validate_separating_set(path5, set(path5.ids), "v0", "v4")


def test_interior_margin_enforced(path5):
    # v1 is a neighbor of v0 and must be inside.
    with pytest.raises(errors.PoleNotInterior):
        validate_separating_set(path5, {"v0"}, "v0", "v4")
    # v3 is a neighbor of v4 and must be outside.
    with pytest.raises(errors.PoleNotInterior):
        validate_separating_set(path5, {"v0", "v1", "v2", "v3"}, "v0", "v4")


def test_two_hop_interior():
    g = gen_path(7)
    ss = validate_separating_set(g, {"v0", "v1", "v2"}, "v0", "v6",
                                 interior_hops=2)
    assert ss.inner_boundary == frozenset({"v2"})
    with pytest.raises(errors.PoleNotInterior):
        validate_separating_set(g, {"v0", "v1"}, "v0", "v6", interior_hops=2)
    with pytest.raises(errors.BadParam):
        validate_separating_set(g, {"v0", "v1"}, "v0", "v6", interior_hops=0)


def test_touching_one_hop_balls_still_separate():
    # Poles v0, v3 on a 4-path: closed one-hop balls {v0,v1} and {v2,v3}
    # are disjoint but joined by an edge, and the unique omega is valid.
    g = gen_path(4)
    ss = validate_separating_set(g, {"v0", "v1"}, "v0", "v3")
    assert ss.cut_edges == (("v1", "v2", 1.0),)


def test_sublevel_orients_itself(path5):
    u = {"v0": 0.0, "v1": 0.0, "v2": 0.5, "v3": 1.0, "v4": 1.0}
    ss = sublevel_set(path5, u, 0.5, "v0", "v4")
    # The superlevel side holds y, so the set is built around y.
    assert ss.x == "v4"
    assert ss.omega == frozenset({"v2", "v3", "v4"})
    down = {k: -v for k, v in u.items()}
    ss2 = sublevel_set(path5, down, -0.25, "v0", "v4")
    assert ss2.x == "v0"
    assert ss2.omega == frozenset({"v0", "v1"})


def test_sublevel_rejects_nonseparating_level(path5):
    u = {"v0": 0.0, "v1": 1.0, "v2": 0.0, "v3": 1.0, "v4": 0.0}
    with pytest.raises(errors.NotSeparating):
        sublevel_set(path5, u, 0.5, "v0", "v4")


def test_sublevel_level_too_close(path5):
    u = {"v0": 0.0, "v1": 1.0, "v2": 2.0, "v3": 3.0, "v4": 4.0}
    with pytest.raises(errors.LevelTooClose):
        sublevel_set(path5, u, 0.5, "v0", "v4")


def test_enumeration_count_path():
    # Free vertices between the one-hop balls: path7 poles v0,v6 leave
    # {v2, v3, v4} free, every subset keeps a cut edge, so 8 sets.
    g = gen_path(7)
    sets = list(enumerate_separating_sets(g, "v0", "v6"))
    assert len(sets) == 8
    omegas = {ss.omega for ss in sets}
    assert frozenset({"v0", "v1"}) in omegas
    assert frozenset({"v0", "v1", "v2", "v3", "v4"}) in omegas


def test_enumeration_empty_when_balls_clash(path5):
    assert list(enumerate_separating_sets(path5, "v0", "v2")) == []


def test_enumeration_respects_cap():
    g = gen_grid(5)
    with pytest.raises(errors.TooLarge):
        list(enumerate_separating_sets(g, "0,0", "4,4", max_vertices=22))


def test_enumeration_matches_validation():
    checked = 0
    for seed in range(30):
        g = random_instance(seed, n_lo=6, n_hi=10)
        x, y, hops = diameter_poles(g)
        if hops < 3:
            continue
        for ss in enumerate_separating_sets(g, x, y):
            again = validate_separating_set(g, ss.omega, x, y)
            assert again.cut_edges == ss.cut_edges
            checked += 1
        if checked > 200:
            break
    assert checked > 50
