from geoq.axioms import (OrbitQuotient, axioms_report, check_TQ1,
                         check_TQ2doubleprime, check_TQ2prime, check_TQ3)
from geoq.constructions import eight_cycle, hexagon, ssg
from geoq.perms import PermGroup
from geoq.quotient import residual_surjectivity
from geoq.reproduce import tq1_counterexample


def trivial_oq(geom):
    return OrbitQuotient(geom, PermGroup.trivial(geom.size))


def test_tq3():
    geom, group = hexagon()
    assert not check_TQ3(OrbitQuotient(geom, group))
    g8, grp8 = eight_cycle()
    assert check_TQ3(OrbitQuotient(g8, grp8))
    assert check_TQ3(trivial_oq(ssg(3, 2)))


def test_trivial_group_satisfies_everything():
    oq = trivial_oq(ssg(3, 2))
    assert check_TQ1(oq)[0]
    assert check_TQ2prime(oq)[0]
    assert check_TQ2doubleprime(oq)[0]


def test_counterexample_tq2prime_fails_at_type12_flag():
    geom, group = tq1_counterexample()
    oq = OrbitQuotient(geom, group)
    ok, witness = check_TQ2prime(oq)
    assert not ok
    # the published failing flag {a1, a2} is also a failure point
    flag = (geom.elem("a1"), geom.elem("a2"))
    from geoq.perms import stabilizer
    from geoq.geometry import extensions
    stab = stabilizer(group, flag)
    members = extensions(geom, flag)
    assert len(members) == 2
    assert len({oq.proj.block_of[x] for x in members}) == 1
    assert len({tuple(stab.orbit(x)) for x in members}) == 2


def test_witnesses_are_deterministic_and_rank_lex_minimal():
    geom, group = tq1_counterexample()
    oq = OrbitQuotient(geom, group)
    # flags are scanned in (rank, lexicographic) order, so the reported
    # witnesses are reproducible run to run
    assert check_TQ2prime(oq)[1] == ((0, 2), 4, 5)
    assert check_TQ1(oq)[1] == ((0, 2), "orbit map not injective")
    hgeom, hgroup = hexagon()
    hoq = OrbitQuotient(hgeom, hgroup)
    assert check_TQ2doubleprime(hoq)[1] == ((0,), 1, 2)


def test_counterexample_tq1_fails_but_residually_surjective():
    geom, group = tq1_counterexample()
    oq = OrbitQuotient(geom, group)
    assert not check_TQ1(oq)[0]
    assert residual_surjectivity(oq.proj)


def test_covering_orbit_quotient_satisfies_tq1():
    # the eight-cycle quotient by the half-turn is a cover
    geom, group = eight_cycle()
    oq = OrbitQuotient(geom, group)
    from geoq.quotient import is_cover
    assert is_cover(oq.proj)
    assert check_TQ1(oq)[0]
    assert check_TQ2prime(oq)[0]
    assert check_TQ2doubleprime(oq)[0]


def test_hexagon_axiom_values_are_stable():
    geom, group = hexagon()
    oq = OrbitQuotient(geom, group)
    assert check_TQ2prime(oq)[0]
    assert not check_TQ2doubleprime(oq)[0]
    assert not check_TQ1(oq)[0]


def test_axioms_report_keys():
    geom, group = hexagon()
    rep = axioms_report(OrbitQuotient(geom, group))
    assert set(rep) == {"flagslift", "pq1", "pq2", "tq1", "tq2prime",
                        "tq2doubleprime", "tq3", "residually-surjective",
                        "is-cover"}
    assert rep["tq2prime"][0] is True
    assert rep["flagslift"][0] is False
