"""
Randomized implication suites: each suite draws seed-fixed desk-scale
instances (random repaired geometries, coset pregeometries, cycles,
blow-ups, subset geometries with random subgroups) and checks one of the
quotient implications on every instance, reporting any violation.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field

from .axioms import (OrbitQuotient, check_TQ1, check_TQ2doubleprime,
                     check_TQ2prime, check_TQ3)
from .cosets import FiniteGroup, CosetGeometry, is_coset_pregeometry
from .constructions import (SimpleGraph, blowup_projection, is_shadowable,
                            multipartite_geometry, ssg, ssg_symmetric_action)
from .diagram import basic_diagram, lift_chamber_forest
from .geometry import (Pregeometry, all_flags, flags_of_type,
                       is_connected, is_firm, is_geometry,
                       is_residually_connected)
from .perms import (CapExceeded, Perm, PermGroup, automorphism_group,
                    induced_quotient_group, is_semiregular, normal_closure,
                    orbit_partition, transitivity)
from .quotient import (Partition, Projection, check_flagslift, check_PQ1,
                       corank1_surjective, is_cover, lift_flag,
                       min_block_distance, singleton_partition)

DEFAULT_SEED = 20260808


def seed_from_env():
    return int(os.environ.get("GEOQ_SEED", DEFAULT_SEED))


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    nonvacuous: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def line(self):
        return "%s: checked=%d nonvacuous=%d violations=%d" % (
            self.name, self.checked, self.nonvacuous, len(self.violations))


# ---------------------------------------------------------------- instances

def random_pregeometry(rng, max_rank=4, max_per_type=4):
    rank = rng.randint(2, max_rank)
    sizes = [rng.randint(1, max_per_type) for _ in range(rank)]
    names = []
    etype = []
    for t, s in enumerate(sizes):
        for i in range(s):
            names.append("x%d_%d" % (t, i))
            etype.append(t)
    density = rng.uniform(0.3, 0.9)
    pairs = []
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            if etype[a] != etype[b] and rng.random() < density:
                pairs.append((a, b))
    return Pregeometry([str(t) for t in range(rank)], names, etype, pairs)


def repair_to_geometry(geom, rng):
    """Extend maximal non-chamber flags by new incidences until every
    maximal flag is a chamber; incidences only grow, so this terminates."""
    while True:
        ok, flag = is_geometry(geom)
        if ok:
            return geom
        missing = sorted(set(range(geom.rank))
                         - {geom.elem_type[x] for x in flag})
        t = rng.choice(missing)
        z = rng.choice(geom.by_type[t])
        pairs = set(geom.pairs)
        pairs.update((min(z, y), max(z, y)) for y in flag)
        geom = Pregeometry(geom.type_names, geom.elem_names,
                           geom.elem_type, pairs)


def random_geometry(rng, max_rank=4, max_per_type=4):
    return repair_to_geometry(random_pregeometry(rng, max_rank, max_per_type), rng)


def random_partition(rng, geom):
    blocks = []
    for members in geom.by_type:
        pool = list(members)
        rng.shuffle(pool)
        while pool:
            k = rng.randint(1, len(pool))
            blocks.append(pool[:k])
            pool = pool[k:]
    return Partition(geom, blocks)


def cycle_geometry(two_m):
    names = [str(x) for x in range(two_m)]
    etype = [x % 2 for x in range(two_m)]
    pairs = [(x, (x + 1) % two_m) for x in range(two_m)]
    return Pregeometry(["even", "odd"], names, etype, pairs)


def cycle_rotation(two_m, s):
    return PermGroup([Perm([(x + s) % two_m for x in range(two_m)])],
                     degree=two_m)


_GROUP_POOL = None


def _small_groups():
    global _GROUP_POOL
    if _GROUP_POOL is None:
        z = FiniteGroup.cyclic
        _GROUP_POOL = [
            z(4), z(6), z(8),
            FiniteGroup.direct_product(z(2), z(2)),
            FiniteGroup.direct_product(z(2), z(4)),
            FiniteGroup.direct_product(z(2), z(2), z(2)),
            FiniteGroup.symmetric(3),
            FiniteGroup.symmetric(4),
            FiniteGroup.direct_product(FiniteGroup.symmetric(3), z(2)),
        ]
    return _GROUP_POOL


def random_coset_instance(rng, max_types=4):
    """A coset pregeometry over a random small group with random
    subgroups, plus its right-multiplication action."""
    G = rng.choice(_small_groups())
    k = rng.randint(2, max_types)
    subs = []
    for i in range(k):
        seed = [rng.randrange(len(G)) for _ in range(rng.randint(0, 2))]
        sub = G.subgroup_generated(seed)
        if len(sub) == len(G) and rng.random() < 0.7:
            sub = G.subgroup_generated([])  # avoid too many single-coset types
        subs.append(sub.named("G%d" % (i + 1)))
    cg = CosetGeometry(G, subs)
    return cg.geometry, cg.action_group()


def random_subgroup(rng, group, max_gens=2):
    elems = sorted(group.elements())
    gens = [rng.choice(elems) for _ in range(rng.randint(1, max_gens))]
    return PermGroup([g for g in gens if not g.is_identity()],
                     degree=group.degree)


def random_orbit_quotient(rng, need_geometry=False, max_flags=400):
    """Draw an orbit-quotient from a mixed pool; returns None for draws
    that miss the requested constraints (caller retries)."""
    kind = rng.randrange(6)
    try:
        if kind == 0:
            two_m = rng.choice([6, 8, 10, 12])
            geom = cycle_geometry(two_m)
            divisors = [s for s in range(2, two_m + 1, 2) if two_m % s == 0]
            group = cycle_rotation(two_m, rng.choice(divisors))
        elif kind == 1:
            geom, action = random_coset_instance(rng)
            if geom.size > 40:
                return None
            group = random_subgroup(rng, action)
        elif kind == 2:
            geom = random_geometry(rng, max_rank=3, max_per_type=3)
            auts = automorphism_group(geom, cap=2000)
            group = random_subgroup(rng, auts)
        elif kind == 3:
            v = rng.choice([3, 4])
            geom, action = ssg_symmetric_action(v, rng.randint(2, v - 1))
            group = random_subgroup(rng, action)
        elif kind == 4:
            geom, group = _hex_or_cycle(rng)
        else:
            geom, n_group, g_group = multipartite_geometry(2, 3, 2)
            group = random_subgroup(rng, n_group)
    except CapExceeded:
        return None
    if need_geometry and not is_geometry(geom)[0]:
        return None
    if sum(1 for _ in all_flags(geom)) > max_flags:
        return None
    if group.order() > 60:
        return None
    return OrbitQuotient(geom, group)


def _hex_or_cycle(rng):
    from .constructions import eight_cycle, hexagon
    return rng.choice([hexagon, eight_cycle])()


def _draw(rng, maker, count):
    out = []
    guard = 0
    while len(out) < count:
        guard += 1
        if guard > count * 60:
            raise RuntimeError("instance pool exhausted")
        inst = maker(rng)
        if inst is not None:
            out.append(inst)
    return out


# ------------------------------------------------------------------- suites

def suite_rank3_quotient(rng, count=200):
    """Quotients of geometries of rank at most 3 are geometries."""
    res = SuiteResult("rank3-quotient")
    for _ in range(count):
        geom = random_geometry(rng, max_rank=3)
        part = random_partition(rng, geom)
        q = Projection(geom, part).quotient
        res.checked += 1
        res.nonvacuous += 1
        if not is_geometry(q)[0]:
            res.violations.append((geom, part))
    return res


def suite_flagslift_geometry(rng, count=200):
    """FlagsLift forces the quotient of a geometry to be a geometry."""
    res = SuiteResult("flagslift-quotient-geometry")
    for _ in range(count):
        geom = random_geometry(rng)
        part = random_partition(rng, geom)
        proj = Projection(geom, part)
        res.checked += 1
        if not check_flagslift(proj)[0]:
            continue
        res.nonvacuous += 1
        if not is_geometry(proj.quotient)[0]:
            res.violations.append((geom, part))
    return res


def _cover_instances(rng):
    kind = rng.randrange(4)
    if kind == 0:
        two_m = rng.choice([8, 12, 16])
        geom = cycle_geometry(two_m)
        part = orbit_partition(cycle_rotation(two_m, two_m // 2), geom)
        return Projection(geom, part)
    if kind == 1:
        geom = random_geometry(rng, max_rank=2, max_per_type=4)
        big, proj = blowup_projection(geom, SimpleGraph.matching(rng.randint(1, 2)))
        return proj
    if kind == 2:
        geom = random_geometry(rng)
        return Projection(geom, singleton_partition(geom))
    geom = random_geometry(rng, max_rank=3, max_per_type=3)
    part = random_partition(rng, geom)
    return Projection(geom, part)


def suite_cover_properties(rng, count=200):
    """A covering lifts flags; a covering of a (firm) geometry of rank at
    least 2 gives a (firm) geometry quotient."""
    res = SuiteResult("cover-properties")
    for proj in _draw(rng, _cover_instances, count):
        res.checked += 1
        if not is_cover(proj):
            continue
        res.nonvacuous += 1
        if not check_flagslift(proj)[0]:
            res.violations.append(("flagslift", proj.source))
            continue
        geo = is_geometry(proj.source)[0]
        if geo and proj.source.rank >= 2:
            if not is_geometry(proj.quotient)[0]:
                res.violations.append(("quotient-geometry", proj.source))
                continue
            if is_firm(proj.source)[0] and not is_firm(proj.quotient)[0]:
                res.violations.append(("quotient-firm", proj.source))
    return res


def suite_cover_semiregular(rng, count=200):
    """A cover onto an orbit-quotient of a connected pregeometry forces
    the group to act semiregularly."""
    res = SuiteResult("cover-semiregular")
    maker = lambda rng: random_orbit_quotient(rng)
    for oq in _draw(rng, maker, count):
        res.checked += 1
        if not (is_connected(oq.geom) and is_cover(oq.proj)):
            continue
        res.nonvacuous += 1
        if not is_semiregular(oq.group):
            res.violations.append(oq.geom)
    return res


def suite_distance4_cover(rng, count=200):
    """Corank-1 surjectivity plus same-block distance at least 4 forces a
    covering; covers keep same-block distance at least 3."""
    res = SuiteResult("distance4-cover")
    for proj in _draw(rng, _cover_instances, count):
        res.checked += 1
        d = min_block_distance(proj.source, proj.partition)
        if corank1_surjective(proj) and d >= 4:
            res.nonvacuous += 1
            if not is_cover(proj):
                res.violations.append(("not-cover", proj.source))
                continue
        if is_cover(proj) and d < 3:
            res.violations.append(("cover-short-distance", proj.source))
    return res


def suite_tq_equivalences(rng, count=200):
    """On orbit-quotients of geometries: TQ1 holds exactly when TQ2' and
    TQ2'' both do."""
    res = SuiteResult("tq1-iff-tq2-both")
    maker = lambda rng: random_orbit_quotient(rng, need_geometry=True)
    for oq in _draw(rng, maker, count):
        res.checked += 1
        res.nonvacuous += 1
        tq1 = check_TQ1(oq)[0]
        both = check_TQ2prime(oq)[0] and check_TQ2doubleprime(oq)[0]
        if tq1 != both:
            res.violations.append((oq.geom, tq1, both))
    return res


def suite_tq_chain(rng, count=200):
    """TQ3 => TQ1 => PQ1 => FlagsLift on orbit-quotients of geometries."""
    res = SuiteResult("tq3-tq1-pq1-flagslift")
    maker = lambda rng: random_orbit_quotient(rng, need_geometry=True)
    for oq in _draw(rng, maker, count):
        res.checked += 1
        tq3 = check_TQ3(oq)
        tq1 = check_TQ1(oq)[0]
        pq1 = check_PQ1(oq.proj)[0]
        fl = check_flagslift(oq.proj)[0]
        if tq3 or tq1 or pq1:
            res.nonvacuous += 1
        if (tq3 and not tq1) or (tq1 and not pq1) or (pq1 and not fl):
            res.violations.append((oq.geom, tq3, tq1, pq1, fl))
    return res


def suite_flagslift_tq2(rng, count=200):
    """FlagsLift together with TQ2' forces TQ2'' on orbit-quotients."""
    res = SuiteResult("flagslift-tq2prime-tq2doubleprime")
    maker = lambda rng: random_orbit_quotient(rng)
    for oq in _draw(rng, maker, count):
        res.checked += 1
        if not (check_flagslift(oq.proj)[0] and check_TQ2prime(oq)[0]):
            continue
        res.nonvacuous += 1
        if not check_TQ2doubleprime(oq)[0]:
            res.violations.append(oq.geom)
    return res


def suite_coset_quotient(rng, count=200):
    """Quotients of coset pregeometries by invariant partitions are coset
    pregeometries."""
    res = SuiteResult("coset-quotient-closed")
    made = 0
    guard = 0
    while made < count:
        guard += 1
        if guard > count * 60:
            raise RuntimeError("instance pool exhausted")
        geom, action = random_coset_instance(rng)
        if geom.size > 30 or action.order() > 30:
            continue
        sub = random_subgroup(rng, action)
        n = normal_closure(action, sub)
        part = orbit_partition(n, geom)
        proj = Projection(geom, part)
        induced = induced_quotient_group(proj, action)
        made += 1
        res.checked += 1
        res.nonvacuous += 1
        ok, detail = is_coset_pregeometry(proj.quotient, induced)
        if not ok:
            res.violations.append((geom, detail))
    return res


def suite_shadowable_quotient(rng, count=200):
    """Orbit-quotients of shadowable geometries are geometries; a
    flag-transitive overgroup stays flag-transitive on the quotient of a
    normal subgroup's orbits."""
    res = SuiteResult("shadowable-quotient")
    for _ in range(count):
        v = rng.choice([3, 4, 5])
        k = rng.randint(2, min(3, v - 1))
        geom, action = ssg_symmetric_action(v, k)
        assert is_shadowable(geom)[0]
        sub = random_subgroup(rng, action)
        res.checked += 1
        res.nonvacuous += 1
        part = orbit_partition(sub, geom)
        proj = Projection(geom, part)
        if not is_geometry(proj.quotient)[0]:
            res.violations.append(("quotient-not-geometry", v, k))
            continue
        n = normal_closure(action, sub)
        npart = orbit_partition(n, geom)
        nproj = Projection(geom, npart)
        induced = induced_quotient_group(nproj, action)
        if not transitivity(induced, nproj.quotient, "flag")[0]:
            res.violations.append(("not-flag-transitive", v, k))
    return res


def suite_chamber_lift(rng, count=200):
    """Forest-diagram chamber lifting succeeds on every quotient chamber
    and agrees with the exhaustive lift oracle."""
    res = SuiteResult("forest-chamber-lift")
    made = 0
    guard = 0
    while made < count:
        guard += 1
        if guard > count * 60:
            raise RuntimeError("instance pool exhausted")
        oq = random_orbit_quotient(rng, need_geometry=True)
        if oq is None:
            continue
        if not is_residually_connected(oq.geom)[0]:
            continue
        if not basic_diagram(oq.geom).is_forest():
            continue
        made += 1
        res.checked += 1
        chams = flags_of_type(oq.quotient, range(oq.quotient.rank))
        for cham in chams:
            res.nonvacuous += 1
            lifted = lift_chamber_forest(oq, cham)
            oracle = lift_flag(oq.proj, cham)
            if oracle is None or oq.proj.project_flag(lifted) != cham:
                res.violations.append((oq.geom, cham))
    return res


ALL_SUITES = [
    suite_rank3_quotient,
    suite_flagslift_geometry,
    suite_cover_properties,
    suite_cover_semiregular,
    suite_distance4_cover,
    suite_tq_equivalences,
    suite_tq_chain,
    suite_flagslift_tq2,
    suite_coset_quotient,
    suite_shadowable_quotient,
    suite_chamber_lift,
]


def run_all_suites(seed=None, count=200):
    seed = seed_from_env() if seed is None else seed
    out = []
    for suite in ALL_SUITES:
        rng = random.Random("%d:%s" % (seed, suite.__name__))
        out.append(suite(rng, count))
    return out
