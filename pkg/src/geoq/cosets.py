"""
Abstract finite groups (multiplication-table semantics), subgroups and
coset pregeometries: right cosets of designated subgroups, incident when
they intersect, with the right-multiplication action.
"""

from __future__ import annotations

import random
from itertools import permutations, product

from .geometry import Pregeometry
from .perms import Perm, PermGroup


class FiniteGroup:
    """Indexed element set with a full multiplication table."""

    __slots__ = ("names", "mul", "inv", "id", "_index")

    def __init__(self, names, mul, check=True):
        self.names = tuple(names)
        n = len(self.names)
        self.mul = tuple(tuple(row) for row in mul)
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise ValueError("multiplication table must be %d x %d" % (n, n))
        ident = None
        for e in range(n):
            if all(self.mul[e][x] == x and self.mul[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise ValueError("no identity element")
        self.id = ident
        inv = [None] * n
        for x in range(n):
            for y in range(n):
                if self.mul[x][y] == ident and self.mul[y][x] == ident:
                    inv[x] = y
                    break
            if inv[x] is None:
                raise ValueError("element %r has no inverse" % (self.names[x],))
        self.inv = tuple(inv)
        self._index = {name: i for i, name in enumerate(self.names)}
        if check:
            self._check_associativity()

    def _check_associativity(self):
        n = len(self.names)
        if n <= 48:
            triples = product(range(n), repeat=3)
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(2000))
        for x, y, z in triples:
            if self.mul[self.mul[x][y]][z] != self.mul[x][self.mul[y][z]]:
                raise ValueError("multiplication table is not associative")

    def __len__(self):
        return len(self.names)

    def index(self, name):
        return self._index[name]

    def op(self, x, y):
        return self.mul[x][y]

    def is_abelian(self):
        n = len(self.names)
        return all(self.mul[x][y] == self.mul[y][x]
                   for x in range(n) for y in range(x + 1, n))

    @classmethod
    def cyclic(cls, n):
        names = [str(i) for i in range(n)]
        mul = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls(names, mul, check=False)

    @classmethod
    def direct_product(cls, *groups):
        combos = list(product(*[range(len(g)) for g in groups]))
        index = {c: i for i, c in enumerate(combos)}
        names = ["(%s)" % ",".join(g.names[x] for g, x in zip(groups, c))
                 for c in combos]
        mul = [[index[tuple(g.mul[a][b] for g, a, b in zip(groups, c1, c2))]
                for c2 in combos] for c1 in combos]
        return cls(names, mul, check=False)

    @classmethod
    def symmetric(cls, n):
        perms = sorted(permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        names = ["[%s]" % "".join(map(str, p)) for p in perms]
        mul = [[index[tuple(q[x] for x in p)] for q in perms] for p in perms]
        return cls(names, mul, check=False)

    @classmethod
    def from_perm_group(cls, group):
        """Cayley-table form of an enumerated permutation group."""
        elems = sorted(group.elements())
        index = {g: i for i, g in enumerate(elems)}
        names = [repr(g) for g in elems]
        mul = [[index[g * h] for h in elems] for g in elems]
        return cls(names, mul, check=False), elems

    def subgroup_generated(self, seed):
        members = {self.id}
        frontier = [self.id]
        seed = sorted(set(seed))
        while frontier:
            nxt = []
            for x in frontier:
                for s in seed:
                    y = self.mul[x][s]
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
                    y = self.mul[x][self.inv[s]]
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return Subgroup(self, members)

    def generators(self):
        """A small generating set, chosen greedily over element order."""
        gens = []
        have = {self.id}
        for x in range(len(self.names)):
            if x not in have:
                gens.append(x)
                have = set(self.subgroup_generated(gens).members)
                if len(have) == len(self.names):
                    break
        return gens


class Subgroup:
    """A verified subgroup: closed under products and inverses."""

    __slots__ = ("parent", "members", "name")

    def __init__(self, parent, members, name=None):
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        self.name = name
        mem = set(self.members)
        if parent.id not in mem:
            raise ValueError("subgroup must contain the identity")
        for x in self.members:
            if parent.inv[x] not in mem:
                raise ValueError("subgroup not closed under inverses")
            for y in self.members:
                if parent.mul[x][y] not in mem:
                    raise ValueError("subgroup not closed under products")

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in set(self.members)

    def named(self, name):
        return Subgroup(self.parent, self.members, name)


def set_product(G, xs, ys):
    return frozenset(G.mul[x][y] for x in xs for y in ys)


def product_condition(G, pivot, others):
    """The flag-transitivity product condition with the given pivot:
    the intersection of the products pivot*G_j equals pivot*(intersection
    of the G_j)."""
    lhs = None
    for sub in others:
        term = set_product(G, pivot.members, sub.members)
        lhs = term if lhs is None else (lhs & term)
    inter = set(others[0].members)
    for sub in others[1:]:
        inter &= set(sub.members)
    rhs = set_product(G, pivot.members, inter)
    return lhs == rhs


def rank3_ft_condition(G, G1, G2, G3):
    """Rank-3 flag-transitivity criterion; the two equivalent product
    formulations are both computed and must agree."""
    a = product_condition(G, G1, [G2, G3])
    inter12 = frozenset(set(G1.members) & set(G2.members))
    inter13 = frozenset(set(G1.members) & set(G3.members))
    lhs = set_product(G, inter12, inter13)
    rhs = frozenset(G1.members) & set_product(G, G2.members, G3.members)
    b = lhs == rhs
    assert a == b, "the two rank-3 product formulations disagree"
    return a


class CosetGeometry:
    """The coset pregeometry of a group with designated subgroups, plus
    the right-multiplication action."""

    __slots__ = ("group", "subgroups", "geometry", "reps", "_coset_index")

    def __init__(self, group, subgroups):
        if not subgroups:
            raise ValueError("at least one subgroup required")
        self.group = group
        self.subgroups = tuple(subgroups)
        type_names = [sub.name or ("G%d" % (i + 1))
                      for i, sub in enumerate(subgroups)]
        if len(set(type_names)) != len(type_names):
            raise ValueError("duplicate subgroup names")
        elems = []
        etype = []
        reps = []
        cosets = []
        for i, sub in enumerate(subgroups):
            seen = {}
            for x in range(len(group)):
                members = frozenset(group.mul[h][x] for h in sub.members)
                rep = min(members)
                if rep not in seen:
                    seen[rep] = members
            for rep in sorted(seen):
                label = type_names[i] if rep == group.id else (
                    "%s*%s" % (type_names[i], group.names[rep]))
                elems.append(label)
                etype.append(i)
                reps.append(rep)
                cosets.append(seen[rep])
        pairs = []
        for a in range(len(elems)):
            for b in range(a + 1, len(elems)):
                if etype[a] != etype[b] and cosets[a] & cosets[b]:
                    pairs.append((a, b))
        self.geometry = Pregeometry(type_names, elems, etype, pairs)
        self.reps = tuple(reps)
        self._coset_index = {(etype[k], cosets[k]): k
                             for k in range(len(elems))}

    def coset_members(self, k):
        i = self.geometry.elem_type[k]
        sub = self.subgroups[i]
        return frozenset(self.group.mul[h][self.reps[k]]
                         for h in sub.members)

    def action_of(self, g):
        """The permutation induced on cosets by right multiplication."""
        images = []
        for k in range(self.geometry.size):
            i = self.geometry.elem_type[k]
            members = frozenset(self.group.mul[x][g]
                                for x in self.coset_members(k))
            images.append(self._coset_index[(i, members)])
        return Perm(images)

    def action_group(self, members=None):
        """Right-multiplication action of the whole group (or of the given
        member subset, which must be a subgroup) as a permutation group."""
        if members is None:
            gens = self.group.generators()
        else:
            gens = _generators_within(self.group, sorted(members))
        return PermGroup([self.action_of(g) for g in gens],
                         degree=self.geometry.size)


def _generators_within(G, members):
    gens = []
    have = {G.id}
    for x in members:
        if x not in have:
            gens.append(x)
            have = set(G.subgroup_generated(gens).members)
            if len(have) == len(members):
                break
    return gens


def coset_pregeometry(G, subgroups):
    """Elements are right cosets of the subgroups (one type each),
    incident when the cosets intersect; returns the geometry and the
    right-multiplication action bundle."""
    cg = CosetGeometry(G, subgroups)
    return cg.geometry, cg


def rank2_connectivity(G, Gi, Gj):
    """The rank-2 truncation on two cosets types is connected iff the two
    subgroups generate the whole group; both sides are computed."""
    generated = G.subgroup_generated(set(Gi.members) | set(Gj.members))
    algebraic = len(generated) == len(G)
    from .geometry import is_connected
    cg = CosetGeometry(G, [Gi.named("A"), Gj.named("B")])
    graphwise = is_connected(cg.geometry)
    assert algebraic == graphwise, "generation test disagrees with connectivity"
    return algebraic


class CosetExampleFamily:
    """The rank-4 family over an abelian group: subgroups
    {(x,1,x)}, {(x,1,1)}, {(x,x,1)}, 1 inside the cube, with the diagonal
    as the designated normal subgroup."""

    __slots__ = ("A", "G", "subgroups", "N", "cg", "geometry")

    def __init__(self, A):
        if not A.is_abelian():
            raise ValueError("base group must be abelian")
        if len(A) < 2:
            raise ValueError("base group must have order at least 2")
        self.A = A
        G = FiniteGroup.direct_product(A, A, A)
        self.G = G
        n = len(A)
        g1 = {self._triple((x, A.id, x)) for x in range(n)}
        g2 = {self._triple((x, A.id, A.id)) for x in range(n)}
        g3 = {self._triple((x, x, A.id)) for x in range(n)}
        g4 = {G.id}
        diag = {self._triple((x, x, x)) for x in range(n)}
        self.subgroups = (Subgroup(G, g1, "G1"), Subgroup(G, g2, "G2"),
                          Subgroup(G, g3, "G3"), Subgroup(G, g4, "G4"))
        self.N = Subgroup(G, diag, "N")
        self.geometry, self.cg = coset_pregeometry(G, self.subgroups)

    def _triple(self, xyz):
        return self.G.index("(%s,%s,%s)" % tuple(self.A.names[c] for c in xyz))

    def element(self, x, y, z):
        """Index in the cube of the triple with the given base-group parts."""
        return self._triple((x, y, z))

    def action_group(self):
        return self.cg.action_group()

    def n_action_group(self):
        return self.cg.action_group(self.N.members)

    def truncation3(self):
        """The rank-3 member on the first three subgroups."""
        subs = self.subgroups[:3]
        geom, cg = coset_pregeometry(self.G, subs)
        return geom, cg


def coseteg_family(A):
    """Build the rank-4 coset example family over an abelian group."""
    return CosetExampleFamily(A)


def is_coset_pregeometry(geom, group):
    """A pregeometry with a given automorphism group is (isomorphic to) a
    coset pregeometry for that group iff it contains a chamber and the
    group is vertex- and incidence-transitive.  On success the chamber
    stabilizers are extracted and the coset model is rebuilt and matched
    element by element."""
    from .geometry import flags_of_type
    from .perms import transitivity
    chams = flags_of_type(geom, range(geom.rank))
    if not chams:
        return False, "no chamber"
    ok, w = transitivity(group, geom, "vertex")
    if not ok:
        return False, ("not vertex-transitive", w)
    ok, w = transitivity(group, geom, "incidence")
    if not ok:
        return False, ("not incidence-transitive", w)
    chamber = chams[0]
    fin, elems = FiniteGroup.from_perm_group(group)
    perm_index = {g: i for i, g in enumerate(elems)}
    subgroups = []
    for x in chamber:
        members = {perm_index[g] for g in elems if g[x] == x}
        subgroups.append(Subgroup(fin, members, "S%d" % geom.elem_type[x]))
    cg = CosetGeometry(fin, subgroups)
    # associate alpha (type i) with the coset of any group element mapping
    # chamber[i] to alpha, then compare incidence both ways
    assoc = [None] * geom.size
    for i, x in enumerate(chamber):
        reps = {}
        for gi, g in enumerate(elems):
            reps.setdefault(g[x], gi)
        for alpha in geom.by_type[geom.elem_type[x]]:
            members = frozenset(fin.mul[h][reps[alpha]]
                                for h in subgroups[i].members)
            assoc[alpha] = cg._coset_index[(i, members)]
    if sorted(assoc) != list(range(geom.size)):
        return False, "coset association is not a bijection"
    for a in range(geom.size):
        for b in range(a + 1, geom.size):
            if geom.incident(a, b) != cg.geometry.incident(assoc[a], assoc[b]):
                return False, ("incidence mismatch", (a, b))
    return True, tuple(assoc)
