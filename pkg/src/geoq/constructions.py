"""
Example generators and lifting constructions: subset geometries, shadows
and shadowable lifts, graph blow-ups, affine spaces with their translation
groups, the bespoke example catalogue, and isomorphism search.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from .geometry import Pregeometry, is_geometry
from .perms import Perm, PermGroup
from .quotient import Partition, Projection


class SimpleGraph:
    """Undirected loop-free graph on named vertices."""

    __slots__ = ("names", "edges", "adj")

    def __init__(self, names, edges):
        self.names = tuple(names)
        n = len(self.names)
        norm = set()
        for a, b in edges:
            if a == b:
                raise ValueError("loops not allowed")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError("vertex index out of range")
            norm.add((min(a, b), max(a, b)))
        self.edges = frozenset(norm)
        adj = [set() for _ in range(n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        self.adj = tuple(frozenset(s) for s in adj)

    @property
    def size(self):
        return len(self.names)

    def adjacent(self, a, b):
        return (min(a, b), max(a, b)) in self.edges

    @classmethod
    def complete(cls, n):
        return cls([str(i) for i in range(n)],
                   combinations(range(n), 2))

    @classmethod
    def cycle(cls, n):
        return cls([str(i) for i in range(n)],
                   [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n):
        return cls([str(i) for i in range(n)],
                   [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def matching(cls, k):
        return cls([str(i) for i in range(2 * k)],
                   [(2 * i, 2 * i + 1) for i in range(k)])

    def cliques_of_size(self, r):
        """All r-cliques, as sorted tuples (the empty clique for r=0)."""
        if r == 0:
            return [()]
        out = []

        def rec(cur, cand):
            if len(cur) == r:
                out.append(tuple(cur))
                return
            for i, x in enumerate(cand):
                rec(cur + [x], [y for y in cand[i + 1:] if y in self.adj[x]])

        rec([], list(range(self.size)))
        return out

    def is_matching(self):
        """Every vertex has exactly one neighbour."""
        return all(len(self.adj[x]) == 1 for x in range(self.size))

    def is_connected(self):
        if self.size == 0:
            return True
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(seen) == self.size

    def is_bipartite(self):
        colour = {}
        for start in range(self.size):
            if start in colour:
                continue
            colour[start] = 0
            frontier = [start]
            while frontier:
                nxt = []
                for x in frontier:
                    for y in self.adj[x]:
                        if y not in colour:
                            colour[y] = 1 - colour[x]
                            nxt.append(y)
                        elif colour[y] == colour[x]:
                            return False
                frontier = nxt
        return True

    def automorphisms(self):
        """Brute force; meant for the tiny parameter graphs only."""
        perms = []
        for images in permutations(range(self.size)):
            if all((min(images[a], images[b]), max(images[a], images[b]))
                   in self.edges for a, b in self.edges):
                perms.append(Perm(images))
        return PermGroup.from_elements(perms, degree=self.size)


def ssg(v, k):
    """The subset geometry: all subsets of sizes 1..k of a v-set under
    (symmetrized) inclusion, typed by cardinality minus one."""
    if v <= 1:
        raise ValueError("need v > 1")
    if not 0 < k < v:
        raise ValueError("need 0 < k < v")
    ground = list(range(1, v + 1))
    elems = []
    sets = []
    etype = []
    for i in range(k):
        for s in combinations(ground, i + 1):
            elems.append("{%s}" % ",".join(map(str, s)))
            sets.append(frozenset(s))
            etype.append(i)
    pairs = [(a, b) for a in range(len(sets)) for b in range(a + 1, len(sets))
             if etype[a] != etype[b] and (sets[a] < sets[b] or sets[b] < sets[a])]
    geom = Pregeometry([str(i) for i in range(k)], elems, etype, pairs)
    return geom


def ssg_symmetric_action(v, k):
    """The induced action of the symmetric group on ssg(v, k)."""
    geom = ssg(v, k)
    index = {name: x for x, name in enumerate(geom.elem_names)}

    def induced(ground_perm):
        images = []
        for name in geom.elem_names:
            s = sorted(ground_perm[int(t) - 1] + 1
                       for t in name[1:-1].split(","))
            images.append(index["{%s}" % ",".join(map(str, s))])
        return Perm(images)

    gens = []
    if v >= 2:
        swap = list(range(v)); swap[0], swap[1] = 1, 0
        gens.append(induced(swap))
        gens.append(induced([(i + 1) % v for i in range(v)]))
    return geom, PermGroup(gens, degree=geom.size)


def shadow(geom, i, x):
    """Elements of type i incident with x (reflexively, so the shadow of
    a type-i element contains the element itself)."""
    return frozenset(y for y in geom.by_type[i] if geom.incident(x, y))


def is_shadowable(geom):
    """The type-0 shadow operator must embed the geometry into a subset
    geometry: constant shadow size per type, pairwise distinct sizes,
    injective, and incidence equivalent to shadow containment."""
    ok, w = is_geometry(geom)
    if not ok:
        return False, "not a geometry"
    if geom.rank < 1:
        return False, "no types"
    shadows = [shadow(geom, 0, x) for x in range(geom.size)]
    sizes = {}
    for t in range(geom.rank):
        got = {len(shadows[x]) for x in geom.by_type[t]}
        if len(got) != 1:
            return False, "shadow size not constant on type %s" % geom.type_names[t]
        sizes[t] = got.pop()
    if sizes[0] != 1:
        return False, "type-0 shadows are not singletons"
    if len(set(sizes.values())) != geom.rank:
        return False, "two types share a shadow size"
    if len(set(shadows)) != geom.size:
        return False, "shadow operator not injective"
    for a in range(geom.size):
        for b in range(a + 1, geom.size):
            if geom.elem_type[a] == geom.elem_type[b]:
                continue
            contained = shadows[a] < shadows[b] or shadows[b] < shadows[a]
            if geom.incident(a, b) != contained:
                return False, ("incidence/containment mismatch",
                               geom.flag_names((a, b)))
    return True, sizes


def blowup(geom, graph):
    """The blow-up along a graph: element (a, d) for each element a and
    vertex d; two of them incident iff the first parts are distinct and
    incident and the second parts are adjacent."""
    nv = graph.size
    names = []
    etype = []
    for a in range(geom.size):
        for d in range(nv):
            names.append("(%s,%s)" % (geom.elem_names[a], graph.names[d]))
            etype.append(geom.elem_type[a])
    pairs = []
    for a, b in geom.pairs:
        for d, e in graph.edges:
            pairs.append((a * nv + d, b * nv + e))
            pairs.append((a * nv + e, b * nv + d))
    return Pregeometry(geom.type_names, names, etype, pairs)


def blowup_projection(geom, graph):
    """The blow-up together with the projection collapsing each fibre
    {a} x V back to the base geometry."""
    big = blowup(geom, graph)
    nv = graph.size
    blocks = [tuple(range(a * nv, (a + 1) * nv)) for a in range(geom.size)]
    proj = Projection(big, Partition(big, blocks))
    return big, proj


def blowup_group(geom, graph, g_group, h_group):
    """The product action on the blow-up: base automorphisms move the
    first part, graph automorphisms the second."""
    nv = graph.size
    gens = []
    for g in g_group.gens:
        gens.append(Perm([g[a] * nv + d
                          for a in range(geom.size) for d in range(nv)]))
    for h in h_group.gens:
        gens.append(Perm([a * nv + h[d]
                          for a in range(geom.size) for d in range(nv)]))
    return PermGroup(gens, degree=geom.size * nv)


class ShadowLift:
    """The multipartite lift of a shadowable geometry: type-0 elements are
    the vertices of a complete multipartite graph with one part of size n
    per type-0 element; higher elements are complete multipartite
    subgraphs with parts of size j labelled by a shadow."""

    __slots__ = ("parent", "n", "j", "geometry", "vsets", "parent_of",
                 "_vset_index", "classes")

    def __init__(self, parent, n, j):
        okinfo = is_shadowable(parent)
        if not okinfo[0]:
            raise ValueError("parent is not shadowable: %r" % (okinfo[1],))
        if n <= 2:
            raise ValueError("need n > 2")
        if not 1 < j < n:
            raise ValueError("need 1 < j < n")
        self.parent = parent
        self.n = n
        self.j = j
        base = parent.by_type[0]
        self.classes = tuple(base)
        pos = {c: i for i, c in enumerate(base)}
        names = []
        etype = []
        vsets = []
        parent_of = []
        for c in base:
            for s in range(n):
                names.append("%s.%d" % (parent.elem_names[c], s))
                etype.append(0)
                vsets.append(frozenset({(c, s)}))
                parent_of.append(c)
        for t in range(1, parent.rank):
            for alpha in parent.by_type[t]:
                sh = sorted(shadow(parent, 0, alpha))
                for choice in product(*[combinations(range(n), j) for _ in sh]):
                    vset = frozenset((c, s) for c, sub in zip(sh, choice)
                                     for s in sub)
                    label = "%s/%s" % (
                        parent.elem_names[alpha],
                        "+".join("".join(map(str, sub)) for sub in choice))
                    names.append(label)
                    etype.append(t)
                    vsets.append(vset)
                    parent_of.append(alpha)
        pairs = []
        for a in range(len(names)):
            for b in range(a + 1, len(names)):
                if etype[a] == etype[b]:
                    continue
                if vsets[a] <= vsets[b] or vsets[b] <= vsets[a]:
                    pairs.append((a, b))
        self.geometry = Pregeometry(parent.type_names, names, etype, pairs)
        self.vsets = tuple(vsets)
        self.parent_of = tuple(parent_of)
        self._vset_index = {(etype[x], vsets[x]): x for x in range(len(names))}
        assert len(self._vset_index) == len(names)

    def _perm_from_vertex_map(self, vmap):
        images = []
        for x in range(self.geometry.size):
            target = frozenset(vmap(cs) for cs in self.vsets[x])
            images.append(self._vset_index[(self.geometry.elem_type[x], target)])
        return Perm(images)

    def base_group(self):
        """The product of one symmetric group per part, acting on slots."""
        gens = []
        for c in self.classes:
            swap = self._perm_from_vertex_map(
                lambda cs, c=c: (cs[0], {0: 1, 1: 0}.get(cs[1], cs[1]))
                if cs[0] == c else cs)
            cyc = self._perm_from_vertex_map(
                lambda cs, c=c: (cs[0], (cs[1] + 1) % self.n)
                if cs[0] == c else cs)
            gens.extend([swap, cyc])
        return PermGroup(gens, degree=self.geometry.size)

    def lift_parent_perm(self, g):
        """Push a parent automorphism up: parts move with their labels."""
        return self._perm_from_vertex_map(lambda cs: (g[cs[0]], cs[1]))

    def wreath_group(self, h_group):
        """The wreath-style action generated by the per-part symmetric
        groups and a lifted parent group."""
        gens = list(self.base_group().gens)
        gens.extend(self.lift_parent_perm(g) for g in h_group.gens)
        return PermGroup(gens, degree=self.geometry.size)


def shadowable_lift(parent, n, j):
    return ShadowLift(parent, n, j)


def _gf_span(q, d, vectors):
    """All linear combinations of the given vectors over GF(q), q prime."""
    out = {(0,) * d}
    for v in vectors:
        new = set()
        for w in out:
            for c in range(q):
                new.add(tuple((w[i] + c * v[i]) % q for i in range(d)))
        out = new
    return frozenset(out)


def affine_geometry(d, q):
    """The affine space of dimension d over the prime field of order q:
    flats of dimensions 0..d-1 under inclusion, plus the translation
    group.  Desk scale: d in {2, 3}, q in {2, 3}."""
    if q not in (2, 3):
        raise ValueError("q must be 2 or 3")
    if d not in (2, 3):
        raise ValueError("d must be 2 or 3")
    points = sorted(product(range(q), repeat=d))
    pindex = {p: i for i, p in enumerate(points)}
    pname = ["p%s" % "".join(map(str, p)) for p in points]

    subspaces = {0: [frozenset({(0,) * d})]}
    for dim in range(1, d):
        found = set()
        for vecs in combinations(points[1:], dim):
            span = _gf_span(q, d, vecs)
            if len(span) == q ** dim:
                found.add(span)
        subspaces[dim] = sorted(found, key=sorted)

    elems = []
    etype = []
    flats = []
    for dim in range(d):
        seen = set()
        for sub in subspaces[dim]:
            for x in points:
                flat = frozenset(tuple((v[i] + x[i]) % q for i in range(d))
                                 for v in sub)
                if flat not in seen:
                    seen.add(flat)
        for flat in sorted(seen, key=sorted):
            flats.append(flat)
            etype.append(dim)
            if dim == 0:
                elems.append(pname[pindex[min(flat)]])
            else:
                elems.append("{%s}" % ",".join(pname[pindex[p]]
                                               for p in sorted(flat)))
    pairs = [(a, b) for a in range(len(flats)) for b in range(a + 1, len(flats))
             if etype[a] != etype[b]
             and (flats[a] <= flats[b] or flats[b] <= flats[a])]
    geom = Pregeometry([str(i) for i in range(d)], elems, etype, pairs)

    flat_index = {(etype[x], flats[x]): x for x in range(len(flats))}
    gens = []
    for t in range(d):
        e = tuple(1 if i == t else 0 for i in range(d))
        images = []
        for x in range(len(flats)):
            moved = frozenset(tuple((p[i] + e[i]) % q for i in range(d))
                              for p in flats[x])
            images.append(flat_index[(etype[x], moved)])
        gens.append(Perm(images))
    translations = PermGroup(gens, degree=geom.size)
    return geom, translations


def fano_plane():
    """The projective plane of order 2, built from the one- and
    two-dimensional subspaces of a 3-dimensional binary space."""
    vecs = [v for v in product(range(2), repeat=3) if any(v)]
    points = sorted(vecs)
    lines = []
    for a, b in combinations(points, 2):
        c = tuple((a[i] + b[i]) % 2 for i in range(3))
        line = frozenset({a, b, c})
        if line not in lines:
            lines.append(line)
    lines.sort(key=sorted)
    names = ["q%s" % "".join(map(str, p)) for p in points]
    names += ["{%s}" % ",".join("q%s" % "".join(map(str, p))
                                for p in sorted(l)) for l in lines]
    etype = [0] * len(points) + [1] * len(lines)
    pairs = []
    for i, p in enumerate(points):
        for j, l in enumerate(lines):
            if p in l:
                pairs.append((i, len(points) + j))
    return Pregeometry(["0", "1"], names, etype, pairs)


def multipartite_geometry(m, n, i):
    """Rank-3 structure on a complete multipartite graph with m parts of
    size n: vertices, edges and complete bipartite i,i-subgraphs between
    two parts, under inclusion.  Returns the geometry, the action of the
    per-part symmetric groups, and the full wreath-style action."""
    if m < 2:
        raise ValueError("need m >= 2")
    if not 1 < i < n:
        raise ValueError("need 1 < i < n")
    vname = {(c, s): "v%d.%d" % (c, s) for c in range(m) for s in range(n)}
    names = []
    etype = []
    vsets = []
    for c in range(m):
        for s in range(n):
            names.append(vname[(c, s)])
            etype.append(0)
            vsets.append(frozenset({(c, s)}))
    for c1, c2 in combinations(range(m), 2):
        for s1 in range(n):
            for s2 in range(n):
                pairset = frozenset({(c1, s1), (c2, s2)})
                names.append("{%s,%s}" % (vname[(c1, s1)], vname[(c2, s2)]))
                etype.append(1)
                vsets.append(pairset)
    for c1, c2 in combinations(range(m), 2):
        for sub1 in combinations(range(n), i):
            for sub2 in combinations(range(n), i):
                vset = frozenset({(c1, s) for s in sub1}
                                 | {(c2, s) for s in sub2})
                names.append("K{%s|%s}" % (
                    ",".join(vname[(c1, s)] for s in sub1),
                    ",".join(vname[(c2, s)] for s in sub2)))
                etype.append(2)
                vsets.append(vset)
    pairs = []
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            if etype[a] != etype[b] and (vsets[a] <= vsets[b]
                                         or vsets[b] <= vsets[a]):
                pairs.append((a, b))
    geom = Pregeometry(["vertex", "edge", "K%d%d" % (i, i)],
                       names, etype, pairs)
    index = {(etype[x], vsets[x]): x for x in range(len(names))}

    def vertex_perm(vmap):
        images = []
        for x in range(len(names)):
            target = frozenset(vmap(cs) for cs in vsets[x])
            images.append(index[(etype[x], target)])
        return Perm(images)

    ngens = []
    for c in range(m):
        ngens.append(vertex_perm(
            lambda cs, c=c: (cs[0], {0: 1, 1: 0}.get(cs[1], cs[1]))
            if cs[0] == c else cs))
        ngens.append(vertex_perm(
            lambda cs, c=c: (cs[0], (cs[1] + 1) % n) if cs[0] == c else cs))
    n_group = PermGroup(ngens, degree=geom.size)
    ggens = list(ngens)
    ggens.append(vertex_perm(
        lambda cs: ({0: 1, 1: 0}.get(cs[0], cs[0]), cs[1])))
    if m > 2:
        ggens.append(vertex_perm(lambda cs: ((cs[0] + 1) % m, cs[1])))
    g_group = PermGroup(ggens, degree=geom.size)
    return geom, n_group, g_group


def grid_complement():
    """The complement of the 3x3 grid, typed by row, with the partition
    pairing the first two columns in each row."""
    cells = [(r, c) for r in range(1, 4) for c in range(1, 4)]
    names = ["(%d,%d)" % rc for rc in cells]
    etype = [r - 1 for r, _ in cells]
    pairs = [(a, b) for a in range(9) for b in range(a + 1, 9)
             if cells[a][0] != cells[b][0] and cells[a][1] != cells[b][1]]
    geom = Pregeometry(["R1", "R2", "R3"], names, etype, pairs)
    blocks = []
    for r in range(1, 4):
        blocks.append((cells.index((r, 1)), cells.index((r, 2))))
        blocks.append((cells.index((r, 3)),))
    part = Partition(geom, blocks)
    return geom, part


def hexagon():
    """Six elements in a cycle, antipodal pairs sharing a type, with the
    antipodal automorphism of order two."""
    names = [str(x) for x in range(6)]
    etype = [x % 3 for x in range(6)]
    pairs = [(x, (x + 1) % 6) for x in range(6)]
    geom = Pregeometry(["T0", "T1", "T2"], names, etype, pairs)
    group = PermGroup([Perm([(x + 3) % 6 for x in range(6)])], degree=6)
    return geom, group


def eight_cycle():
    """The cycle of length eight as a rank-2 geometry, with the shift by
    four."""
    names = [str(x) for x in range(8)]
    etype = [x % 2 for x in range(8)]
    pairs = [(x, (x + 1) % 8) for x in range(8)]
    geom = Pregeometry(["even", "odd"], names, etype, pairs)
    group = PermGroup([Perm([(x + 4) % 8 for x in range(8)])], degree=8)
    return geom, group


def conneg_witness():
    """A rank-3 geometry whose rank-2 truncations are all connected but
    whose residue at one point is disconnected."""
    return Pregeometry.build(
        ["P", "L", "M"],
        [("p1", "P"), ("p2", "P"),
         ("l1", "L"), ("l2", "L"), ("l3", "L"),
         ("m1", "M"), ("m2", "M"), ("m3", "M")],
        [("p1", "l1"), ("p1", "l2"), ("p2", "l1"), ("p2", "l3"),
         ("p1", "m1"), ("p1", "m2"), ("p2", "m2"), ("p2", "m3"),
         ("l1", "m1"), ("l2", "m2"), ("l1", "m3"), ("l3", "m3"),
         ("l3", "m2")])


def flnotpq1_witness():
    """A rank-2 pregeometry with one incidence, quotiented by the two type
    classes: flags lift (rank two) but the one-element extension fails."""
    geom = Pregeometry.build(
        ["T0", "T1"],
        [("a1", "T0"), ("a2", "T0"), ("b1", "T1"), ("b2", "T1")],
        [("a2", "b1")])
    part = Partition(geom, [(0, 1), (2, 3)])
    return geom, part


def example_generators():
    """Named catalogue of the bespoke example constructors."""
    return {
        "hexagon": hexagon,
        "eightcycle": eight_cycle,
        "grid-complement": grid_complement,
        "multipartite": lambda: multipartite_geometry(2, 4, 2),
        "conneg": conneg_witness,
        "flnotpq1": flnotpq1_witness,
    }


def isomorphic(ga, gb):
    """Type-respecting incidence isomorphism by backtracking with
    (type, degree profile) invariants; returns (found, mapping)."""
    if ga.rank != gb.rank or ga.size != gb.size:
        return False, None
    if tuple(len(v) for v in ga.by_type) != tuple(len(v) for v in gb.by_type):
        return False, None
    if len(ga.pairs) != len(gb.pairs):
        return False, None

    def profile(g, x):
        nbr = sorted((g.elem_type[y], len(g.adj[y])) for y in g.adj[x])
        return (g.elem_type[x], len(g.adj[x]), tuple(nbr))

    pa = [profile(ga, x) for x in range(ga.size)]
    pb = [profile(gb, x) for x in range(gb.size)]
    if sorted(pa) != sorted(pb):
        return False, None
    cands = {x: [y for y in range(gb.size) if pb[y] == pa[x]]
             for x in range(ga.size)}
    order = sorted(range(ga.size), key=lambda x: (len(cands[x]), x))
    images = [None] * ga.size
    used = [False] * gb.size

    def rec(k):
        if k == ga.size:
            return True
        x = order[k]
        for y in cands[x]:
            if used[y]:
                continue
            if all(ga.incident(x, z) == gb.incident(y, images[z])
                   for z in order[:k]):
                images[x] = y
                used[y] = True
                if rec(k + 1):
                    return True
                used[y] = False
                images[x] = None
        return False

    if rec(0):
        return True, tuple(images)
    return False, None
