"""
Finite pregeometries: typed elements with a symmetric incidence relation.

A pregeometry is stored with dense integer indices for both types and
elements; all derived sets are ordered by index so every query is
deterministic.  Incidence is kept as an irreflexive edge set (reflexivity
is implicit).  Flags are sorted tuples of element indices.

Flag enumeration backtracks over types in fixed index order; the flag
count is exponential in the rank in the worst case, so everything here is
meant for desk scale (a few hundred elements, rank at most ~6).
"""

from __future__ import annotations

import math
from itertools import combinations

INF = math.inf


class Pregeometry:
    """Immutable element set with a type map and incidence edges."""

    __slots__ = ("type_names", "elem_names", "elem_type", "pairs", "adj",
                 "by_type", "_elem_index", "_type_index")

    def __init__(self, type_names, elem_names, elem_type, pairs):
        self.type_names = tuple(type_names)
        self.elem_names = tuple(elem_names)
        self.elem_type = tuple(elem_type)
        n = len(self.elem_names)
        if len(self.elem_type) != n:
            raise ValueError("one type per element required")
        if len(set(self.type_names)) != len(self.type_names):
            raise ValueError("duplicate type name")
        if len(set(self.elem_names)) != n:
            raise ValueError("duplicate element name")
        for t in self.elem_type:
            if not 0 <= t < len(self.type_names):
                raise ValueError("type index out of range: %r" % (t,))
        norm = set()
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError("element index out of range: (%r, %r)" % (a, b))
            if a == b:
                continue  # self-incidence is implicit
            norm.add((min(a, b), max(a, b)))
        self.pairs = frozenset(norm)
        adj = [set() for _ in range(n)]
        for a, b in self.pairs:
            adj[a].add(b)
            adj[b].add(a)
        self.adj = tuple(frozenset(s) for s in adj)
        by_type = [[] for _ in self.type_names]
        for x, t in enumerate(self.elem_type):
            by_type[t].append(x)
        self.by_type = tuple(tuple(v) for v in by_type)
        self._elem_index = {name: i for i, name in enumerate(self.elem_names)}
        self._type_index = {name: i for i, name in enumerate(self.type_names)}

    @classmethod
    def build(cls, types, elems, incs):
        """Construct from names: elems is (name, typename) pairs, incs name pairs."""
        tidx = {t: i for i, t in enumerate(types)}
        names = []
        etype = []
        for name, tname in elems:
            if tname not in tidx:
                raise ValueError("unknown type %r for element %r" % (tname, name))
            names.append(name)
            etype.append(tidx[tname])
        eidx = {name: i for i, name in enumerate(names)}
        pairs = []
        for a, b in incs:
            if a not in eidx or b not in eidx:
                raise ValueError("unknown element in incidence (%r, %r)" % (a, b))
            pairs.append((eidx[a], eidx[b]))
        return cls(types, names, etype, pairs)

    @property
    def rank(self):
        return len(self.type_names)

    @property
    def size(self):
        return len(self.elem_names)

    def elem(self, name):
        return self._elem_index[name]

    def type_id(self, name):
        return self._type_index[name]

    def incident(self, a, b):
        return a == b or (min(a, b), max(a, b)) in self.pairs

    def flag_names(self, flag):
        return tuple(self.elem_names[x] for x in flag)

    def __eq__(self, other):
        if not isinstance(other, Pregeometry):
            return NotImplemented
        return (self.type_names == other.type_names
                and self.elem_names == other.elem_names
                and self.elem_type == other.elem_type
                and self.pairs == other.pairs)

    def __hash__(self):
        return hash((self.type_names, self.elem_names, self.elem_type, self.pairs))

    def __repr__(self):
        return "Pregeometry(%d types, %d elements, %d incidences)" % (
            self.rank, self.size, len(self.pairs))


def validate(geom):
    """Check the pregeometry axioms; return None or a report naming the
    first violated invariant with witnesses."""
    for a, b in sorted(geom.pairs):
        if geom.elem_type[a] == geom.elem_type[b]:
            return ("same-type incidence: %s * %s (type %s)"
                    % (geom.elem_names[a], geom.elem_names[b],
                       geom.type_names[geom.elem_type[a]]))
    for t, members in enumerate(geom.by_type):
        if not members:
            return "empty type: %s has no elements" % geom.type_names[t]
    return None


def is_flag(geom, elems):
    """True iff elems are pairwise incident with pairwise distinct types."""
    elems = sorted(set(elems))
    types = [geom.elem_type[x] for x in elems]
    if len(set(types)) != len(types):
        return False
    return all(geom.incident(a, b) for a, b in combinations(elems, 2))


def as_flag(geom, elems):
    flag = tuple(sorted(set(elems)))
    if not is_flag(geom, flag):
        raise ValueError("not a flag: %r" % (tuple(geom.elem_names[x] for x in flag),))
    return flag


def flag_type(geom, flag):
    return frozenset(geom.elem_type[x] for x in flag)


def extensions(geom, flag):
    """Elements incident with every member of flag, excluding the flag itself.

    Incidence between distinct same-type elements is impossible in a valid
    pregeometry, so the result automatically avoids the flag's types.
    """
    if not flag:
        return sorted(range(geom.size))
    out = set(geom.adj[flag[0]])
    for x in flag[1:]:
        out &= geom.adj[x]
    return sorted(out)


def all_flags(geom):
    """Yield every flag (including the empty flag), each exactly once,
    extending by increasing element index."""
    def rec(flag, cand):
        yield tuple(flag)
        for i, x in enumerate(cand):
            nxt = [y for y in cand[i + 1:] if y in geom.adj[x]]
            flag.append(x)
            yield from rec(flag, nxt)
            flag.pop()
    yield from rec([], list(range(geom.size)))


def flags_by_rank_lex(geom):
    """All flags sorted by (rank, lexicographic), for minimal witnesses."""
    return sorted(all_flags(geom), key=lambda f: (len(f), f))


def flags_of_type(geom, types):
    """All flags whose type set is exactly the given set of type ids,
    by backtracking over types in index order."""
    J = sorted(set(types))
    for t in J:
        if not 0 <= t < geom.rank:
            raise ValueError("unknown type id %r" % (t,))
    out = []

    def rec(k, flag):
        if k == len(J):
            out.append(tuple(sorted(flag)))
            return
        for x in geom.by_type[J[k]]:
            if all(x in geom.adj[y] for y in flag):
                flag.append(x)
                rec(k + 1, flag)
                flag.pop()

    rec(0, [])
    return sorted(out)


def chambers(geom):
    return flags_of_type(geom, range(geom.rank))


def chamber_count_through(geom, flag):
    """Number of chambers containing the flag."""
    missing = sorted(set(range(geom.rank)) - set(flag_type(geom, flag)))
    count = 0

    def rec(k, cur):
        nonlocal count
        if k == len(missing):
            count += 1
            return
        for x in geom.by_type[missing[k]]:
            if all(x in geom.adj[y] for y in cur):
                cur.append(x)
                rec(k + 1, cur)
                cur.pop()

    rec(0, list(flag))
    return count


def is_geometry(geom):
    """True iff every maximal flag is a chamber; on failure returns a
    maximal flag of rank below the rank of the geometry."""
    for flag in all_flags(geom):
        if len(flag) < geom.rank and not extensions(geom, flag):
            return False, flag
    return True, None


def is_firm(geom):
    """True iff every corank-1 flag lies in at least two chambers; the
    witness is a failing flag together with its unique chamber."""
    ok, w = is_geometry(geom)
    if not ok:
        raise ValueError("is_firm requires a geometry (witness %r)"
                         % (geom.flag_names(w),))
    ok, w = corank1_chambers_at_least(geom, 2)
    return ok, w


def corank1_chambers_at_least(geom, bound):
    """Chamber-count test over corank-1 flags, usable on pregeometries."""
    for flag in all_flags(geom):
        if len(flag) != geom.rank - 1:
            continue
        ext = extensions(geom, flag)
        if len(ext) < bound:
            witness = (flag, tuple(sorted(flag + (ext[0],))) if ext else None)
            return False, witness
    return True, None


def residue(geom, flag):
    """The residue of a flag: elements incident with all of it, of types
    outside the flag's type set.  Returns the residue and the map from
    residue indices back to parent element indices."""
    flag = as_flag(geom, flag)
    ftypes = set(flag_type(geom, flag))
    cotypes = [t for t in range(geom.rank) if t not in ftypes]
    tmap = {t: k for k, t in enumerate(cotypes)}
    members = extensions(geom, flag)
    emap = {x: k for k, x in enumerate(members)}
    pairs = [(emap[a], emap[b]) for a, b in geom.pairs
             if a in emap and b in emap]
    res = Pregeometry(
        [geom.type_names[t] for t in cotypes],
        [geom.elem_names[x] for x in members],
        [tmap[geom.elem_type[x]] for x in members],
        pairs)
    return res, tuple(members)


def truncation(geom, types):
    """Restriction to the elements whose type lies in the given set."""
    J = sorted(set(types))
    if not J:
        raise ValueError("truncation to an empty type set")
    for t in J:
        if not 0 <= t < geom.rank:
            raise ValueError("unknown type id %r" % (t,))
    tmap = {t: k for k, t in enumerate(J)}
    members = [x for x in range(geom.size) if geom.elem_type[x] in tmap]
    emap = {x: k for k, x in enumerate(members)}
    pairs = [(emap[a], emap[b]) for a, b in geom.pairs
             if a in emap and b in emap]
    return Pregeometry(
        [geom.type_names[t] for t in J],
        [geom.elem_names[x] for x in members],
        [tmap[geom.elem_type[x]] for x in members],
        pairs)


def incidence_distance(geom, a, b):
    """Shortest-path length in the incidence graph, INF when unreachable."""
    if a == b:
        return 0
    seen = {a}
    frontier = [a]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for y in geom.adj[x]:
                if y == b:
                    return d
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return INF


def components(geom):
    """Connected components of the incidence graph, each sorted."""
    seen = set()
    out = []
    for start in range(geom.size):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for y in geom.adj[x]:
                    if y not in comp:
                        comp.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def is_connected(geom):
    return len(components(geom)) <= 1


def is_residually_connected(geom):
    """Every flag of corank >= 2 must have a nonempty connected residue;
    the witness is a minimal failing flag."""
    for flag in flags_by_rank_lex(geom):
        if geom.rank - len(flag) < 2:
            continue
        res, _ = residue(geom, flag)
        if res.size == 0 or not is_connected(res):
            return False, flag
    return True, None


def is_generalized_digon(geom):
    """Rank-2 test: every type-0 element incident with every type-1 element."""
    if geom.rank != 2:
        raise ValueError("generalised digon test requires rank 2, got %d" % geom.rank)
    return all(geom.incident(a, b)
               for a in geom.by_type[0] for b in geom.by_type[1])
