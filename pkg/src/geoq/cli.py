"""
Command-line front end.

Exit codes: 0 when every requested check holds, 1 when some reported
check is false or a comparison fails, 2 for parse/usage errors, 3 when a
size cap is exceeded (a refusal, never a wrong answer).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import io as gio
from .axioms import OrbitQuotient, axioms_report, format_witness
from .cosets import FiniteGroup, coseteg_family
from .constructions import (affine_geometry, blowup, example_generators,
                            isomorphic, shadowable_lift, ssg)
from .diagram import basic_diagram
from .geometry import (all_flags, is_connected, is_firm, is_geometry,
                       is_residually_connected, validate)
from .lemmas import seed_from_env
from .perms import CapExceeded, normal_closure, orbit_partition
from .quotient import (Projection, check_flagslift, check_PQ1, check_PQ2,
                       is_cover, min_block_distance)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_CAP = 3


class Cap(Exception):
    pass


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise gio.ParseError(0, "cannot read %s: %s" % (path, exc))


def _load_geometry(path):
    return gio.parse_geometry(_read(path))


def _count_flags_capped(geom, cap):
    n = 0
    for _ in all_flags(geom):
        n += 1
        if n > cap:
            raise Cap("flag count exceeds --max-flags %d" % cap)
    return n


def _emit(rows, notes, machine, elapsed=None):
    """rows: list of (key, value, witness-or-None)."""
    if machine:
        for key, value, _ in sorted(rows):
            print("%s=%s" % (key, _machine_value(value)))
    else:
        width = max(len(k) for k, _, _ in rows) if rows else 0
        for key, value, witness in sorted(rows):
            line = "%-*s  %s" % (width, key, _machine_value(value))
            if witness is not None:
                line += "   witness: %s" % (witness,)
            print(line)
        for note in notes:
            print("note: %s" % note)
        if elapsed is not None:
            print("elapsed: %.2fs" % elapsed)


def _machine_value(value):
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value is None:
        return "ok"
    return str(value)


def _exit_from_rows(rows):
    for _, value, _ in rows:
        if value is False:
            return EXIT_CHECK_FAILED
    return EXIT_OK


def _witness_names(geom, flag):
    if flag is None:
        return None
    return "{%s}" % ",".join(geom.elem_names[x] for x in flag)


def cmd_check(args):
    geom = _load_geometry(args.geometry)
    _count_flags_capped(geom, args.max_flags)
    t0 = time.time()
    rows = []
    bad = validate(geom)
    rows.append(("validate", bad is None, bad))
    geo, w = is_geometry(geom)
    rows.append(("geometry", geo, _witness_names(geom, w)))
    rows.append(("connected", is_connected(geom), None))
    rc, w = is_residually_connected(geom)
    rows.append(("residually-connected", rc, _witness_names(geom, w)))
    if geo and bad is None:
        firm, w = is_firm(geom)
        rows.append(("firm", firm,
                     None if firm else _witness_names(geom, w[0])))
        diag = basic_diagram(geom)
        rows.append(("diagram-edges",
                     ";".join("%d-%d" % tuple(sorted(e)) for e in
                              sorted(diag.edges, key=sorted)) or "none", None))
    _emit(rows, [], args.machine, time.time() - t0)
    return _exit_from_rows(rows)


def _load_projection(args, geom):
    if args.partition:
        part = gio.parse_partition(_read(args.partition), geom)
        return Projection(geom, part), None
    group = gio.parse_group(_read(args.orbits), geom, cap=args.max_group_order)
    if args.normal_closure:
        over = gio.parse_group(_read(args.normal_closure), geom,
                               cap=args.max_group_order)
        group = normal_closure(over, group)
    part = orbit_partition(group, geom)
    return Projection(geom, part), group


def cmd_quotient(args):
    geom = _load_geometry(args.geometry)
    _count_flags_capped(geom, args.max_flags)
    t0 = time.time()
    proj, group = _load_projection(args, geom)
    out = args.output or (Path(args.geometry).stem + ".quotient.geo")
    Path(out).write_text(gio.format_geometry(proj.quotient))
    rows = []
    q = proj.quotient
    fl, w = check_flagslift(proj)
    rows.append(("flagslift", fl, _witness_names(q, w)))
    geo, w = is_geometry(q)
    rows.append(("quotient-geometry", geo, _witness_names(q, w)))
    rows.append(("cover", is_cover(proj), None))
    pq1, w = check_PQ1(proj)
    rows.append(("pq1", pq1,
                 None if pq1 else _witness_names(geom, w[0])))
    pq2, w = check_PQ2(proj)
    rows.append(("pq2", pq2, _witness_names(geom, w)))
    rows.append(("min-block-distance",
                 str(min_block_distance(geom, proj.partition)), None))
    if group is not None:
        oq = OrbitQuotient(geom, group)
        for name, (value, witness) in sorted(axioms_report(oq).items()):
            if name in ("flagslift", "pq1", "pq2", "is-cover"):
                continue
            rows.append((name, value, format_witness(oq, name, witness)))
    notes = ["quotient written to %s" % out]
    _emit(rows, notes, args.machine, time.time() - t0)
    return _exit_from_rows(rows)


def cmd_axioms(args):
    geom = _load_geometry(args.geometry)
    _count_flags_capped(geom, args.max_flags)
    group = gio.parse_group(_read(args.group), geom, cap=args.max_group_order)
    t0 = time.time()
    oq = OrbitQuotient(geom, group)
    rows = []
    for name, (value, witness) in sorted(axioms_report(oq).items()):
        rows.append((name, value, format_witness(oq, name, witness)))
    _emit(rows, [], args.machine, time.time() - t0)
    return _exit_from_rows(rows)


def cmd_diagram(args):
    geom = _load_geometry(args.geometry)
    t0 = time.time()
    diag = basic_diagram(geom)
    rows = []
    for (i, j), (kind, flag) in sorted(diag.evidence.items()):
        key = "pair-%s-%s" % (geom.type_names[i], geom.type_names[j])
        if kind == "edge":
            rows.append((key, "edge", _witness_names(geom, flag)))
        else:
            rows.append((key, kind, None))
    rows.append(("forest", diag.is_forest(), None))
    _emit(rows, [], args.machine, time.time() - t0)
    return EXIT_OK


def cmd_iso(args):
    ga = _load_geometry(args.first)
    gb = _load_geometry(args.second)
    found, mapping = isomorphic(ga, gb)
    rows = [("isomorphic", found,
             None if mapping is None else
             " ".join("%s->%s" % (ga.elem_names[x], gb.elem_names[y])
                      for x, y in enumerate(mapping)))]
    _emit(rows, [], args.machine)
    return EXIT_OK if found else EXIT_CHECK_FAILED


def _write_outputs(prefix, outputs, directory):
    base = Path(directory or ".")
    base.mkdir(parents=True, exist_ok=True)
    for suffix, text in outputs:
        path = base / (prefix + suffix)
        path.write_text(text)
        print("wrote %s" % path)
    return EXIT_OK


def cmd_gen(args):
    kind = args.what
    if kind == "ssg":
        geom = ssg(args.a, args.b)
        return _write_outputs(args.output or "ssg-%d-%d" % (args.a, args.b),
                              [(".geo", gio.format_geometry(geom))], args.dir)
    if kind == "affine":
        geom, trans = affine_geometry(args.a, args.b)
        prefix = args.output or "affine-%d-%d" % (args.a, args.b)
        return _write_outputs(prefix,
                              [(".geo", gio.format_geometry(geom)),
                               (".grp", gio.format_group(trans, geom))],
                              args.dir)
    if kind == "coseteg":
        fam = coseteg_family(FiniteGroup.cyclic(args.a))
        geom = fam.geometry
        prefix = args.output or "coseteg-%d" % args.a
        return _write_outputs(
            prefix,
            [(".geo", gio.format_geometry(geom)),
             (".grp", gio.format_group(fam.action_group(), geom)),
             ("-n.grp", gio.format_group(fam.n_action_group(), geom))],
            args.dir)
    if kind == "blowup":
        geom = _load_geometry(args.geometry)
        graph = gio.parse_graph(_read(args.graph))
        big = blowup(geom, graph)
        return _write_outputs(args.output or "blowup",
                              [(".geo", gio.format_geometry(big))], args.dir)
    if kind == "lift":
        geom = _load_geometry(args.geometry)
        lift = shadowable_lift(geom, args.a, args.b)
        prefix = args.output or "lift-%d-%d" % (args.a, args.b)
        return _write_outputs(prefix,
                              [(".geo", gio.format_geometry(lift.geometry))],
                              args.dir)
    if kind == "catalogue":
        gens = example_generators()
        if args.name not in gens:
            print("unknown catalogue entry %r; have: %s"
                  % (args.name, ", ".join(sorted(gens))), file=sys.stderr)
            return EXIT_PARSE
        made = gens[args.name]()
        prefix = args.output or args.name
        items = made if isinstance(made, tuple) else (made,)
        geom = items[0]
        outputs = [(".geo", gio.format_geometry(geom))]
        from .perms import PermGroup
        from .quotient import Partition
        groups = 0
        for extra in items[1:]:
            if isinstance(extra, PermGroup):
                suffix = ".grp" if groups == 0 else "-%d.grp" % (groups + 1)
                outputs.append((suffix, gio.format_group(extra, geom)))
                groups += 1
            elif isinstance(extra, Partition):
                outputs.append((".part", gio.format_partition(extra, geom)))
        return _write_outputs(prefix, outputs, args.dir)
    raise AssertionError(kind)


def cmd_reproduce(args):
    from .reproduce import run_scenarios, SCENARIOS
    try:
        reports = run_scenarios(args.names or None, count=args.count,
                                seed=seed_from_env())
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        print("known scenarios: %s" % ", ".join(n for n, _ in SCENARIOS),
              file=sys.stderr)
        return EXIT_PARSE
    all_ok = True
    for rep in reports:
        status = "PASS" if rep.ok else "FAIL"
        if args.machine:
            print("%s=%s" % (rep.name, status.lower()))
            for line in rep.render(machine=True):
                print(line)
        else:
            print("%-34s %-4s  %6.2fs" % (rep.name, status, rep.elapsed))
            if not rep.ok or args.verbose:
                for line in rep.render():
                    print(line)
        all_ok = all_ok and rep.ok
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


def build_parser():
    top = argparse.ArgumentParser(
        prog="geoq",
        description="finite incidence pregeometries: checks, quotients, "
                    "axioms, diagrams and example generators")
    top.add_argument("--machine", action="store_true",
                     help="stable line-oriented key=value output")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--max-group-order", type=int, default=200_000)
        p.add_argument("--max-flags", type=int, default=2_000_000)

    p = sub.add_parser("check", help="validate a geometry file and run the "
                                     "structural checks")
    p.add_argument("geometry")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("quotient", help="quotient by a partition or orbits")
    p.add_argument("geometry")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--partition")
    g.add_argument("--orbits")
    p.add_argument("--normal-closure", metavar="OVERGROUP",
                   help="replace the orbit group by its normal closure in "
                        "this overgroup before orbiting")
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("axioms", help="quotient-axiom table for an "
                                      "orbit-quotient")
    p.add_argument("geometry")
    p.add_argument("group")
    common(p)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("diagram", help="basic diagram with witnesses")
    p.add_argument("geometry")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("iso", help="type-respecting isomorphism test")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("gen", help="emit example files")
    gensub = p.add_subparsers(dest="what", required=True)
    q = gensub.add_parser("ssg")
    q.add_argument("a", type=int, metavar="v")
    q.add_argument("b", type=int, metavar="k")
    q = gensub.add_parser("affine")
    q.add_argument("a", type=int, metavar="d")
    q.add_argument("b", type=int, metavar="q")
    q = gensub.add_parser("coseteg")
    q.add_argument("a", type=int, metavar="n")
    q = gensub.add_parser("blowup")
    q.add_argument("geometry")
    q.add_argument("graph")
    q = gensub.add_parser("lift")
    q.add_argument("geometry")
    q.add_argument("a", type=int, metavar="n")
    q.add_argument("b", type=int, metavar="j")
    q = gensub.add_parser("catalogue")
    q.add_argument("name")
    for q in gensub.choices.values():
        q.add_argument("-o", "--output")
        q.add_argument("--dir")
        q.set_defaults(func=cmd_gen)

    p = sub.add_parser("reproduce", help="run the reproduction scenarios")
    p.add_argument("names", nargs="*")
    p.add_argument("--count", type=int, default=200,
                   help="instances per randomized suite")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except gio.ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except Cap as exc:
        print("cap exceeded: %s" % exc, file=sys.stderr)
        return EXIT_CAP
    except CapExceeded as exc:
        print("cap exceeded: %s" % exc, file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
