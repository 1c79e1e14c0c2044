from geoq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def gen_file(tmp_path, capsys, *argv):
    code, out, err = run(capsys, "gen", *argv, "--dir", str(tmp_path))
    assert code == 0, err
    return out


def test_check_good_geometry(tmp_path, capsys):
    gen_file(tmp_path, capsys, "ssg", "4", "3")
    code, out, _ = run(capsys, "check", str(tmp_path / "ssg-4-3.geo"))
    assert code == 0
    assert "geometry" in out and "firm" in out


def test_check_hexagon_fails_geometry(tmp_path, capsys):
    gen_file(tmp_path, capsys, "catalogue", "hexagon")
    code, out, _ = run(capsys, "--machine", "check",
                       str(tmp_path / "hexagon.geo"))
    assert code == 1
    lines = out.strip().splitlines()
    assert "geometry=false" in lines
    assert lines == sorted(lines)


def test_check_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.geo"
    bad.write_text("type A\nwhat is this\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2
    assert "line 2" in err


def test_check_missing_file(capsys):
    code, _, err = run(capsys, "check", "/nonexistent/x.geo")
    assert code == 2


def test_check_flag_cap(tmp_path, capsys):
    gen_file(tmp_path, capsys, "ssg", "4", "3")
    code, _, err = run(capsys, "check", str(tmp_path / "ssg-4-3.geo"),
                       "--max-flags", "5")
    assert code == 3
    assert "cap" in err


def test_group_order_cap(tmp_path, capsys):
    gen_file(tmp_path, capsys, "coseteg", "2")
    code, _, err = run(capsys, "axioms", str(tmp_path / "coseteg-2.geo"),
                       str(tmp_path / "coseteg-2.grp"),
                       "--max-group-order", "3")
    assert code == 3


def test_quotient_with_orbits(tmp_path, capsys):
    gen_file(tmp_path, capsys, "catalogue", "hexagon")
    out_file = tmp_path / "hexq.geo"
    code, out, _ = run(capsys, "--machine", "quotient",
                       str(tmp_path / "hexagon.geo"),
                       "--orbits", str(tmp_path / "hexagon.grp"),
                       "-o", str(out_file))
    assert code == 1  # flagslift and friends are false here
    assert "flagslift=false" in out
    assert "quotient-geometry=true" in out
    assert "tq3=false" in out
    text = out_file.read_text()
    assert "type T0" in text and "inc" in text


def test_quotient_with_partition(tmp_path, capsys):
    gen_file(tmp_path, capsys, "catalogue", "grid-complement")
    out_file = tmp_path / "gridq.geo"
    code, out, _ = run(capsys, "--machine", "quotient",
                       str(tmp_path / "grid-complement.geo"),
                       "--partition", str(tmp_path / "grid-complement.part"),
                       "-o", str(out_file))
    assert "quotient-geometry=true" in out
    assert out_file.exists()


def test_quotient_normal_closure(tmp_path, capsys):
    gen_file(tmp_path, capsys, "coseteg", "2")
    sub = tmp_path / "sub.grp"
    # one diagonal generator; its normal closure in the full action is the
    # diagonal subgroup itself (the cube of an abelian group)
    full = (tmp_path / "coseteg-2-n.grp").read_text()
    sub.write_text(full.splitlines()[0] + "\n")
    code, out, _ = run(capsys, "--machine", "quotient",
                       str(tmp_path / "coseteg-2.geo"),
                       "--orbits", str(sub),
                       "--normal-closure", str(tmp_path / "coseteg-2.grp"),
                       "-o", str(tmp_path / "q.geo"))
    assert "quotient-geometry=false" in out


def test_axioms_table(tmp_path, capsys):
    gen_file(tmp_path, capsys, "catalogue", "eightcycle")
    code, out, _ = run(capsys, "--machine", "axioms",
                       str(tmp_path / "eightcycle.geo"),
                       str(tmp_path / "eightcycle.grp"))
    assert code == 0
    for key in ("flagslift=true", "pq1=true", "pq2=true", "tq1=true",
                "tq2prime=true", "tq2doubleprime=true", "tq3=true",
                "residually-surjective=true", "is-cover=true"):
        assert key in out


def test_diagram_command(tmp_path, capsys):
    gen_file(tmp_path, capsys, "ssg", "5", "3")
    code, out, _ = run(capsys, "diagram", str(tmp_path / "ssg-5-3.geo"))
    assert code == 0
    assert "pair-0-1" in out and "edge" in out
    assert "forest" in out


def test_iso_command(tmp_path, capsys):
    gen_file(tmp_path, capsys, "ssg", "3", "2")
    gen_file(tmp_path, capsys, "catalogue", "hexagon")
    code, out, _ = run(capsys, "iso", str(tmp_path / "ssg-3-2.geo"),
                       str(tmp_path / "ssg-3-2.geo"))
    assert code == 0 and "isomorphic" in out
    code, _, _ = run(capsys, "iso", str(tmp_path / "ssg-3-2.geo"),
                     str(tmp_path / "hexagon.geo"))
    assert code == 1


def test_gen_all_kinds(tmp_path, capsys):
    gen_file(tmp_path, capsys, "affine", "2", "2")
    assert (tmp_path / "affine-2-2.geo").exists()
    assert (tmp_path / "affine-2-2.grp").exists()
    gen_file(tmp_path, capsys, "coseteg", "2")
    for suffix in (".geo", ".grp", "-n.grp"):
        assert (tmp_path / ("coseteg-2" + suffix)).exists()
    gen_file(tmp_path, capsys, "ssg", "3", "2")
    gen_file(tmp_path, capsys, "blowup", str(tmp_path / "ssg-3-2.geo"),
             str(write_graph(tmp_path)))
    assert (tmp_path / "blowup.geo").exists()
    gen_file(tmp_path, capsys, "lift", str(tmp_path / "ssg-3-2.geo"), "3", "2")
    assert (tmp_path / "lift-3-2.geo").exists()


def write_graph(tmp_path):
    path = tmp_path / "k2.graph"
    path.write_text("vert a\nvert b\nedge a b\n")
    return path


def test_gen_catalogue_every_entry(tmp_path, capsys):
    from geoq.constructions import example_generators
    for name in example_generators():
        gen_file(tmp_path, capsys, "catalogue", name)
        assert (tmp_path / (name + ".geo")).exists()
    # the multipartite entry carries two groups
    assert (tmp_path / "multipartite.grp").exists()
    assert (tmp_path / "multipartite-2.grp").exists()
    assert (tmp_path / "grid-complement.part").exists()


def test_gen_catalogue_unknown(capsys):
    code, _, err = run(capsys, "gen", "catalogue", "nope")
    assert code == 2
    assert "unknown catalogue" in err


def test_reproduce_subset(capsys):
    code, out, _ = run(capsys, "reproduce", "hexagon", "grid-complement")
    assert code == 0
    assert "hexagon" in out and "PASS" in out


def test_reproduce_unknown_scenario(capsys):
    code, _, err = run(capsys, "reproduce", "made-up")
    assert code == 2
    assert "known scenarios" in err


def test_reproduce_detects_corruption(capsys, monkeypatch):
    import geoq.reproduce as rep
    real = rep.golden_text

    def corrupt(name):
        text = real(name)
        if name == "hexagon.geo":
            return text.replace("inc 0 1", "inc 0 3")
        return text

    monkeypatch.setattr(rep, "golden_text", corrupt)
    code, out, _ = run(capsys, "reproduce", "goldens")
    assert code == 1
    assert "FAIL" in out
    assert "-inc 0 1" in out and "+inc 0 3" in out
