from vertexmagic.cli import main


def test_group_list(capsys):
    assert main(["group", "list", "--max-order", "6"]) == 0
    out = capsys.readouterr().out
    assert "Z2+Z2" in out and "Z6" in out


def test_group_info(capsys):
    assert main(["group", "info", "V4"]) == 0
    out = capsys.readouterr().out
    assert "order: 4" in out and "squares: none" in out


def test_family_build_and_dot(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    assert main(["family", "build", "M11(0,0)", "--dot", str(dot)]) == 0
    assert "n=7 m=8" in capsys.readouterr().out
    assert dot.read_text().startswith("graph ")


def test_family_list(capsys):
    assert main(["family", "list"]) == 0
    assert "B3-M11" in capsys.readouterr().out


def test_verify_labels(capsys):
    rc = main(["verify", "C4", "--group", "Z3",
               "--labels", "v0=1,v1=1,v2=1,v3=1"])
    assert rc == 0
    assert "mu=2" in capsys.readouterr().out


def test_verify_not_magic(capsys):
    rc = main(["verify", "C4", "--group", "Z3",
               "--labels", "v0=1,v1=1,v2=1,v3=2"])
    assert rc == 0
    assert "not magic" in capsys.readouterr().out


def test_solve_and_count(capsys):
    assert main(["solve", "M11(0,0)", "--group", "Z4"]) == 0
    assert "witness" in capsys.readouterr().out
    assert main(["solve", "C4", "--group", "Z3", "--count"]) == 0
    assert "labelings: 6" in capsys.readouterr().out


def test_solve_graph_file(tmp_path, capsys):
    path = tmp_path / "c4.txt"
    path.write_text("4\n0 1\n1 2\n2 3\n3 0\n")
    assert main(["solve", str(path), "--group", "Z2"]) == 0
    assert "witness" in capsys.readouterr().out


def test_predict(capsys):
    assert main(["predict", "G2(1,0)", "--group", "Z4", "--construct"]) == 0
    out = capsys.readouterr().out
    assert "magic [Prop3.2]" in out and "construction:" in out


def test_classify(capsys):
    assert main(["classify", "M11(0,0)"]) == 0
    assert "yes [Thm4.15]" in capsys.readouterr().out


def test_usage_errors():
    assert main(["group", "info", "Q8"]) == 2
    assert main(["solve", "nosuchfile.txt", "--group", "Z4"]) == 2
    assert main(["family", "build", "G2(0,1)"]) == 2


def test_audit_cli(capsys):
    assert main(["audit", "--nmax", "8"]) == 0
    assert "unrecognized: none" in capsys.readouterr().out


def test_backend_cli(capsys):
    assert main(["backend"]) == 0
    assert "kernel backend" in capsys.readouterr().out
