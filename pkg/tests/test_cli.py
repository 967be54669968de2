import json

from retnet import cli


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_trees_count_only(capsys):
    code, out = run(capsys, "trees", "--n", "4", "--mode", "rooted", "--count-only")
    assert code == 0
    assert out.strip() == "15"


def test_trees_stream_jsonl(capsys):
    code, out = run(capsys, "trees", "--n", "3", "--mode", "rooted")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert len(rows) == 3
    assert all("newick" in row for row in rows)


def test_trees_stream_csv(capsys):
    code, out = run(capsys, "trees", "--n", "3", "--mode", "rooted",
                    "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "newick"
    assert len(lines) == 4


def test_networks_count(capsys):
    code, out = run(capsys, "networks", "--n", "3", "--r", "1", "--count-only")
    assert code == 0
    assert out.strip() == "21"


def test_output_independent_of_jobs(capsys):
    _, a = run(capsys, "networks", "--n", "3", "--r", "1", "--jobs", "1")
    _, b = run(capsys, "networks", "--n", "3", "--r", "1", "--jobs", "4")
    assert a == b


def test_encode_decode_roundtrip(tmp_path, capsys):
    net = tmp_path / "n.enwk"
    net.write_text("((1,(3)#H1),(2,#H1));\n")
    lab = tmp_path / "lab.json"
    lab.write_text('{"edge_labels": [[3, 2, 1]]}')
    code, out = run(capsys, "encode", "--network", str(net), "--labels", str(lab))
    assert code == 0
    tree = tmp_path / "t.nwk"
    tree.write_text(out)
    code, out = run(capsys, "decode", "--tree", str(tree), "--n", "3", "--r", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["network"] == "((1,(3)#H1),(2,#H1));"


def test_display_and_displayed(tmp_path, capsys):
    net = tmp_path / "n.enwk"
    net.write_text("((1,(3)#H1),(2,#H1));\n")
    tree = tmp_path / "t.nwk"
    tree.write_text("(1,(2,3));\n")
    code, out = run(capsys, "display", "--network", str(net), "--tree", str(tree))
    assert code == 0
    assert json.loads(out)["displays"] is True
    code, out = run(capsys, "displayed", "--network", str(net), "--count-only")
    assert code == 0
    assert out.strip() == "2"


def test_trivial_reticulation_tags(tmp_path, capsys):
    a = tmp_path / "a.nwk"
    b = tmp_path / "b.nwk"
    a.write_text("(1,(2,3));\n")
    b.write_text("((1,2),3);\n")
    code, out = run(capsys, "trivial", "--trees", str(a), "--trees", str(b))
    assert code == 0
    # (t-1)n reticulations, each tagged once with a subtree, once bare
    assert out.count("#H") == 2 * (2 - 1) * 3


def test_verify_lemmas_csv(capsys):
    code, out = run(capsys, "verify", "--lemmas", "--kmax", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("name,")
    assert all(line.endswith("True") for line in lines[1:])


def test_bounds_counting_lower(capsys):
    code, out = run(capsys, "bounds", "--stmt", "counting-lower",
                    "--n", "64", "--t", "2")
    assert code == 0
    assert json.loads(out)["r"] >= 1


def test_usage_error_exit_2(capsys):
    code, _ = run(capsys, "nosuchcommand")
    assert code == 2
    code, _ = run(capsys, "bounds", "--stmt", "counting-lower", "--n", "64")
    assert code == 2


def test_domain_error_exit_1(capsys):
    code, _ = run(capsys, "verify", "--lemmas", "--kmax", "3")
    assert code == 1


def test_seeded_worstcase_reproducible(capsys):
    _, a = run(capsys, "worstcase", "--n", "3", "--t", "2",
               "--samples", "5", "--seed", "9")
    _, b = run(capsys, "worstcase", "--n", "3", "--t", "2",
               "--samples", "5", "--seed", "9")
    assert a == b
