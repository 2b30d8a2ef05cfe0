import json

from whmetric.cli import main

SPACE_33 = """
[space]
q = 2
blocks = 3,3
lambda = 1,2
"""

TWO_BLOCK = SPACE_33 + """
[gcc]
levels = 1
chain.1 = repetition:3
chain.2 = full:3
outer.1 = full
"""

TWO_LEVEL = """
[space]
q = 2
blocks = 6,3
lambda = 1,2

[gcc]
levels = 2
chain.1 = rows:111111|111000 ; rows:111111
chain.2 = full:3 ; rows:111
outer.1 = rows:1,1,1
outer.2 = full
"""

THREE_BLOCK = """
[space]
q = 2
blocks = 3,3,3
lambda = 1,2,3

[gcc]
levels = 1
chain.1 = repetition:3
chain.2 = parity:3
chain.3 = full:3
outer.1 = mother:parity:3:2
"""

RECIPE_21 = """
[space]
q = 2
blocks = 7,7,7
lambda = 1,2,3

[gcc]
levels = 1
chain.1 = hamming:7
chain.2 = full:7
chain.3 = full:7
outer.1 = full
"""


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_bounds_csv(tmp_path, capsys):
    cfg = write(tmp_path, "space.cfg", SPACE_33)
    code, out = run(capsys, ["bounds", "--config", cfg, "--t-min", "0", "--t-max", "3"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,packing,singleton,lp,covering"
    assert lines[1] == "0,6,6,6,6"
    code2, out2 = run(capsys, ["bounds", "--config", cfg, "--t-min", "0", "--t-max", "3"])
    assert out2 == out  # byte-stable


def test_bounds_empty_range(tmp_path, capsys):
    cfg = write(tmp_path, "space.cfg", SPACE_33)
    code, out = run(capsys, ["bounds", "--config", cfg, "--t-min", "3", "--t-max", "2"])
    assert code == 0
    assert out == "t,packing,singleton,lp,covering\n"


def test_bounds_json_includes_raw_lp_optimum(tmp_path, capsys):
    cfg = write(tmp_path, "space.cfg", SPACE_33)
    code, out = run(
        capsys,
        ["bounds", "--config", cfg, "--t-min", "0", "--t-max", "1", "--format", "json"],
    )
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["t"] == 0
    assert rows[0]["lp_optimum"] == "64"


def test_bounds_requires_t_max(tmp_path, capsys):
    cfg = write(tmp_path, "space.cfg", SPACE_33)
    code, _ = run(capsys, ["bounds", "--config", cfg])
    assert code == 2


def test_config_errors_exit_2(tmp_path, capsys):
    bad = write(tmp_path, "bad.cfg", "[space]\nq = 2\nblocks = 3,3\nlambda = 2,1\n")
    assert run(capsys, ["bounds", "--config", bad, "--t-max", "1"])[0] == 2
    bad2 = write(tmp_path, "bad2.cfg", SPACE_33 + "stray = 1\n")
    assert run(capsys, ["bounds", "--config", bad2, "--t-max", "1"])[0] == 2
    bad3 = write(tmp_path, "bad3.cfg", "[space]\nq = 6\nblocks = 3\nlambda = 1\n")
    assert run(capsys, ["bounds", "--config", bad3, "--t-max", "1"])[0] == 2
    missing = str(tmp_path / "nope.cfg")
    assert run(capsys, ["bounds", "--config", missing, "--t-max", "1"])[0] == 2


def test_exhaustion_exit_3(tmp_path, capsys):
    cfg = write(
        tmp_path,
        "tight.cfg",
        TWO_BLOCK + "\n[limits]\nmax_codewords = 4\n",
    )
    gen = write(tmp_path, "gen.txt", "2 6 4\n1 1 1 0 0 0\n0 0 0 1 0 0\n0 0 0 0 1 0\n0 0 0 0 0 1\n")
    code, _ = run(capsys, ["analyze", "--config", cfg, gen])
    assert code == 3


def test_construct_two_block(tmp_path, capsys):
    cfg = write(tmp_path, "two.cfg", TWO_BLOCK)
    out_path = tmp_path / "gen.txt"
    code, out = run(capsys, ["construct", "--config", cfg, "--out", str(out_path)])
    assert code == 0
    assert out.splitlines()[0] == "n,k,d_designed,t_designed"
    assert out.splitlines()[1] == "6,4,2,1"
    text = out_path.read_text()
    assert text.splitlines()[0] == "2 6 4"


def test_construct_three_block_with_mother_outer(tmp_path, capsys):
    cfg = write(tmp_path, "three.cfg", THREE_BLOCK)
    code, out = run(capsys, ["construct", "--config", cfg])
    assert code == 0
    assert "9,3,6,2" in out


def test_construct_two_level(tmp_path, capsys):
    cfg = write(tmp_path, "nine.cfg", TWO_LEVEL)
    code, out = run(capsys, ["construct", "--config", cfg, "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["length"] == 9
    assert payload["dimension"] == 3
    assert payload["designed_distance"] == 5
    assert payload["capability_floor"] == 2


def test_construct_recipe_21_18(tmp_path, capsys):
    cfg = write(tmp_path, "big.cfg", RECIPE_21)
    code, out = run(capsys, ["construct", "--config", cfg])
    assert code == 0
    assert out.splitlines()[1] == "21,18,2,1"


def test_analyze_constructed_code(tmp_path, capsys):
    cfg = write(tmp_path, "two.cfg", TWO_BLOCK)
    out_path = tmp_path / "gen.txt"
    run(capsys, ["construct", "--config", cfg, "--out", str(out_path)])
    code, out = run(capsys, ["analyze", "--config", cfg, str(out_path)])
    assert code == 0
    report = json.loads(out)
    assert report["min_weighted_distance"] == 2
    assert report["capability"] == 1
    assert report["bounds_at_capability"]["packing"] >= report["dimension"]


def test_decode_roundtrip_and_correction(tmp_path, capsys):
    cfg = write(tmp_path, "two.cfg", TWO_BLOCK)
    clean = write(tmp_path, "clean.txt", "1 1 1 0 0 1\n")
    code, out = run(capsys, ["decode", "--config", cfg, clean])
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "ok"
    assert report["codeword"] == [1, 1, 1, 0, 0, 1]
    noisy = write(tmp_path, "noisy.txt", "1 0 1 0 0 1\n")
    code, out = run(capsys, ["decode", "--config", cfg, noisy])
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "ok"
    assert report["codeword"] == [1, 1, 1, 0, 0, 1]


def test_search_frontier_contains_recipe_point(tmp_path, capsys):
    cfg = write(
        tmp_path,
        "search.cfg",
        """
[space]
q = 2
blocks = 7,7,7
lambda = 1,2,3

[search]
inner = repetition,parity,hamming,full
max_levels = 2
outer = full
""",
    )
    code, out = run(capsys, ["search", "--config", cfg])
    assert code == 0
    blocks = out.strip().split("\n\n")
    assert blocks[0].splitlines()[0] == "t,k"
    assert "1,18" in blocks[0].splitlines()
    assert blocks[1].splitlines()[0] == "d,k"


def test_enumerate_profiles(tmp_path, capsys):
    cfg = write(tmp_path, "space.cfg", SPACE_33)
    code, out = run(capsys, ["enumerate", "--config", cfg, "--t-max", "2"])
    assert code == 0
    assert out.splitlines() == ["0,0", "0,1", "1,0", "2,0"]
    code, out = run(
        capsys,
        ["enumerate", "--config", cfg, "--t-max", "1", "--set", "diff", "--format", "json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["profiles"] == [[0, 0], [1, 0], [2, 0]]
    assert payload["cardinality"] == 1 + 3 + 3


def test_output_file_flag(tmp_path, capsys):
    cfg = write(tmp_path, "space.cfg", SPACE_33)
    dest = tmp_path / "table.csv"
    code, out = run(capsys, ["bounds", "--config", cfg, "--t-max", "1", "--out", str(dest)])
    assert code == 0
    assert out == ""
    assert dest.read_text().splitlines()[0] == "t,packing,singleton,lp,covering"


def test_analyze_two_level_code(tmp_path, capsys):
    cfg = write(tmp_path, "nine.cfg", TWO_LEVEL)
    gen = tmp_path / "gen9.txt"
    code, _ = run(capsys, ["construct", "--config", cfg, "--out", str(gen)])
    assert code == 0
    code, out = run(capsys, ["analyze", "--config", cfg, str(gen)])
    assert code == 0
    report = json.loads(out)
    assert report["min_weighted_distance"] == 5
    assert report["capability"] == 2


def test_construct_mother_outer_with_unsorted_widths(tmp_path, capsys):
    cfg = write(
        tmp_path,
        "swap.cfg",
        """
[space]
q = 2
blocks = 3,3
lambda = 1,2

[gcc]
levels = 1
chain.1 = full:3
chain.2 = parity:3
outer.1 = mother:parity:2:1
""",
    )
    code, out = run(capsys, ["construct", "--config", cfg])
    assert code == 0
    # widths (3, 2): the mother-derived outer is permuted back onto them
    assert out.splitlines()[1] == "6,2,5,2"


def test_chain_spec_from_matrix_file(tmp_path, capsys):
    write(tmp_path, "inner.txt", "2 3 1\n1 1 1\n")
    cfg = write(
        tmp_path,
        "filechain.cfg",
        SPACE_33
        + """
[gcc]
levels = 1
chain.1 = file:inner.txt
chain.2 = full:3
outer.1 = full
""",
    )
    code, out = run(capsys, ["construct", "--config", cfg])
    assert code == 0
    assert out.splitlines()[1] == "6,4,2,1"
