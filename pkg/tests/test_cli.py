import json

import pytest

from pulsar.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_usage(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main([str(a) for a in argv])
    capsys.readouterr()
    return exc.value.code


def test_pattern_ascii(capsys):
    code, out, _ = run(capsys, "pattern", 2, "--format", "ascii")
    assert code == 0
    assert out == "( )( )\n . ( )\n"


def test_pattern_json(capsys):
    _, out, _ = run(capsys, "pattern", 5, "--format", "json")
    doc = json.loads(out)
    assert doc["n"] == 5 and "grid" not in doc
    assert sum(map(sum, doc["circled"])) == 15


def test_pattern_svg(capsys):
    _, out, _ = run(capsys, "pattern", 3, "--format", "svg")
    assert out.startswith("<svg") and out.count("<circle") == 6
    assert 'width="120"' in out


def test_pattern_bad(capsys):
    assert run_usage(capsys, "pattern", 0) == 2
    assert run_usage(capsys, "pattern", 3, "--format", "png") == 2


def test_seq(capsys):
    assert run(capsys, "seq", "--terms", 10)[1] == "1,2,1,3,2,1,4,2,3,1\n"
    assert run(capsys, "seq", "--block", 6)[1] == "6,2,4,3,5,1\n"
    assert run(capsys, "seq", "--bfile", 3)[1] == "1 1\n2 2\n3 1\n"


def test_seq_block_8_notes_printed_version(capsys):
    code, out, err = run(capsys, "seq", "--block", 8)
    assert out == "8,2,6,4,5,3,7,1\n"
    assert "8,2,6,5,6,3,7,1" in err


def test_seq_bad(capsys):
    assert run_usage(capsys, "seq") == 2
    assert run_usage(capsys, "seq", "--terms", -1) == 2
    assert run_usage(capsys, "seq", "--terms", 3, "--block", 2) == 2


def test_bfile_format(capsys):
    _, out, _ = run(capsys, "seq", "--bfile", 300)
    lines = out.splitlines()
    assert len(lines) == 300
    pairs = [tuple(map(int, line.split(" "))) for line in lines]
    assert [k for k, _ in pairs] == list(range(1, 301))
    assert all(x >= 1 for _, x in pairs)


def test_construct_ascii(capsys):
    _, out, _ = run(capsys, "construct", 2, "--format", "ascii")
    assert out == "(2)(1)\n 1 (2)\n"


def test_construct_ascii_wide(capsys):
    _, out, _ = run(capsys, "construct", 10, "--format", "ascii")
    assert out.splitlines()[0].startswith("(10)( 2)")


def test_construct_methods_identical(capsys):
    direct = run(capsys, "construct", 5, "--method", "direct")[1]
    recursive = run(capsys, "construct", 5, "--method", "recursive")[1]
    assert direct == recursive


def _verify_text(tmp_path, capsys, text):
    path = tmp_path / "doc.json"
    path.write_text(text)
    return run(capsys, "verify", path)


def test_round_trip(tmp_path, capsys):
    for n in (1, 6, 9):
        doc = run(capsys, "construct", n)[1]
        code, out, _ = _verify_text(tmp_path, capsys, doc)
        assert code == 0, out


def test_verify_swapped(tmp_path, capsys):
    doc = json.loads(run(capsys, "construct", 6)[1])
    row = doc["grid"][2]
    row[0], row[1] = row[1], row[0]
    code, out, _ = _verify_text(tmp_path, capsys, json.dumps(doc))
    assert code == 1
    assert "latin           FAIL" in out


@pytest.mark.parametrize(
    "text",
    [
        '{"n": 2, "circled": [[true, true], [false',
        '{"n": 2, "circled": [[true, true], [false, true]], "meta": {}}',
        '{"n": 2, "circled": [[true, true], [false, true]], "grid": [[2, 1], [1, 3]]}',
        '{"n": 2, "circled": [[true, true], [true, true]], "grid": [[2, 1], [1, 2]],'
        ' "meta": {"kind": "pulsar"}}',
        '[1, 2]',
    ],
)
def test_verify_malformed(tmp_path, capsys, text):
    assert _verify_text(tmp_path, capsys, text)[0] == 2


def test_verify_missing_file(tmp_path, capsys):
    assert run(capsys, "verify", tmp_path / "nope.json")[0] == 2


def test_check(capsys):
    code, out, _ = run(capsys, "check", 2, 6, "--level", "L0")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert all("unique and matches construction" in line for line in lines)


def test_check_raw_model(capsys):
    code, out, _ = run(capsys, "check", 5, 5, "--level", "L0", "--no-lookahead")
    assert code == 0 and "nodes=5961" in out


def test_check_bad_range(capsys):
    assert run(capsys, "check", 5, 4)[0] == 2
    assert run_usage(capsys, "check", 0, 4) == 2
