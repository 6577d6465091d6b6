import pytest

from wtwm import index
from wtwm.cli import main


@pytest.fixture
def text_file(tmp_path):
    path = tmp_path / "wt.txt"
    path.write_bytes(b"wavelettree")
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("structure", ["tree", "matrix"])
def test_build_via_translate_is_byte_identical(capsys, tmp_path, text_file, structure):
    direct, via = tmp_path / "a.idx", tmp_path / "b.idx"
    assert run(capsys, "build", text_file, direct, "--structure", structure)[0] == 0
    assert run(capsys, "build", text_file, via, "--structure", structure, "--via-translate")[0] == 0
    assert direct.read_bytes() == via.read_bytes()


def test_build_header(capsys, tmp_path, text_file):
    out_path = tmp_path / "t.idx"
    code, out, _ = run(capsys, "build", text_file, out_path, "--structure", "tree")
    assert code == 0
    wt = index.load(out_path)
    assert (wt.n, wt.sigma_effective, wt.c_array.sigma_padded, wt.height) == (11, 7, 8, 3)


def test_build_empty_input(capsys, tmp_path):
    empty = tmp_path / "empty"
    empty.write_bytes(b"")
    code, _, err = run(capsys, "build", empty, tmp_path / "x.idx")
    assert code == 2 and "empty" in err


def test_build_missing_input(capsys, tmp_path):
    code, _, err = run(capsys, "build", tmp_path / "nope", tmp_path / "x.idx")
    assert code == 2 and "cannot read" in err


@pytest.mark.parametrize("structure", ["tree", "matrix"])
def test_queries(capsys, tmp_path, text_file, structure):
    idx = tmp_path / "q.idx"
    run(capsys, "build", text_file, idx, "--structure", structure)
    assert run(capsys, "query", idx, "access", 0)[1].strip() == "w"
    assert run(capsys, "query", idx, "rank", "e", 10)[1].strip() == "4"
    assert run(capsys, "query", idx, "select", "e", 2)[1].strip() == "5"
    assert run(capsys, "query", idx, "select", "0x65", 1)[1].strip() == "3"


def test_query_out_of_range(capsys, tmp_path, text_file):
    idx = tmp_path / "q.idx"
    run(capsys, "build", text_file, idx)
    code, _, err = run(capsys, "query", idx, "access", 11)
    assert code == 2 and "[0, 10]" in err
    code, _, err = run(capsys, "query", idx, "select", "e", 5)
    assert code == 2 and "[1, 4]" in err
    code, _, err = run(capsys, "query", idx, "rank", "z", 1)
    assert code == 2 and "does not occur" in err


def test_query_corrupt_index(capsys, tmp_path):
    bad = tmp_path / "bad.idx"
    bad.write_bytes(b"nonsense")
    code, _, err = run(capsys, "query", bad, "access", 0)
    assert code == 2


def test_dump(capsys, tmp_path, text_file):
    idx = tmp_path / "m.idx"
    run(capsys, "build", text_file, idx, "--structure", "matrix")
    code, out, _ = run(capsys, "dump", idx)
    assert code == 0
    assert "C: 0 1 5 6 7 9 10 11 11" in out
    assert "level 2: 01111100010  z=5" in out


def test_translate_inverse(capsys, text_file):
    code, out, _ = run(capsys, "translate", text_file, "--level", 2, "--pos", 9,
                       "--inverse", "--symbol", "r")
    assert code == 0
    assert "= 6" in out and "u=2 q=8 delta_u=1" in out


def test_translate_forward(capsys, text_file):
    code, out, _ = run(capsys, "translate", text_file, "--level", 2, "--pos", 9)
    assert code == 0
    assert "= 7" in out and "v=2 p=7 delta_v=2" in out
    assert "= 5" in run(capsys, "translate", text_file, "--level", 0, "--pos", 5)[1]


def test_translate_inverse_needs_symbol(capsys, text_file):
    code, _, err = run(capsys, "translate", text_file, "--level", 2, "--pos", 9, "--inverse")
    assert code == 1 and "--symbol" in err


def test_translate_inconsistent_symbol(capsys, text_file):
    code, _, err = run(capsys, "translate", text_file, "--level", 2, "--pos", 9,
                       "--inverse", "--symbol", "a")
    assert code == 2 and "outside node" in err


def test_translate_bad_level(capsys, text_file):
    code, _, err = run(capsys, "translate", text_file, "--level", 3, "--pos", 0)
    assert code == 2 and "level" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build"])
    assert exc.value.code == 1


@pytest.mark.parametrize("content", [b"wavelettree", b"x", b"aaaaaaa"])
def test_verify(capsys, tmp_path, content):
    path = tmp_path / "v.txt"
    path.write_bytes(content)
    code, out, _ = run(capsys, "verify", path)
    assert code == 0
    assert "FAIL" not in out and "all 9 checks passed" in out


def test_verify_reports_divergence(capsys, tmp_path, monkeypatch):
    from wtwm import translate

    real = translate.Locator.f

    def broken(self, level, i):
        j = real(self, level, i)
        return j ^ 1 if level == 1 and i == 3 else j

    monkeypatch.setattr(translate.Locator, "f", broken)
    path = tmp_path / "v.txt"
    path.write_bytes(b"wavelettree")
    code, out, err = run(capsys, "verify", path)
    assert code == 2
    assert "FAIL" in out and "level 1" in err


def test_verify_random_8k_uses_sampled_rank(capsys, tmp_path):
    import numpy as np

    from wtwm.verify import RANK_BUDGET

    data = np.random.default_rng(9).integers(0, 256, 8192, dtype=np.uint8).tobytes()
    assert len(data) * len(set(data)) > RANK_BUDGET
    path = tmp_path / "r.bin"
    path.write_bytes(data)
    assert run(capsys, "verify", path)[0] == 0
