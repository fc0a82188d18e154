import io as _io
import json
import os
import subprocess
import sys

import pytest

import rackcover as rc
from rackcover import io
from rackcover.cli import main
from rackcover.corpus import SOURCES, corpus_squares, dihedral_square, mod_map, write_corpus
from rackcover.errors import AxiomViolation, ShapeError

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", _io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc), encoding="utf-8")
    return str(p)


def test_rack_document():
    A = io.loads('{"type":"rack","size":2,"op":[[0,0],[1,1]]}', "rack")
    assert A == rc.trivial(2)


@pytest.mark.parametrize("obj", [rc.dihedral(3), mod_map(6, 3), dihedral_square(3, 2),
                                 rc.sym_group(3), corpus_squares()["toy-1"]],
                         ids=["rack", "morphism", "square", "group", "labelled-square"])
def test_round_trip(obj):
    data = io.emit(obj)
    back = io.from_doc(json.loads(data))
    assert io.emit(back) == data


def test_emit_is_byte_stable():
    assert io.emit(dihedral_square(6, 3)) == io.emit(dihedral_square(6, 3))
    assert io.emit(rc.classify_square(dihedral_square(6, 3))) == \
        io.emit(rc.classify_square(dihedral_square(6, 3)))
    assert io.emit({"b": 1, "a": "⋆"}) == '{"a":"⋆","b":1}\n'.encode()


def test_parse_errors():
    with pytest.raises(io.ParseError):
        io.loads("{not json")
    with pytest.raises(io.ParseError):
        io.loads('{"type":"rack","size":2}')
    with pytest.raises(io.ParseError):
        io.loads('{"type":"rack","size":2,"op":[[0,0],[1,1]]}', "square")
    with pytest.raises(io.ParseError):
        io.loads('[1, 2]')
    with pytest.raises(ShapeError):
        io.loads('{"type":"rack","size":3,"op":[[0,0],[1,1]]}')
    with pytest.raises(AxiomViolation):
        io.loads('{"type":"rack","size":2,"op":[[0,2],[1,1]]}')


def test_cli_validate_and_exit_codes(tmp_path, capsys):
    good = write(tmp_path, "good.json", io.rack_doc(rc.dihedral(3)))
    code, out, _ = run(["validate", good], capsys)
    assert code == 0 and out == {"valid": True, "type": "rack", "size": 3}
    code, out, err = run(["validate", write(tmp_path, "bad.json", "{oops")], capsys)
    assert code == 1 and out is None and "invalid JSON" in err
    code, _, _ = run(["validate", str(tmp_path / "missing.json")], capsys)
    assert code == 1
    bad = write(tmp_path, "range.json", {"type": "rack", "size": 2, "op": [[0, 2], [1, 1]]})
    code, out, err = run(["validate", bad], capsys)
    assert code == 2 and "AxiomViolation" in err
    r1 = write(tmp_path, "r1.json", {"type": "rack", "size": 2, "op": [[0, 0], [0, 1]]})
    code, _, err = run(["validate", r1], capsys)
    assert code == 2 and "R1" in err


def test_cli_gen(capsys):
    code, out, _ = run(["gen", "dihedral", "4"], capsys)
    assert code == 0 and io.rack_from(out) == rc.dihedral(4)
    for kind, n, size in (("trivial", 3, 3), ("cyclic", 5, 5), ("conj-sym", 3, 6),
                          ("conj-cyclic", 4, 4), ("quaternion", None, 8)):
        code, out, _ = run(["gen", kind] + ([str(n)] if n is not None else []), capsys)
        assert code == 0 and out["size"] == size
    code, _, _ = run(["gen", "nonsense", "3"], capsys)
    assert code == 1
    code, _, _ = run(["gen", "dihedral"], capsys)
    assert code == 1


def test_gen_then_classify(tmp_path, capsys, monkeypatch):
    _, d6, _ = run(["gen", "dihedral", "6"], capsys)
    _, d3, _ = run(["gen", "dihedral", "3"], capsys)
    doc = {"type": "morphism", "dom": d6, "cod": d3, "map": [x % 3 for x in range(6)]}
    code, out, _ = run(["classify", "-"], capsys, json.dumps(doc), monkeypatch)
    assert code == 0
    assert out["flags"] == {"extension": True, "covering": True, "trivial_covering": True,
                            "normal_covering": True}
    doc["map"] = [0, 1, 2, 0, 1, 0]
    code, _, err = run(["classify", "-"], capsys, json.dumps(doc), monkeypatch)
    assert code == 2 and "NotHomomorphism" in err


def test_classify_outcome_does_not_change_exit_code(tmp_path, capsys):
    files = write_corpus(str(tmp_path))
    assert len(files) == len(SOURCES)
    code, out, _ = run(["classify-square", str(tmp_path / "dihedral-3-6.json")], capsys)
    assert code == 0
    assert out["flags"]["double_covering"] is False
    assert out["witnesses"]["double_covering"]["witness"] == [0, 0, 0, 0, 6]
    assert out["witnesses"]["double_covering"]["value"] == 12
    code, out, _ = run(["classify", str(tmp_path / "d9-d3.json")], capsys)
    assert code == 0 and out["witnesses"]["covering"]["witness"] == [0, 0, 3]
    code, _, _ = run(["classify", str(tmp_path / "dihedral-3-6.json")], capsys)
    assert code == 1


def test_shipped_corpus_files():
    folder = os.path.join(ROOT, "corpus")
    for key, source in SOURCES.items():
        with open(os.path.join(folder, f"{key}.json"), encoding="utf-8") as fh:
            doc = json.load(fh)
        assert doc["source"] == source
        io.from_doc(doc)


def test_cli_centralize(tmp_path, capsys):
    write_corpus(str(tmp_path))
    code, out, _ = run(["centralize", str(tmp_path / "s3-sign.json")], capsys)
    assert code == 0 and out["unit"]["cod"]["size"] == 4
    assert len(out["congruence"]["classes"]) == 4
    code, out, _ = run(["centralize-square", str(tmp_path / "dihedral-3-6.json")], capsys)
    assert code == 0 and out["square"]["alpha_top"]["dom"]["size"] == 12
    sq = io.square_from(out["square"])
    assert rc.is_double_covering(sq)


def test_cli_commutator_and_pi0(tmp_path, capsys):
    d6 = write(tmp_path, "d6.json", io.rack_doc(rc.dihedral(6)))
    code, out, _ = run(["commutator", d6, "--r", "[[0,3]]", "--s", "[[0,2]]"], capsys)
    assert code == 0 and out["type"] == "congruence"
    code, again, _ = run(["commutator", d6, "--r", "[[0,3]]", "--s", "[[0,2]]", "--variant", "iv"],
                         capsys)
    assert again == out
    code, _, _ = run(["commutator", d6, "--r", "[[0", "--s", "[]"], capsys)
    assert code == 1
    code, _, _ = run(["commutator", d6, "--r", "[[0,9]]", "--s", "[]"], capsys)
    assert code == 2
    code, out, _ = run(["pi0", d6], capsys)
    assert code == 0 and out["quotient"]["size"] == 2


def test_cli_oracle_volumes(tmp_path, capsys):
    write_corpus(str(tmp_path))
    code, out, _ = run(["oracle-volumes", str(tmp_path / "dihedral-2-3.json"), "--max-len", "0"],
                       capsys)
    assert code == 0 and out["bound"] == 0
    assert all(a == b for a, b in out["pairs"])
    code, out, _ = run(["oracle-volumes", str(tmp_path / "gap.json"), "--stabilize"], capsys)
    assert code == 0 and out["stabilized"] and [4, 5] in out["pairs"]


def test_cli_selftest_subprocess():
    proc = subprocess.run([sys.executable, "-m", "rackcover", "selftest"], capture_output=True,
                          text=True, cwd=ROOT)
    assert proc.returncode == 0, proc.stderr
    summary = json.loads(proc.stdout)
    assert summary["ok"] and not summary["failed"]
    assert len(summary["deviations"]) == 2
