import json

import pytest

from ecourant.cli import run_command
from ecourant.corpus import aff1_sum_swap
from ecourant.gcs import OmniGCSData, build_omni_gcs, omni_automorphism
from ecourant.algebra import rotation, zero_tensor
from ecourant.io import serialize_document, to_document


def run(capsys, *argv):
    code = run_command([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def omni2(tmp_path, capsys):
    p = tmp_path / "omni2.json"
    code, _, _ = run(capsys, "construct", "omni", "--dim", 2, "-o", p)
    assert code == 0
    return p


def write(tmp_path, name, obj, kind=None):
    p = tmp_path / name
    p.write_text(serialize_document(to_document(obj, kind)))
    return p


def test_construct_and_check(omni2, capsys):
    code, out, _ = run(capsys, "check", "ecourant", omni2)
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] is True and rep["tool"] == "courant"
    assert [r["name"] for r in rep["reports"]] == ["ecourant", "anchor-lemma"]


def test_gcs_check_presets(omni2, capsys):
    code, out, _ = run(capsys, "gcs-check", omni2, "--pi", "zero", "--D", "rot2")
    assert code == 0
    assert json.loads(out)["reports"][1]["checks"][0] == {
        "id": "integrability", "note": "", "pass": True, "status": "pass", "witness": None}
    code, out, _ = run(capsys, "gcs-check", omni2, "--pi", "aff1", "--D", "rot2")
    assert code == 1
    w = json.loads(out)["reports"][0]["checks"][1]["witness"]
    assert len(w["indices"]) == 2


def test_exit_codes(omni2, tmp_path, capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check", "nonsense", omni2)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind":"lie_algebra","dims":{"n":1},"tensors":{"bracket":[[["4/6"]]]}}')
    code, _, err = run(capsys, "check", "lie", bad)
    assert code == 3 and "non-canonical rational" in err
    assert run(capsys, "check", "lie", tmp_path / "missing.json")[0] == 3
    assert run(capsys, "check", "lie", omni2)[0] == 3
    assert run(capsys, "construct", "omni", "--dim", 9)[0] == 3
    assert run(capsys, "construct", "omni", "--dim", 9, "--max-dim", 100, "-o", tmp_path / "o9.json")[0] == 0


def test_construct_presets(tmp_path, capsys):
    for what, preset, k in (("crossed-courant", "ad", 6), ("lie2-courant", "det3", 6)):
        p = tmp_path / f"{preset}.json"
        assert run(capsys, "construct", what, preset, "-o", p)[0] == 0
        assert json.loads(p.read_text())["dims"]["k"] == k
        assert run(capsys, "check", "ecourant", p)[0] == 0
    assert run(capsys, "construct", "lie2-courant", "nope")[0] == 3


def test_gcs_j_commands(omni2, tmp_path, capsys):
    J = build_omni_gcs(2, OmniGCSData(zero_tensor(2, 2, 2), rotation(2)))
    jp = write(tmp_path, "J.json", J)
    assert run(capsys, "check", "gcs", omni2, jp)[0] == 0
    assert run(capsys, "gcs-check", omni2, "--J", jp)[0] == 0
    code, out, _ = run(capsys, "induced-bracket", omni2, "--J", jp)
    assert code == 0 and json.loads(out)["result"]["kind"] == "lie_algebra"
    code, out, _ = run(capsys, "eigenbundle", omni2, "--J", jp)
    res = json.loads(out)["result"]
    assert code == 0 and res["dims"] == {"ambient": 6, "dim": 3} and res["scalar_field"] == "gaussian"
    sp = tmp_path / "S.json"
    sp.write_text(json.dumps(res))
    assert run(capsys, "check", "dirac", omni2, sp)[0] == 0
    tp = write(tmp_path, "T.json", omni_automorphism(2, ((1, 1), (0, 1))), "endomorphism")
    code, out, _ = run(capsys, "transport", omni2, "--J", jp, "--T", tp)
    assert code == 0 and json.loads(out)["reports"][1]["verdicts"]["integrable_after"] is True


def test_text_report(omni2, capsys):
    code, out, _ = run(capsys, "check", "ecourant", omni2, "--report", "text")
    assert code == 0 and "ecourant: PASS" in out and out.rstrip().endswith("overall: PASS")


def test_file_pi_and_d(tmp_path, capsys):
    p = tmp_path / "omni4.json"
    run(capsys, "construct", "omni", "--dim", 4, "-o", p)
    from ecourant.algebra import LieAlgebra
    pi, D = aff1_sum_swap()
    pp = write(tmp_path, "pi.json", LieAlgebra(4, pi))
    dp = write(tmp_path, "D.json", D, "endomorphism")
    code, out, _ = run(capsys, "gcs-check", p, "--pi", pp, "--D", dp)
    rep = json.loads(out)
    assert code == 1
    assert rep["reports"][2]["verdicts"] == {"direct": False, "generic": False}
