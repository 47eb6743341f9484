import json

import pytest

from lcsq.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims_of_first_quotient(capsys):
    code, out, _ = run(capsys, "dims", "--m", "1", "--n", "2", "--deg-max", "5", "--format", "text")
    assert code == 0 and out.strip() == "2, 3, 4, 6, 8"


def test_dims_json_schema(capsys):
    code, out, _ = run(capsys, "dims", "--m", "2", "--n", "2", "--deg-max", "4")
    data = json.loads(out)
    assert data["schema_version"] == 1
    assert data["instance"] == {"m": 2, "n": 2, "deg_max": 4}
    assert data["dims"] == [0, 1, 2, 3]


def test_decompose_three_generators(capsys):
    code, out, _ = run(capsys, "decompose", "--m", "3", "--n", "3", "--deg-max", "5")
    data = json.loads(out)
    assert code == 0
    assert data["decomposition"] == {"[2,1,0]": 1}
    assert data["deg_reliable"] == 5


def test_decompose_below_first_degree_is_empty(capsys):
    code, out, _ = run(capsys, "decompose", "--m", "3", "--n", "3", "--deg-max", "2")
    assert code == 0 and json.loads(out)["decomposition"] == {}


def test_verify_single_instance(capsys):
    code, out, _ = run(capsys, "verify", "--m", "2", "--n", "2")
    data = json.loads(out)
    assert code == 0 and data["status"] == "pass"
    assert data["instance"]["deg_max"] == 8
    assert set(data) >= {"schema_version", "instance", "dims", "decomposition", "bound", "checks"}


def test_verify_phi_suite(capsys):
    code, out, _ = run(capsys, "verify", "--lemma", "3.1", "--n", "4")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_verify_default_suite(capsys):
    """Exit status is 1 exactly because of the three-column Hilbert series mismatch."""
    code, out, _ = run(capsys, "verify", "--suite", "default")
    data = json.loads(out)
    assert len(data["reports"]) == 5
    assert all(r["status"] == "pass" for r in data["reports"])
    assert data["failed"] == ["ideal_hilbert_series[m=3,n=2]"]
    assert code == 1


def test_prime_mode_is_labelled(capsys):
    code, out, _ = run(capsys, "dims", "--m", "3", "--n", "2", "--deg-max", "6", "--mode", "prime")
    data = json.loads(out)
    assert data["probabilistic"] is True and data["dims"] == [0, 0, 2, 4, 6, 8]


def test_csv_output(capsys):
    _, out, _ = run(capsys, "dims", "--m", "2", "--n", "2", "--deg-max", "3", "--format", "csv")
    assert out.splitlines() == ["degree,dim", "1,0", "2,1", "3,2"]


def test_resource_cap_exit_code(capsys, monkeypatch):
    code, _, err = run(capsys, "dims", "--m", "3", "--n", "4", "--deg-max", "12")
    assert code == 2 and "cap" in err
    monkeypatch.setenv("LCSQ_RESOURCE_CAP", "10")
    code, _, _ = run(capsys, "dims", "--m", "2", "--n", "2", "--deg-max", "4")
    assert code == 2


@pytest.mark.parametrize("args", [["dims", "--m", "2", "--n", "2"],
                                  ["verify", "--m", "5", "--n", "5"],
                                  ["verify", "--lemma", "9.9"],
                                  ["dims", "--m", "0", "--n", "2", "--deg-max", "3"]])
def test_config_errors(capsys, args):
    assert run(capsys, *args)[0] == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    main(["dims", "--m", "1", "--n", "1", "--deg-max", "3", "--out", str(target)])
    assert json.loads(target.read_text())["dims"] == [1, 1, 1]


def test_json_is_deterministic(capsys):
    a = run(capsys, "decompose", "--m", "4", "--n", "2", "--deg-max", "6")[1]
    b = run(capsys, "decompose", "--m", "4", "--n", "2", "--deg-max", "6")[1]
    assert a == b


def test_dims_of_third_quotient_three_generators(capsys):
    # 8 in degree 3, then 8 * 3 from one extra polynomial degree
    _, out, _ = run(capsys, "dims", "--m", "3", "--n", "3", "--deg-max", "4", "--format", "text")
    assert out.strip() == "0, 0, 8, 24"


def test_decompose_second_quotient_two_generators(capsys):
    code, out, _ = run(capsys, "decompose", "--m", "2", "--n", "2", "--deg-max", "8")
    assert code == 0 and json.loads(out)["decomposition"] == {"[1,1]": 1}


def test_fixture_file_is_canonical_json(golden):
    from pathlib import Path
    text = (Path(__file__).parent / "fixtures" / "golden.json").read_text()
    assert text == json.dumps(golden, indent=2, sort_keys=True) + "\n"
