import json

import pytest

import regsets as rs
from regsets.cli import main
from regsets.config import Limits, limits_from_env
from regsets.errors import OrderExceedsCap, ParseError


# -- group spec parsing ----------------------------------------------------------


def test_parse_trivial_preset():
    g = rs.parse_group_spec('{"kind":"preset","name":"cyclic","n":1}')
    assert g.order == 1


def test_parse_sl23_preset():
    g = rs.parse_group_spec('{"kind":"preset","name":"sl23"}')
    assert g.order == 24
    assert sum(1 for a in range(1, 24) if g.mult[a][a] == 0) == 1


def test_parse_permutation_spec():
    g = rs.parse_group_spec('{"kind":"permutation","degree":3,"generators":[[[0,1,2]]]}')
    assert g.order == 3


def test_parse_table_spec():
    g = rs.parse_group_spec('{"kind":"table","matrix":[[0,1],[1,0]]}')
    assert g.order == 2


def test_parse_errors():
    with pytest.raises(ParseError):
        rs.parse_group_spec("not json")
    with pytest.raises(ParseError):
        rs.parse_group_spec('{"kind":"nope"}')
    with pytest.raises(ParseError):
        rs.parse_group_spec('{"kind":"permutation","degree":3,"generators":[[[0,0]]]}')
    with pytest.raises(ParseError):
        rs.parse_group_spec('{"kind":"preset","name":"cyclic"}')


def test_spec_round_trip_reproduces_table(corpus):
    # every corpus group carries a spec that rebuilds the identical table
    for G in corpus:
        assert G.spec is not None
        again = rs.parse_group_spec(json.dumps(G.spec))
        assert again.mult == G.mult


def test_group_from_arg_shorthand():
    assert rs.group_from_arg("preset:cyclic:4").order == 4
    assert rs.group_from_arg("preset:sl23").order == 24
    g = rs.group_from_arg("preset:product:cyclic:2,cyclic:3")
    assert g.order == 6


def test_group_from_arg_file(tmp_path):
    p = tmp_path / "g.json"
    p.write_text('{"kind":"preset","name":"dihedral","n":4}')
    assert rs.group_from_arg(str(p)).order == 8
    with pytest.raises(ParseError):
        rs.group_from_arg("no/such/file.json")


def test_subgroup_from_arg(s3):
    assert rs.subgroup_from_arg(s3, "trivial").order == 1
    assert rs.subgroup_from_arg(s3, "all").order == 6
    t = s3.perms.index((1, 0, 2))
    sub = rs.subgroup_from_arg(s3, f"gen:{t}")
    assert sub.order == 2
    explicit = rs.subgroup_from_arg(s3, "0,%d" % t)
    assert explicit == sub
    with pytest.raises(ParseError):
        rs.subgroup_from_arg(s3, "0,x")


# -- certificates ------------------------------------------------------------------


def make_cert():
    g = rs.cyclic(4)
    pair = rs.PairSpec(g, rs.trivial_subgroup(g), rs.Subgroup(g, [0, 2]))
    return rs.decide_regular_set(pair, 0, 2)


def test_certificate_round_trip(tmp_path):
    cert = make_cert()
    path = tmp_path / "cert.json"
    rs.write_certificate(cert, path)
    assert rs.verify_certificate_file(path) is True


def test_certificate_schema_fields(tmp_path):
    cert = make_cert()
    data = cert.to_json_dict()
    assert list(data) == ["group", "H", "A", "r", "s", "double_coset_reps", "U", "X", "checks"]
    assert data["U"] == [1, 3] and data["r"] == 0 and data["s"] == 2


def test_certificate_tamper_u(tmp_path):
    cert = make_cert()
    path = tmp_path / "cert.json"
    rs.write_certificate(cert, path)
    data = json.loads(path.read_text())
    data["U"] = data["U"][1:]
    path.write_text(json.dumps(data))
    assert rs.verify_certificate_file(path) is False


def test_certificate_tamper_r(tmp_path):
    cert = make_cert()
    path = tmp_path / "cert.json"
    rs.write_certificate(cert, path)
    data = json.loads(path.read_text())
    data["r"] = 1
    path.write_text(json.dumps(data))
    assert rs.verify_certificate_file(path) is False


def test_certificate_missing_field(tmp_path):
    path = tmp_path / "cert.json"
    path.write_text('{"group": {}}')
    with pytest.raises(ParseError):
        rs.verify_certificate_file(path)


# -- survey -------------------------------------------------------------------------


def test_survey_c4_rows():
    report = rs.survey(rs.cyclic(4))
    assert not report.anomalies
    row = next(r for r in report.rows if r["H"] == [0] and r["A"] == [0, 2])
    assert [0, 2] in row["achievable"]
    assert [0, 1] not in row["achievable"]


def test_survey_zero_anomalies_on_small_groups():
    for G in (rs.symmetric(3), rs.dihedral(4), rs.quaternion8(), rs.cyclic(6)):
        report = rs.survey(G)
        assert report.anomalies == []


def test_survey_sl23_contains_the_order24_instance_row(sl23_pair):
    report = rs.survey(sl23_pair.G)
    row = next(
        r for r in report.rows
        if r["H"] == list(sl23_pair.H.members) and r["A"] == list(sl23_pair.A.members)
    )
    assert [0, 2] in row["achievable"]
    assert [0, 1] not in row["achievable"]
    assert row["anomalies"] == []


def test_survey_degenerate_flag():
    report = rs.survey(rs.cyclic(2))
    full_row = next(r for r in report.rows if r["A"] == [0, 1])
    assert full_row["degenerate_s"] is True


def test_survey_workers_match_sequential():
    g = rs.cyclic(4)
    seq = rs.survey(g, workers=1)
    par = rs.survey(g, workers=2)
    assert seq.rows == par.rows


def test_survey_cap():
    with pytest.raises(OrderExceedsCap):
        rs.survey(rs.cyclic(8), limits=Limits(enumeration_cap=4))


def test_survey_json_shape():
    report = rs.survey(rs.cyclic(4))
    data = report.to_json_dict()
    assert list(data) == ["group", "order", "rows"]
    assert all(
        list(row) == ["H", "A", "H_normal_in_A", "A_normal_in_G", "degenerate_s",
                      "achievable", "agreements", "anomalies"]
        for row in data["rows"]
    )


# -- env overrides ---------------------------------------------------------------------


def test_limits_from_env(monkeypatch):
    monkeypatch.setenv("REGSET_MAX_ORDER", "100")
    lim = limits_from_env()
    assert lim.enumeration_cap == 100
    assert lim.closure_cap == 5000
    monkeypatch.setenv("REGSET_MAX_ORDER", "bogus")
    with pytest.raises(ParseError):
        limits_from_env()


# -- command line -------------------------------------------------------------------------


def test_cli_check_found_and_emit(tmp_path, capsys):
    path = tmp_path / "c.json"
    rc = main(["check", "preset:cyclic:4", "--A", "0,2", "--r", "0", "--s", "2",
               "--emit", str(path)])
    assert rc == 0
    assert path.exists()
    assert main(["verify", str(path)]) == 0


def test_cli_check_absent():
    assert main(["check", "preset:cyclic:4", "--A", "0,2", "--r", "0", "--s", "1"]) == 1


def test_cli_perfect_code_exit_codes():
    assert main(["perfect-code", "preset:cyclic:4", "--A", "0,2"]) == 1
    assert main(["perfect-code", "preset:symmetric:3", "--A", "gen:2"]) == 0


def test_cli_construct(tmp_path):
    path = tmp_path / "c.json"
    rc = main(["construct", "preset:quaternion8", "--H", "0,2", "--A", "gen:1",
               "--r", "1", "--s", "2", "--emit", str(path)])
    assert rc == 0
    assert main(["verify", str(path)]) == 0
    # conditions fail -> exit 1
    assert main(["construct", "preset:cyclic:4", "--A", "0,2", "--r", "0", "--s", "1"]) == 1


def test_cli_verify_tampered(tmp_path):
    path = tmp_path / "c.json"
    main(["check", "preset:cyclic:4", "--A", "0,2", "--r", "0", "--s", "2",
          "--emit", str(path)])
    data = json.loads(path.read_text())
    data["X"] = data["X"][:1]
    path.write_text(json.dumps(data))
    assert main(["verify", str(path)]) == 1


def test_cli_survey(tmp_path, capsys):
    out = tmp_path / "survey.json"
    rc = main(["survey", "preset:cyclic:4", "--out", str(out)])
    assert rc == 0
    data = json.loads(out.read_text())
    assert data["group"] == "cyclic(4)" and len(data["rows"]) == 6
    text = capsys.readouterr().out
    assert "total anomalies: 0" in text


def test_cli_show(capsys):
    assert main(["show", "preset:quaternion8"]) == 0
    out = capsys.readouterr().out
    assert "6 subgroups" in out


def test_cli_usage_error_exits_2():
    assert main(["check", "preset:cyclic:4"]) == 2  # missing required args
    assert main([]) == 2


def test_cli_bad_inputs_exit_2():
    assert main(["show", "preset:nosuch"]) == 2
    assert main(["check", "preset:cyclic:4", "--A", "0,1,2", "--r", "0", "--s", "0"]) == 2
    assert main(["verify", "missing.json"]) == 2
