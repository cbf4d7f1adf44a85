import json

from bmaps.cli import main


def test_jack(capsys):
    assert main(["jack", "--n", "2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [j["lambda"] for j in data["jacks"]] == ["2", "1,1"]


def test_htable_files(tmp_path):
    out_json, out_csv = tmp_path / "h.json", tmp_path / "h.csv"
    assert main(["htable", "--n", "2", "--json", str(out_json), "--csv", str(out_csv)]) == 0
    data = json.loads(out_json.read_text())
    assert data["n"] == 2 and len(data["entries"]) == 8
    row = [r for r in data["entries"] if (r["mu"], r["nu"], r["tau"]) == ("2", "2", "2")][0]
    assert row["h"] == ["0/1", "1/1"]
    assert out_csv.read_text().startswith("mu,nu,tau,h")


def test_enumerate(capsys):
    assert main(["enumerate", "--n", "3", "--audit-dedup"]) == 0
    assert capsys.readouterr().out.strip().endswith("total\t25")
    assert main(["enumerate", "--n", "2", "--type", "2:2:2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 1 and data["maps"][0]["eta"] == 1


def test_etatable(capsys):
    assert main(["etatable", "--n", "2", "--orientation", "seeded:4", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["orientation"] == "seeded:4"
    assert all("i_split" in row for row in data["entries"])


def test_verify_exit_codes(tmp_path, capsys):
    report = tmp_path / "r.json"
    rc = main(["verify", "--suite", "all", "--n-max", "3", "--orientation", "canonical,seeded:1", "--json", str(report)])
    assert rc == 0
    reports = json.loads(report.read_text())["reports"]
    assert [r["suite"] for r in reports] == ["jack", "map-series", "unicellular", "marginal", "experimental"]
    assert "ALL PASSED" in capsys.readouterr().out


def test_bad_orientation(capsys):
    assert main(["etatable", "--n", "2", "--orientation", "sideways"]) == 2
