import json

import pytest

from equilines.cli import run_cli
from equilines.generators import generate, hesse
from equilines.geometry import GREEN, configuration
from equilines.reports import (
    analysis_document,
    config_document,
    dump_json,
    parse_config,
)


def write_config(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(dump_json(doc), encoding="utf-8")
    return str(path)


def square_doc():
    return {
        "d": -1,
        "points": [
            {"coords": ["0", "0"], "color": "green"},
            {"coords": ["1", "1"], "color": "green"},
            {"coords": ["1", "0"], "color": "red"},
            {"coords": ["0", "1"], "color": "red"},
        ],
    }


def test_parse_config_minimal():
    doc = {
        "d": -1,
        "points": [
            {"coords": ["0", "0"], "color": "green"},
            {"coords": ["1", "1"], "color": "red"},
        ],
    }
    config = parse_config(dump_json(doc))
    assert config.total == 2 and config.n == 1 and config.k == 0


def test_parse_config_rejects_duplicates():
    doc = {
        "d": -1,
        "points": [
            {"coords": ["0", "0"], "color": "green"},
            {"coords": ["0", "0"], "color": "red"},
        ],
    }
    from equilines.errors import DuplicatePointError

    with pytest.raises(DuplicatePointError) as exc:
        parse_config(dump_json(doc))
    assert exc.value.indices == (0, 1)


def test_parse_config_errors():
    from equilines.errors import ConfigError

    cases = [
        "not json",
        "[1, 2]",
        '{"points": []}',
        '{"d": 4, "points": [{"coords": ["0","0"], "color": "green"}, {"coords": ["1","0"], "color": "red"}]}',
        '{"d": 5, "points": [{"coords": ["0"], "color": "green"}, {"coords": ["1","0"], "color": "red"}]}',
        '{"d": 5, "points": [{"coords": ["0","0"], "color": "blue"}, {"coords": ["1","0"], "color": "red"}]}',
        '{"d": 5, "points": [{"coords": ["0","0","0"], "color": "green"}, {"coords": ["1","0"], "color": "red"}]}',
    ]
    for text in cases:
        with pytest.raises(ConfigError):
            parse_config(text)


def test_generate_parse_round_trip():
    for spec in ("grid(3)", "near_pencil(5)", "hesse", "random_rational(8,3,5)"):
        pts = generate(spec)
        doc = config_document(pts, (GREEN,) * len(pts), pts[0].d)
        config = parse_config(dump_json(doc))
        assert config.points == pts


def test_majority_convention_notice():
    doc = {
        "d": 5,
        "points": [
            {"coords": ["0", "0"], "color": "red"},
            {"coords": ["1", "0"], "color": "red"},
            {"coords": ["0", "1"], "color": "green"},
        ],
    }
    config = parse_config(dump_json(doc))
    assert config.colors_swapped and config.n == 2


def test_analysis_document_stable_bytes():
    config = configuration(hesse(), (GREEN,) * 9, -3)
    doc1, ok1 = analysis_document(config)
    doc2, ok2 = analysis_document(config)
    assert ok1 and ok2
    assert dump_json(doc1) == dump_json(doc2)


def test_cli_analyze_text_and_json(tmp_path, capsys):
    path = write_config(tmp_path, "square.json", square_doc())
    assert run_cli(["analyze", path]) == 0
    text_out = capsys.readouterr().out
    assert "bound equisix" in text_out and "satisfied" in text_out

    assert run_cli(["analyze", path, "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert run_cli(["analyze", path, "--format", "json"]) == 0
    second = capsys.readouterr().out
    assert first == second  # byte-identical reports
    doc = json.loads(first)
    assert set(doc) == {"summary", "profile", "identities", "inequalities", "bounds"}
    assert doc["summary"]["total_points"] == "4"
    equi_four = [b for b in doc["bounds"] if b["theorem"] == "equifour"][0]
    assert equi_four["bound"] == "10/3" and equi_four["actual"] == "6"


def test_cli_analyze_hesse(tmp_path, capsys):
    pts = hesse()
    path = write_config(
        tmp_path, "hesse.json", config_document(pts, (GREEN,) * 9, -3)
    )
    assert run_cli(["analyze", path, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    melchior = [r for r in doc["inequalities"] if r["kind"] == "melchior"][0]
    assert melchior["applicable"] is False and melchior["lhs"] == "0"
    bp = [r for r in doc["inequalities"] if r["kind"] == "bojanowski-pokora"][0]
    assert bp["slack"] == "0" and bp["satisfied"] is True


def test_cli_analyze_multiple_files(tmp_path, capsys):
    p1 = write_config(tmp_path, "a.json", square_doc())
    p2 = write_config(tmp_path, "b.json", square_doc())
    assert run_cli(["analyze", p1, p2, "--format", "json"]) == 0
    out = capsys.readouterr().out
    assert out.count('"file"') == 2


def test_cli_missing_file(capsys):
    assert run_cli(["verify", "missing.json", "--inequality", "melchior"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_bad_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{", encoding="utf-8")
    assert run_cli(["analyze", str(path)]) == 2


def test_cli_verify(tmp_path, capsys):
    path = write_config(tmp_path, "square.json", square_doc())
    assert run_cli(["verify", path, "--inequality", "melchior"]) == 0
    out = capsys.readouterr().out
    assert "melchior" in out


def test_cli_bounds(tmp_path, capsys):
    path = write_config(tmp_path, "square.json", square_doc())
    assert run_cli(["bounds", path, "--theorem", "equisix", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["bounds"][0]["actual"] == "4"
    assert doc["bounds"][0]["slack"] == "1"


def test_cli_proofcheck(capsys):
    assert run_cli(["proofcheck", "--theorem", "equisix", "--window", "8"]) == 0
    out = capsys.readouterr().out
    assert "verified" in out
    assert run_cli(["proofcheck", "--theorem", "equifour", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["certificates"][0]["exceptional_cells"]) == 6


def test_cli_proofcheck_window_too_small(capsys):
    assert run_cli(["proofcheck", "--theorem", "equisix", "--window", "7"]) == 2


def test_cli_search(capsys):
    code = run_cli(
        [
            "search",
            "--generator",
            "grid(3)",
            "--k",
            "1",
            "--theorem",
            "equisix",
            "--format",
            "json",
        ]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["search"]["colorings_examined"] == "126"
    assert doc["search"]["violations"] == "0"
    assert len(doc["search"]["best_coloring"]) == 9


def test_cli_search_local(capsys):
    code = run_cli(
        [
            "search",
            "--generator",
            "grid(4)",
            "--k",
            "0",
            "--theorem",
            "equifour",
            "--mode",
            "local",
            "--seed",
            "3",
            "--budget",
            "500",
        ]
    )
    assert code == 0
    assert "best coloring" in capsys.readouterr().out


def test_cli_search_parity_error(capsys):
    code = run_cli(
        ["search", "--generator", "grid(3)", "--k", "0", "--theorem", "equisix"]
    )
    assert code == 2


def test_cli_generate_round_trip(capsys):
    assert run_cli(["generate", "--name", "hesse"]) == 0
    out = capsys.readouterr().out
    config = parse_config(out)
    assert config.points == hesse()
    assert config.total == 9


def test_cli_usage_error():
    with pytest.raises(SystemExit) as exc:
        run_cli(["bounds", "x.json", "--theorem", "nonsense"])
    assert exc.value.code == 2


def test_cli_exit_one_on_failed_check(tmp_path, monkeypatch, capsys):
    import equilines.cli as cli_mod

    path = write_config(tmp_path, "square.json", square_doc())
    real = cli_mod.analysis_document
    monkeypatch.setattr(cli_mod, "analysis_document", lambda cfg: (real(cfg)[0], False))
    assert run_cli(["analyze", path]) == 1


def test_cli_decimal_flag(tmp_path, capsys):
    path = write_config(tmp_path, "square.json", square_doc())
    assert run_cli(["bounds", path, "--theorem", "equifour", "--decimal"]) == 0
    out = capsys.readouterr().out
    assert "approx" in out and "10/3" in out


def test_cli_analyze_with_point_at_infinity(tmp_path, capsys):
    doc = {
        "d": 2,
        "points": [
            {"coords": ["0", "0"], "color": "green"},
            {"coords": ["1", "1"], "color": "green"},
            {"coords": ["1", "1", "0"], "color": "red"},  # direction of y = x
            {"coords": ["2", "sqrt(2)"], "color": "red"},
        ],
    }
    path = write_config(tmp_path, "inf.json", doc)
    assert run_cli(["analyze", path, "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert all(c["passed"] for c in out["identities"])
    # (0,0), (1,1) and the infinite point of slope 1 are collinear
    assert out["summary"]["max_collinear"] == "3"
    assert out["summary"]["all_real"] is True
