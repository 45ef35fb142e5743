import json
from pathlib import Path

import pytest

from gkod.cli import main

GOLDEN = Path(__file__).parent / "golden" / "table1.txt"


def test_table1_matches_golden_bytes(capsys):
    assert main(["table1"]) == 0
    out = capsys.readouterr().out
    assert out.encode("utf-8") == GOLDEN.read_bytes()


def test_graph_dot_output(capsys):
    assert main(["graph", "U3", "27", "--dot"]) == 0
    out = capsys.readouterr().out
    assert "  19 -- 37;\n" in out
    assert out.startswith("graph GK {\n")
    assert out.count(" -- ") == 6


def test_graph_text_output(capsys):
    assert main(["graph", "S4", "31"]) == 0
    out = capsys.readouterr().out
    assert "D = (3, 3, 3, 1, 3, 1)" in out
    assert "component 2: {13, 37}" in out


def test_graph_json_output(capsys):
    assert main(["graph", "U4", "31", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["group"] == "U4(31)"
    assert data["degree_pattern"]["degrees"] == [5, 5, 5, 2, 3, 2, 3, 3]
    assert len(data["order_components"]["components"]) == 1


def test_spectrum_text(capsys):
    assert main(["spectrum", "S4", "31"]) == 0
    assert "{480, 481, 930, 992}" in capsys.readouterr().out


def test_spectrum_json(capsys):
    assert main(["spectrum", "U3", "27", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"group": "U3(27)", "mu": [84, 703, 728],
                    "source": "formula"}


def test_spectrum_not_implemented_is_domain_error(capsys):
    assert main(["spectrum", "2G2", "27"]) == 1
    err = capsys.readouterr().err
    assert "2G2" in err


def test_verify_json(capsys):
    assert main(["verify", "S4", "31", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "verified"
    assert data["alternatives"]["count"] == 12
    assert data["forced"] == {"all_equal_gk": True, "count": 1}


def test_verify_text_all_groups(capsys):
    for fam, q in (("S4", "31"), ("U3", "27"), ("G2", "11"), ("U4", "31")):
        assert main(["verify", fam, q]) == 0
        assert "verdict verified" in capsys.readouterr().out


def test_verify_unconfigured_group(capsys):
    assert main(["verify", "L2", "37"]) == 1
    assert "case configuration" in capsys.readouterr().err


def test_enumerate_json(capsys):
    assert main(["enumerate", "--max-prime", "37", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 13
    assert data["agrees_with_published"] is True
    assert "L2(1331)" in data["groups"]
    assert data["caps"]["max_alt_degree"] == 100


def test_enumerate_p5(capsys):
    assert main(["enumerate", "--max-prime", "5"]) == 0
    out = capsys.readouterr().out
    assert "A5" in out and "U4(2)" in out and "A6" in out


def test_enumerate_show_caps(capsys):
    assert main(["enumerate", "--show-caps"]) == 0
    out = capsys.readouterr().out
    assert out == ("max_prime = 37\nmax_field_exponent = 20\n"
                   "max_rank = 20\nmax_alt_degree = 100\n")


def test_enumerate_caps_file(tmp_path, capsys):
    f = tmp_path / "caps.txt"
    f.write_text("max_prime = 37\nmax_field_exponent = 1\n"
                 "max_rank = 3\nmax_alt_degree = 40\n", encoding="utf-8")
    assert main(["enumerate", "--max-prime", "37", "--caps", str(f),
                 "--json"]) == 1  # narrowed caps disagree with published
    data = json.loads(capsys.readouterr().out)
    assert data["agrees_with_published"] is False
    assert "L2(961)" not in data["groups"]


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["bogus-subcommand"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2


def test_unknown_family_selector(capsys):
    assert main(["spectrum", "X4", "31"]) == 1
    assert "unknown family" in capsys.readouterr().err


def test_oracle_small_target(capsys):
    assert main(["oracle", "SL2_5"]) == 0
    out = capsys.readouterr().out
    assert "enumerated 120" in out and "match: True" in out


def test_oracle_alternating_target(capsys):
    assert main(["oracle", "A6"]) == 0
    out = capsys.readouterr().out
    assert "match: True" in out


def test_oracle_heavy_gate(capsys):
    assert main(["oracle", "SP4_5"]) == 1
    assert "--heavy" in capsys.readouterr().err


def test_oracle_unknown_target(capsys):
    assert main(["oracle", "SL3_3"]) == 1
    assert "unknown oracle target" in capsys.readouterr().err


def test_gk_seed_env(monkeypatch, capsys):
    monkeypatch.setenv("GK_SEED", "0xBEEF")
    assert main(["oracle", "SL2_4"]) == 0
    assert "match: True" in capsys.readouterr().out
    monkeypatch.setenv("GK_SEED", "12345")
    assert main(["oracle", "SL2_4"]) == 0
    capsys.readouterr()
    monkeypatch.setenv("GK_SEED", "not-a-seed")
    assert main(["oracle", "SL2_4"]) == 1
    assert "GK_SEED" in capsys.readouterr().err
