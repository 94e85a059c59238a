import json
from pathlib import Path

from antiflips.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hj(capsys):
    code, out, _ = run_cli(capsys, "hj", "9", "2")
    assert code == 0 and out.strip() == "[5,2]"
    code, out, _ = run_cli(capsys, "hj", "3", "1", "--conjugate")
    assert code == 0 and out.strip() == "[2,2]"
    code, out, _ = run_cli(capsys, "hj", "49", "27", "--reverse")
    assert code == 0 and out.strip() == "[3,2,6,2]"


def test_hj_invalid_exit_2(capsys):
    code, _, err = run_cli(capsys, "hj", "4", "2")
    assert code == 2
    assert err.startswith("error: InvalidInput:")
    assert "\n" not in err.strip()


def test_wahl(capsys):
    code, out, _ = run_cli(capsys, "wahl", "5", "3")
    assert code == 0 and "[2,5,3]" in out


def test_antiflip_text(capsys):
    code, out, _ = run_cli(capsys, "antiflip", "1", "1", "1", "1", "6")
    assert code == 0
    assert "chart1 = 1/4(2,1,1)" in out
    assert "chart2 = 1/2(0,1,1)" in out


def test_antiflip_delta_too_small(capsys):
    code, _, err = run_cli(capsys, "antiflip", "1", "1", "1", "1", "3")
    assert code == 2 and "DeltaTooSmall" in err


def test_antiflip_json_golden(capsys):
    code, out, _ = run_cli(capsys, "antiflip", "3", "1", "7", "4", "1", "--json")
    assert code == 0
    golden = (GOLDEN / "antiflip_3_1_7_4_1.json").read_text()
    assert out == golden
    payload = json.loads(out)
    assert payload["result"]["F"] == 10 and payload["result"]["lam"] == 4


def test_json_stability(capsys):
    outs = set()
    for _ in range(3):
        _, out, _ = run_cli(capsys, "fiber", "1", "1", "3", "1", "2", "--json")
        outs.add(out)
    assert len(outs) == 1


def test_fp(capsys):
    code, out, _ = run_cli(capsys, "fp", "7", "2")
    assert code == 0
    assert "[4,2,6,2,2]-(-1)-[6,2,2]" in out
    assert "[5,2]-(-1)-[4,5,3,2,2]" in out
    assert "[4,2]-(-5)-[3,2,2]" in out


def test_fp_invalid(capsys):
    code, _, err = run_cli(capsys, "fp", "4", "2")
    assert code == 2 and "InvalidFP" in err


def test_fp_json(capsys):
    code, out, _ = run_cli(capsys, "fp", "5", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    res = payload["result"]["resolutions"]
    assert res[0]["params"] == {"m1p": 3, "a1p": 1, "m2p": 7, "a2p": 4, "c": 1}
    assert res[1]["params"] == {"m1p": 8, "a1p": 3, "m2p": 2, "a2p": 1, "c": 1}
    assert payload["result"]["xnu"] == "[3,2]-(-5)-[3,2]"


def test_fiber_reports_fp(capsys):
    code, out, _ = run_cli(capsys, "fiber", "3", "1", "7", "4", "1")
    assert code == 0
    assert "(f, p) = (5, 2)" in out
    assert "[3,2]-(-5)-[3,2]" in out


def test_fiber_degree5(capsys):
    code, out, _ = run_cli(capsys, "fiber", "1", "1", "1", "1", "5")
    assert code == 0
    assert "transversal slice: A_2" in out
    assert "X1·Y1·Z1 = Y1^3 + Z1^3" in out


def test_table_text_golden(capsys):
    code, out, _ = run_cli(capsys, "table", "--fmax", "7")
    assert code == 0
    assert out == (GOLDEN / "table1.txt").read_text()


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "--fmax", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "f,p,xplus_1,xplus_2,xnu"
    assert lines[1] == '2,1,"(-2)-[5,2]","[2,5]-(-2)",[2]-(-5)-[2]'


def test_table_json(capsys):
    code, out, _ = run_cli(capsys, "table", "--fmax", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    rows = payload["result"]["rows"]
    assert rows[0]["f"] == "2" and rows[0]["xnu"] == "[2]-(-5)-[2]"
    assert len(rows) == 2
