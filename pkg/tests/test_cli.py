import io
import json
import subprocess
import sys

import pytest

from wordperiods import PeriodSet, Word
from wordperiods.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_periods():
    assert run("periods", "ababab") == (0, "{0,2,4,6}\n")
    assert run("periods", "abaaab", "--method", "scan") == (0, "{0,4,6}\n")
    code, text = run("periods", "ababab", "--format", "json")
    assert json.loads(text) == {"word": "ababab", "periods": [0, 2, 4, 6]}


def test_borders():
    assert run("borders", "abaaab") == (0, "{0,2}\n")


def test_check_set_is_not_a_failure():
    code, text = run("check-set", "{0,2,6}")
    assert code == 0
    assert "iii: violated" in text and "iii-a h=1 value=4" in text
    code, text = run("check-set", "0,2,4,6", "--format", "json")
    data = json.loads(text)
    assert data["iii"]["satisfied"] and data["iv"]["satisfied"]


def test_construct():
    code, text = run("construct", "{0,4,6}")
    assert code == 0 and text.splitlines()[0] == "abaaab"
    code, _ = run("construct", "{0,2,6}")
    assert code == 2


def test_walk_figure():
    code, text = run("walk", "10", "5", "3", "6")
    lines = text.splitlines()
    assert code == 0
    assert lines[-1] == "final=5"
    assert lines[0] == "start pos=6 stockpile_p=-2 stockpile_q=3"
    assert "pos=10 move=right-q stockpile_p=-1 stockpile_q=0" in lines
    code, text = run("walk", "10", "5", "3", "6", "--format", "json")
    assert json.loads(text)["visited"] == [6, 1, 4, 7, 10, 5]


def test_walk_options():
    code, text = run("walk", "10", "5", "3", "5", "--side", "x")
    assert code == 0 and text.splitlines()[-1] == "final=6"
    code, text = run("walk", "10", "5", "3", "6", "--k", "8")
    assert code == 0 and text.splitlines()[-1] == "final=5"
    assert run("walk", "10", "5", "3", "6", "--k", "4")[0] == 2


def test_prop1_verify():
    code, text = run("prop1-verify", "--n-max", "8", "--alphabet", "3")
    assert code == 0 and "violations=0" in text


def test_counterexamples_and_tightness():
    code, text = run("counterexamples", "--n", "6", "--alphabet", "2")
    assert code == 0
    assert "w=ababab v=abaaab q=2 p=4 t=4" in text.splitlines()
    code, text = run("tightness", "--n", "6")
    assert "w=ababab v=abaaab q=2 p=4 t=4" in text.splitlines()
    assert text.splitlines()[-1] == "count=8"
    assert run("tightness", "--n", "2")[1] == "count=0\n"


def test_catalog_and_cache(tmp_path):
    code, text = run("catalog", "--n", "6", "--cache-dir", str(tmp_path))
    assert code == 0
    assert text.splitlines()[0] == "n=6 alphabet=2 words=32"
    assert (tmp_path / "catalog-n6-k2.txt").read_text() == text
    code, again = run("catalog", "--n", "6", "--cache-dir", str(tmp_path))
    assert again == text


def test_verify_theorem():
    code, text = run("verify-theorem", "--n", "8")
    assert code == 0 and "mismatches=0" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["periods", "abz"],
        ["check-set", "{0,2,x}"],
        ["walk", "10", "5"],
        ["walk", "10", "5", "3", "2"],
        ["prop1-verify", "--n-max", "5", "--alphabet", "4"],
        ["catalog", "--n", "40"],
        ["periods", "ab", "--workers", "0"],
    ],
)
def test_usage_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err.startswith("usage error")


def test_usage_error_names_token(capsys):
    run("periods", "abz")
    assert "'z'" in capsys.readouterr().err
    run("check-set", "{0,2,x}")
    assert "'x'" in capsys.readouterr().err


def test_falsification_exit_code(monkeypatch):
    import wordperiods.cli as cli
    from wordperiods.prop1 import Prop1Report

    monkeypatch.setattr(
        cli, "verify_prop1_exhaustive", lambda *a: Prop1Report(6, 2, 1, 1, 1, [((0, 1), (0, 0), 2)])
    )
    code, text = run("prop1-verify", "--n-max", "6")
    assert code == 1 and "violation ab aa t=2" in text


def _pairs_text(d):
    lines = [f"w={x['w']} v={x['v']} q={x['q']} p={x['p']} t={x['t']}" for x in d["pairs"]]
    return "\n".join(lines + [f"count={d['count']}"])


def _walk_text(d):
    s = d["spec"]
    lines = [f"start pos={s['t']} stockpile_p={-s['stockpile_left']} stockpile_q={s['stockpile_right']}"]
    lines += [f"pos={r['pos']} move={r['move']} stockpile_p={r['stockpile_p']} stockpile_q={r['stockpile_q']}"
              for r in d["ledger"]]
    return "\n".join(lines + [f"final={d['final']}"])


def _check_text(d):
    lines = [f"set={d['set']}"]
    for cond in ("iii", "iv"):
        r = d[cond]
        lines.append(f"{cond}: {'satisfied' if r['satisfied'] else 'violated'}")
        lines += [f"  {v['tag']} h={v['h']} value={v['value']}" for v in r["violations"]]
    return "\n".join(lines)


def _catalog_text(d):
    lines = [f"n={d['n']} alphabet={d['alphabet']} words={d['words']}"]
    return "\n".join(lines + [f"{e['mask']} {e['witness']}" for e in d["entries"]])


# text rebuilt from JSON, field by field
GOLDEN = [
    (["periods", "abaaab"], lambda d: "{" + ",".join(map(str, d["periods"])) + "}"),
    (["borders", "ababab"], lambda d: "{" + ",".join(map(str, d["borders"])) + "}"),
    (["counterexamples", "--n", "5"], _pairs_text),
    (["tightness", "--n", "7"], _pairs_text),
    (["catalog", "--n", "7"], _catalog_text),
    (["check-set", "{0,1,3,4,5}"], _check_text),
    (["walk", "8", "5", "3", "6"], _walk_text),
    (["walk", "10", "5", "3", "5", "--side", "x"], _walk_text),
    (["construct", "{0,3,5,6}"], lambda d: f"{d['word']}\nfills={d['fills']} fallbacks={d['fallbacks']}"),
    (
        ["prop1-verify", "--n-max", "7"],
        lambda d: f"n_max={d['n_max']} alphabet={d['alphabet_size']} words={d['words']} pairs={d['pairs']} "
        f"bounded_pairs={d['bounded_pairs']} violations={len(d['violations'])}",
    ),
    (
        ["verify-theorem", "--n", "7"],
        lambda d: f"n={d['n']} sets={d['sets_checked']} realizable={d['realizable']} "
        f"constructed={d['constructed']} fallbacks={d['fallbacks']} mismatches={len(d['mismatches'])}",
    ),
]


@pytest.mark.parametrize("argv, render", GOLDEN, ids=[" ".join(g[0]) for g in GOLDEN])
def test_json_mirrors_text(argv, render):
    _, text = run(*argv)
    _, raw = run(*argv, "--format", "json")
    assert render(json.loads(raw)) == text.rstrip("\n")


@pytest.mark.parametrize("argv", [["counterexamples", "--n", "6"], ["tightness", "--n", "8"], ["catalog", "--n", "6"]])
def test_printed_values_reparse(argv):
    _, raw = run(*argv, "--format", "json")
    data = json.loads(raw)
    for pair in data.get("pairs", []):
        assert str(Word.parse(pair["w"])) == pair["w"]
        assert str(Word.parse(pair["v"])) == pair["v"]
    for entry in data.get("entries", []):
        assert str(PeriodSet.parse(entry["set"])) == entry["set"]
        assert str(Word.parse(entry["witness"])) == entry["witness"]


def test_console_module():
    proc = subprocess.run(
        [sys.executable, "-m", "wordperiods", "periods", "ababab"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "{0,2,4,6}\n"
