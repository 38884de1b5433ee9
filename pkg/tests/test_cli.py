import json
import subprocess
import sys

import pytest

from bigraft.cli import main
from bigraft.expr import evaluate, format_comb
from bigraft.forests import ParseError, parse
from bigraft.hopf import elt


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_examples(capsys):
    assert run(capsys, "eval", "o |> o")[:2] == (0, "o[l:o]\n")
    assert run(capsys, "eval", "o[r:o] @ (o o, o o)")[1] == "o o[r:o,r:o]\n"
    assert run(capsys, "eval", "2 o - o")[1] == "o\n"


def test_pair_and_count(capsys):
    assert run(capsys, "pair", "o o", "o o")[1].strip() == "2"
    assert run(capsys, "count", "--which", "dual", "--upto", "5")[1].strip() == "1 3 6 10 15"
    assert run(capsys, "count", "--which", "bt", "--upto", "4")[1].strip() == "1 3 12 55"


def test_exit_codes(capsys):
    assert run(capsys, "eval", "o[r:o,l:o]")[0] == 1
    assert run(capsys, "eval", "1 |> o")[0] == 2
    assert run(capsys, "gram", "--degree", "9")[0] == 3
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "gram")[0] == 1
    assert run(capsys, "confluence")[0] == 0
    assert run(capsys, "confluence", "--system", "bgdual-printed")[0] == 2


def test_json_output(capsys):
    code, out, _ = run(capsys, "eval", "--json", "2 o o - o[l:o]")
    data = json.loads(out)
    assert code == 0
    assert {t["forest"]: t["coeff"] for t in data["terms"]} == {"o o": 2, "o[l:o]": -1}
    code, out, _ = run(capsys, "homology", "--json", "--weight", "3")
    assert json.loads(out)["homology"] == [0, 0, 0]


def test_json_errors_are_clean(capsys):
    code, out, err = run(capsys, "eval", "--json", "o[")
    assert code == 1 and "Traceback" not in err


def test_subcommands_run(capsys, tmp_path):
    for argv in (["coproduct", "o[l:o] o"], ["coproduct", "--ass", "--reduced", "o o"],
                 ["antipode", "o o"], ["dagger", "o[l:o] o o"], ["gram", "--degree", "2"],
                 ["compose", "o[r:o]", "o", "o o"], ["compose", "--dual", "o[r:o]", "o[r:o]", "o"],
                 ["series-check", "--order", "10"], ["rewrite", "m∘(m,I)", "--chain"],
                 ["normal-count", "--arity", "4", "--system", "bg"],
                 ["enumerate", "--degree", "3", "--dual"], ["count", "--which", "bt",
                                                           "--upto", "3", "--enumerate"]):
        assert run(capsys, *argv)[0] == 0, argv


def test_normal_count_output(capsys):
    assert run(capsys, "normal-count", "--arity", "4", "--system", "bg")[1].strip() == "55"
    assert run(capsys, "rewrite", "m∘(m,I)")[1].strip() == "m∘(I,m)"


def test_report(capsys, tmp_path):
    code, _, _ = run(capsys, "report", "--out", str(tmp_path), "--max-degree", "2",
                     "--max-weight", "2")
    assert code == 0
    names = {p.name for p in tmp_path.iterdir()}
    assert {"counts.csv", "counts.png", "homology.csv", "gram_2.png"} <= names


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "bigraft.cli", "pair", "o[r:o]", "o[r:o]"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "-1"


def test_expression_grammar():
    assert evaluate("1") == elt(())
    assert evaluate("1 o") == elt(parse("o"))
    assert evaluate("o * o") == evaluate("o o")
    assert evaluate("o |> o <| o") == elt(parse("o[l:o,r:o]"))
    assert evaluate("-(o - o o)") == evaluate("o o - o")
    assert format_comb(evaluate("2 o - 3 o o")) == "2 o - 3 o o"
    assert format_comb(evaluate("o - o")) == "0"
    with pytest.raises(ParseError):
        evaluate("o @ o")
    with pytest.raises(ParseError):
        evaluate("(o")
