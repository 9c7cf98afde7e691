import json
import subprocess
import sys

import pytest

from quasihom.bruteforce import count_by_class
from quasihom.cli import main
from quasihom.graphs import make_family, quasi_complete_graph


def oracle(spec, m):
    return count_by_class(make_family(spec), quasi_complete_graph(m))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_text(capsys):
    assert run(capsys, "count", "--family", "cycle", "--n", "5", "--m", "3") == (0, "0\n", "")
    code, out, _ = run(capsys, "count", "--family", "path", "--n", "3", "--m", "3",
                       "--method", "bruteforce")
    assert out == "6\n"


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--family", "wheel", "--n", "4", "--m", "4",
                       "--format", "json")
    record = json.loads(out)
    assert code == 0 and record["count"] == "20"
    assert set(record) == {"family", "n", "m", "class", "method", "count"}


def test_count_big_value_is_exact(capsys):
    code, out, _ = run(capsys, "count", "--family", "wheel", "--n", "60", "--m", "12",
                       "--format", "json")
    assert int(json.loads(out)["count"]) > 2 ** 64


@pytest.mark.parametrize("fam,n,m", [("path", 7, 5), ("cycle", 6, 4), ("broken-wheel", 5, 4),
                                     ("wheel", 5, 5)])
def test_methods_agree(capsys, fam, n, m):
    outs = {run(capsys, "count", "--family", fam, "--n", str(n), "--m", str(m),
                "--method", meth)[1] for meth in ("closed", "bruteforce", "transfer")}
    assert len(outs) == 1


@pytest.mark.parametrize("argv,fragment", [
    (["count", "--family", "complete", "--n", "4", "--m", "5", "--method", "transfer"],
     "method unsupported for family"),
    (["count", "--family", "cycle", "--n", "3", "--m", "5"], "complete(3)"),
    (["count", "--family", "path", "--n", "1", "--m", "5"], "path requires n >= 2"),
    (["count", "--family", "path", "--n", "4", "--m", "5", "--class", "inj"], "not covered"),
    (["poly", "--kind", "p", "--i", "-1"], "--i"),
])
def test_usage_errors(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 2 and fragment in err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--family", "tree", "--n", "4", "--m", "4"])
    assert exc.value.code == 2


def test_profile_csv(capsys):
    code, out, _ = run(capsys, "profile", "--m", "3", "--families", "cycle", "--n-max", "6")
    expected = "".join(f"cycle,{n},3,all,closed,{oracle(('cycle', n), 3)}\n" for n in (4, 5, 6))
    assert out == "family,n,m,class,method,count\n" + expected
    code, out, _ = run(capsys, "profile", "--m", "4", "--families", "complete", "--n-max", "5")
    assert "complete,5,4,all,closed,0" in out.splitlines()
    code, out, _ = run(capsys, "profile", "--m", "3", "--families", "path", "--n-max", "2")
    assert out.splitlines()[1:] == ["path,2,3,all,closed,4"]


def test_profile_sorted_and_json(capsys):
    code, out, _ = run(capsys, "profile", "--m", "5", "--families", "wheel,complete",
                       "--n-max", "4", "--format", "json")
    rows = json.loads(out)
    assert [r["family"] for r in rows][:4] == ["complete"] * 4
    assert [r["class"] for r in rows][:4] == ["all", "inj", "sur", "bij"]
    assert rows[-1] == {"family": "wheel", "n": 4, "m": 5, "class": "all",
                        "method": "closed", "count": str(oracle(("wheel", 4), 5))}


def test_profile_out_file(capsys, tmp_path):
    target = tmp_path / "p.csv"
    assert run(capsys, "profile", "--m", "3", "--families", "path", "--n-max", "3",
               "--out", str(target))[0] == 0
    assert target.read_bytes().startswith(b"family,n,m,class,method,count\n")
    code, _, err = run(capsys, "profile", "--m", "3", "--families", "path", "--n-max", "3",
                       "--out", str(tmp_path / "missing" / "p.csv"))
    assert code == 3


def test_poly(capsys):
    assert run(capsys, "poly", "--kind", "p", "--i", "1")[1] == "[-2, 1]  (= -2 + 1*m)\n"
    assert run(capsys, "poly", "--kind", "q", "--i", "2", "--eval", "3")[1].splitlines()[-1] == "2"
    assert run(capsys, "poly", "--kind", "p", "--i", "0")[1].startswith("[1]")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "quasihom", "count", "--family", "path",
                          "--n", "2", "--m", "4"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "10\n"
