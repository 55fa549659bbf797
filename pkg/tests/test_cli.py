import json

import pytest

from antileibniz.algebra import Algebra, BilinearForm
from antileibniz.cli import (
    ALGEBRA_LAWS,
    COALGEBRA_LAWS,
    EXIT_ERROR,
    EXIT_FAIL,
    EXIT_PASS,
    reduce_to,
    run,
)
from antileibniz.core import get_field
from antileibniz.errors import BadParameter
from antileibniz.identities import IDENTITIES
from antileibniz.pairs import coregular_pair
from antileibniz.rotabaxter import WeightedRB
from antileibniz.search import BUDGET_ENV, EXTRAPOLATION_NOTE
from antileibniz.serialization import load, save
from antileibniz.tensorconstruct import FIXTURES, QuadraticAA, catalog


def _write(tmp_path, name, obj):
    return str(save(obj, tmp_path / f"{name}.json"))


def _machine(capsys, argv):
    code = run([*argv, "--machine"])
    return code, json.loads(capsys.readouterr().out)


def test_idempotent_algebra_fails(tmp_path, capsys, idempotent1):
    path = _write(tmp_path, "idempotent", idempotent1)
    code, doc = _machine(capsys, ["check", "algebra", path])
    assert code == EXIT_FAIL
    assert doc["verdict"] == "fail"
    failed = [c for c in doc["clauses"] if not c["holds"]]
    assert failed[0]["witness"] == [1, 1, 1]


def test_idempotent_algebra_in_characteristic_three(tmp_path, capsys, idempotent1):
    path = _write(tmp_path, "idempotent", idempotent1)
    assert run(["check", "algebra", path, "--field", "gf3"]) == EXIT_PASS


def test_check_algebra_text(tmp_path, capsys, lambda21):
    path = _write(tmp_path, "lambda21", lambda21)
    assert run(["check", "algebra", path]) == EXIT_PASS
    assert ": PASS" in capsys.readouterr().out.splitlines()[0]


def test_check_algebra_other_law(tmp_path, capsys, lambda21):
    path = _write(tmp_path, "lambda21", lambda21)
    # every triple product of e1 e1 = e2 vanishes
    code, doc = _machine(capsys, ["check", "algebra", path, "--law", "mock-lie"])
    assert code == EXIT_PASS
    assert doc["verdict"] == "pass"


def test_machine_output_is_deterministic(tmp_path, capsys, lambda21_bialgebra):
    path = _write(tmp_path, "bialgebra", lambda21_bialgebra)
    first = _machine(capsys, ["check", "bialgebra", path])
    second = _machine(capsys, ["check", "bialgebra", path])
    assert first == second
    assert first[0] == EXIT_PASS
    assert "elapsed" not in first[1]


def test_build_double_writes_output(tmp_path, capsys, lambda21_bialgebra):
    path = _write(tmp_path, "bialgebra", lambda21_bialgebra)
    out = tmp_path / "double.json"
    assert run(["build", "double", path, "-o", str(out)]) == EXIT_PASS
    double = load(out)
    assert double.dim == 4
    assert double.alg == catalog("lambda21_double").alg


def test_build_dual_and_manin(tmp_path, capsys, lambda21_bialgebra):
    path = _write(tmp_path, "bialgebra", lambda21_bialgebra)
    code, doc = _machine(capsys, ["build", "dual", path])
    assert code == EXIT_PASS
    assert doc["output"]["kind"] == "bialgebra"
    code, doc = _machine(capsys, ["build", "manin", path])
    assert code == EXIT_PASS
    assert doc["output"]["dim"] == 4


def test_crosscheck_and_broken_bialgebra(tmp_path, capsys, lambda21_bialgebra,
                                         broken_bialgebra):
    good = _write(tmp_path, "good", lambda21_bialgebra)
    bad = _write(tmp_path, "bad", broken_bialgebra)
    assert run(["check", "crosscheck", good]) == EXIT_PASS
    assert run(["check", "crosscheck", bad]) == EXIT_PASS
    assert run(["check", "bialgebra", bad]) == EXIT_FAIL


def test_affine_window(tmp_path, capsys, lambda21_bialgebra, broken_bialgebra):
    good = _write(tmp_path, "good", lambda21_bialgebra)
    bad = _write(tmp_path, "bad", broken_bialgebra)
    assert run(["affine", "check", good, "--window", "2"]) == EXIT_PASS
    assert run(["affine", "check", bad, "--window", "2"]) == EXIT_FAIL
    assert run(["affine", "check", good, "--window", "0"]) == EXIT_ERROR


def test_ybe_commands(tmp_path, capsys):
    path = _write(tmp_path, "rmatrix", catalog("lambda21_symmetric_r"))
    assert run(["ybe", "check", path]) == EXIT_PASS
    capsys.readouterr()
    code, doc = _machine(capsys, ["ybe", "delta", path])
    assert code == EXIT_PASS
    assert doc["output"]["kind"] == "bialgebra"


def test_ybe_needs_r(tmp_path, capsys, lambda21):
    path = _write(tmp_path, "lambda21", lambda21)
    assert run(["ybe", "check", path]) == EXIT_ERROR


def test_rb_commands(tmp_path, capsys, lambda21):
    path = _write(tmp_path, "rb", WeightedRB(lambda21, [[-1, 0], [0, -1]], 1))
    assert run(["rb", "check", path]) == EXIT_PASS
    capsys.readouterr()
    code, doc = _machine(capsys, ["rb", "descend", path])
    assert code == EXIT_PASS
    assert doc["output"]["kind"] == "algebra"
    assert run(["rb", "to-factorizable", path]) == EXIT_ERROR


def test_tensor_algebra(tmp_path, capsys):
    left = _write(tmp_path, "L1", catalog("L1"))
    right = _write(tmp_path, "AA2", catalog("AA2"))
    out = tmp_path / "tensor.json"
    assert run(["tensor", "algebra", left, right, "-o", str(out)]) == EXIT_PASS
    assert load(out).dim == 4


def test_tensor_bialgebra(tmp_path, capsys):
    left = _write(tmp_path, "L3", catalog("L3_bialgebra"))
    right = _write(tmp_path, "AA2", catalog("AA2"))
    code, doc = _machine(capsys, ["tensor", "bialgebra", left, right])
    assert code == EXIT_PASS
    assert doc["output"]["dim"] == 4


def test_search_structures(capsys):
    code, doc = _machine(capsys, ["search", "structures", "--dim", "1", "--field", "gf2"])
    assert code == EXIT_PASS
    assert len(doc["output"]) == 1
    assert len(doc["table"]) == 1


def test_search_structures_with_orbits(capsys):
    code, doc = _machine(capsys, ["search", "structures", "--dim", "1", "--field", "gf3",
                                  "--orbits", "--workers", "1"])
    assert code == EXIT_PASS
    assert "2 orbits" in doc["notes"]


def test_search_needs_prime_field(capsys):
    assert run(["search", "structures", "--dim", "1"]) == EXIT_ERROR


def test_search_budget(capsys):
    assert run(["search", "structures", "--dim", "3", "--field", "gf2",
                "--budget", "100"]) == EXIT_ERROR


def test_search_ybe(tmp_path, capsys, lambda21):
    path = _write(tmp_path, "lambda21", lambda21)
    assert run(["search", "ybe", "--input", path, "--field", "gf3"]) == EXIT_PASS
    assert "count: " in capsys.readouterr().out


def test_catalog_commands(capsys):
    code, doc = _machine(capsys, ["catalog", "list"])
    assert code == EXIT_PASS
    assert len(doc["table"]) == len(FIXTURES)
    code, doc = _machine(capsys, ["catalog", "show", "lambda21_bialgebra", "--param", "k=2"])
    assert code == EXIT_PASS
    assert doc["output"]["coproducts"] == [{"k": 1, "out": [{"i": 2, "j": 2, "c": "2"}]}]


@pytest.mark.parametrize("argv", [
    ["catalog", "show", "Lambda9"],
    ["catalog", "show", "lambda21_bialgebra", "--param", "k"],
    ["check", "algebra", "missing.json"],
    ["check", "algebra"],
    ["frobnicate"],
])
def test_errors_exit_two(capsys, argv):
    assert run(argv) == EXIT_ERROR


def test_error_report_in_machine_mode(tmp_path, capsys):
    code, doc = _machine(capsys, ["check", "algebra", str(tmp_path / "absent.json")])
    assert code == EXIT_ERROR
    assert doc["verdict"] == "error"
    assert "error" in doc


def test_help_exits_zero(capsys):
    assert run(["--help"]) == EXIT_PASS


def test_suite_command(capsys):
    code, doc = _machine(capsys, ["check", "suite", "--count", "5", "--seed", "3"])
    assert code == EXIT_PASS
    assert doc["notes"][-1].endswith("of 5 cases are bialgebras")


def test_log_file(tmp_path, capsys, lambda21):
    path = _write(tmp_path, "lambda21", lambda21)
    log = tmp_path / "run.log"
    assert run(["check", "algebra", path, "--log-file", str(log), "-v"]) == EXIT_PASS
    assert log.exists()


def test_reduce_to(lambda21_bialgebra):
    gf3 = get_field("GF(3)")
    reduced = reduce_to(lambda21_bialgebra, gf3)
    assert reduced.field is gf3
    assert reduce_to(lambda21_bialgebra, None) is lambda21_bialgebra
    with pytest.raises(BadParameter):
        reduce_to(catalog("AA2"), gf3)


def _anchors(capsys, argv):
    code, doc = _machine(capsys, argv)
    assert code != EXIT_ERROR, argv
    return {clause["anchor"] for clause in doc["clauses"]}


def test_every_identity_is_registered_and_reached(tmp_path, capsys, lambda21,
                                                  lambda21_bialgebra):
    B = lambda21_bialgebra
    algebra = _write(tmp_path, "lambda21", lambda21)
    bialgebra = _write(tmp_path, "bialgebra", B)
    pair = _write(tmp_path, "pair", coregular_pair(B.alg, B.coa))
    rmatrix = _write(tmp_path, "rmatrix", catalog("lambda21_symmetric_r"))
    double_r = _write(tmp_path, "double_r", catalog("lambda21_double_r"))
    operator = _write(tmp_path, "rb", WeightedRB(lambda21, [[-1, 0], [0, -1]], 1))
    quadratic = _write(tmp_path, "AA2", catalog("AA2"))
    skew = _write(tmp_path, "skew",
                  QuadraticAA(Algebra.zero(2), BilinearForm([[0, 1], [-1, 0]])))
    leibniz = _write(tmp_path, "L3", catalog("L3_bialgebra"))
    skew_quadratic = str(tmp_path / "sq.json")

    runs = [["check", "algebra", algebra, "--law", law] for law in ALGEBRA_LAWS]
    runs += [["check", "coalgebra", bialgebra, "--law", law] for law in COALGEBRA_LAWS]
    runs += [
        ["check", "bialgebra", bialgebra],
        ["check", "leibniz-bialgebra", leibniz],
        ["check", "matched-pair", pair],
        ["check", "crosscheck", bialgebra],
        ["check", "quadratic", quadratic],
        ["check", "form", skew],
        ["build", "double", bialgebra],
        ["build", "manin", bialgebra],
        ["ybe", "check", rmatrix],
        ["ybe", "criteria", rmatrix],
        ["rb", "check", operator],
        ["rb", "from-factorizable", double_r, "--lambda", "1", "-o", skew_quadratic],
        ["rb", "to-factorizable", skew_quadratic],
        ["affine", "check", bialgebra, "--window", "2"],
        ["affine", "line", "--window", "2"],
        ["search", "structures", "--dim", "1", "--field", "gf3", "--orbits",
         "--workers", "1"],
        ["search", "ybe", "--input", algebra, "--field", "gf3"],
    ]
    reached = set()
    for argv in runs:
        reached |= _anchors(capsys, argv)
    assert reached - set(IDENTITIES) == set()
    assert set(IDENTITIES) - reached == set()


def test_clauses_carry_the_identity(tmp_path, capsys, lambda21):
    path = _write(tmp_path, "lambda21", lambda21)
    _, doc = _machine(capsys, ["check", "algebra", path])
    clause = doc["clauses"][0]
    assert clause["anchor"] == "anti-Leibniz identity"
    assert clause["identity"] == IDENTITIES["anti-Leibniz identity"]


def test_prime_field_results_are_labelled(tmp_path, capsys, lambda21):
    path = _write(tmp_path, "lambda21", lambda21)
    code, doc = _machine(capsys, ["check", "algebra", path])
    assert code == EXIT_PASS
    assert EXTRAPOLATION_NOTE not in doc.get("notes", [])

    code, doc = _machine(capsys, ["check", "algebra", path, "--field", "gf2"])
    assert code == EXIT_PASS
    assert EXTRAPOLATION_NOTE in doc["notes"]

    gf3 = _write(tmp_path, "lambda21_gf3", reduce_to(lambda21, get_field("gf3")))
    _, doc = _machine(capsys, ["check", "algebra", gf3])
    assert EXTRAPOLATION_NOTE in doc["notes"]

    run(["check", "algebra", path, "--field", "gf5"])
    assert f"note: {EXTRAPOLATION_NOTE}" in capsys.readouterr().out


def test_search_labels_once(capsys):
    _, doc = _machine(capsys, ["search", "structures", "--dim", "1", "--field", "gf3",
                               "--orbits", "--workers", "1"])
    assert doc["notes"].count(EXTRAPOLATION_NOTE) == 1


def test_budget_flag_overrides_environment(monkeypatch, capsys):
    monkeypatch.setenv(BUDGET_ENV, "100")
    argv = ["search", "structures", "--dim", "2", "--field", "gf2"]
    assert run(argv) == EXIT_ERROR
    assert run([*argv, "--budget", "1000"]) == EXIT_PASS
    capsys.readouterr()
    assert run(["search", "structures", "--help"]) == EXIT_PASS
    assert BUDGET_ENV in capsys.readouterr().out


def test_coalgebra_laws(tmp_path, capsys, lambda21_bialgebra):
    path = _write(tmp_path, "bialgebra", lambda21_bialgebra)
    # D(e1) = e2 (x) e2 is symmetric, so not anti-cocommutative
    code, doc = _machine(capsys, ["check", "coalgebra", path, "--law", "anticocomm-anticoassoc"])
    assert code == EXIT_FAIL
    assert doc["clauses"][0]["holds"] is False
    assert run(["check", "coalgebra", path, "--law", "bogus"]) == EXIT_ERROR


def test_check_quadratic_and_form(tmp_path, capsys, lambda21):
    code, doc = _machine(capsys, ["check", "quadratic", _write(tmp_path, "AA2", catalog("AA2"))])
    assert code == EXIT_PASS
    assert {c["anchor"] for c in doc["clauses"]} >= {"symmetric form", "nondegenerate form"}

    skew = BilinearForm([[0, 1], [-1, 0]])
    zero = _write(tmp_path, "zero", QuadraticAA(Algebra.zero(2), skew))
    assert run(["check", "form", zero]) == EXIT_PASS
    capsys.readouterr()
    # B(e1e1, e1) = B(e2, e1) = -1 while B(e1, e1e1 - e1e1) = 0
    code, doc = _machine(capsys, ["check", "form", _write(tmp_path, "l21",
                                                          QuadraticAA(lambda21, skew))])
    assert code == EXIT_FAIL
    agree = [c for c in doc["clauses"] if c["anchor"] == "invariance criterion"]
    assert agree[0]["holds"] is True


def test_ybe_criteria(tmp_path, capsys):
    path = _write(tmp_path, "rmatrix", catalog("lambda21_symmetric_r"))
    code, doc = _machine(capsys, ["ybe", "criteria", path])
    assert code == EXIT_PASS
    names = [c["name"] for c in doc["clauses"]]
    assert "criteria agree" in names
    assert "coregular criteria agree" in names


def test_rb_from_factorizable_reports_descendent_bialgebra(tmp_path, capsys):
    path = _write(tmp_path, "double_r", catalog("lambda21_double_r"))
    code, doc = _machine(capsys, ["rb", "from-factorizable", path, "--lambda", "2"])
    assert code == EXIT_PASS
    anchors = {c["anchor"] for c in doc["clauses"]}
    assert "scaled skew map is a bialgebra isomorphism" in anchors
    assert doc["output"]["kind"] == "rb"


def test_affine_line(capsys):
    code, doc = _machine(capsys, ["affine", "line", "--scale", "2", "--pairing", "3",
                                  "--window", "2"])
    assert code == EXIT_PASS
    assert doc["title"] == "graded line c=2, w=3 on window 2"
    assert run(["affine", "line", "--pairing", "0"]) == EXIT_ERROR
    assert run(["affine", "line", "--scale", "x"]) == EXIT_ERROR
