import pytest

import kmfold


def test_section_record():
    r = kmfold.case("A1[1]", "gamma", "section")
    assert r["schema"] == "kmfold/1"
    assert (r["k"], r["b"], r["p"]) == (1, [1, 0], 2)


def test_fold_records():
    assert kmfold.case("D1[4]", "rho", "fold")["folded_case"] == "D3[4]"
    assert kmfold.case("A1[1]", "id", "fold")["folded_case"] == "A1[1]"


def test_cartan_and_recognize():
    m, marks, dual = kmfold.cartan("A1[1]")
    assert m == [[2, -2], [-2, 2]]
    assert marks == dual == [1, 1]
    assert kmfold.recognize(m) == "A1[1]"
    assert kmfold.recognize([[0]]) == "0"


def test_representatives():
    names = [n for n, _ in kmfold.representatives("E1[6]")]
    assert names == ["gamma", "sigma"]


def test_table_five_row():
    t = kmfold.table(5)
    row = next(r for r in t["rows"] if r["case"] == "E1[7]" and r["auto"] == "gamma")
    assert row["computed"] == 2 and row["status"] == "match"


def test_render_is_deterministic():
    assert kmfold.render([2], 6, "tsv") == kmfold.render([2], 6, "tsv")


def test_verify_level():
    assert kmfold.verify("level")["summary"]["failed"] == 0


def test_bad_case():
    with pytest.raises(ValueError):
        kmfold.case("Q1[1]")
