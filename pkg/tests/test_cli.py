import json
from pathlib import Path

from iwahecke.cli import main

from conftest import DATA

CORPUS_Q2 = Path("src/iwahecke/data/scholze_corpus_q2.txt")


def run(tmp_path, *argv, name="out"):
    out = tmp_path / name
    rc = main(list(argv) + ["--out", str(out)])
    return rc, out.read_bytes() if out.exists() else b""


def test_adm_gl2(tmp_path):
    rc, data = run(tmp_path, "adm", "--group", "GL:2", "--mu", "1,0")
    assert rc == 0
    doc = json.loads(data)
    assert doc["count"] == 3
    assert doc["schema"] == "iwahecke/adm/1"


def test_adm_trivial(tmp_path):
    rc, data = run(tmp_path, "adm", "--group", "GL:2", "--mu", "0,0")
    assert rc == 0
    assert json.loads(data)["count"] == 1


def test_adm_malformed_mu(tmp_path, capsys):
    assert main(["adm", "--group", "GL:2", "--mu", "x,y"]) == 2


def test_adm_wrong_length_mu(tmp_path):
    rc, _ = run(tmp_path, "adm", "--group", "GL:3", "--mu", "1,0")
    assert rc == 3


def test_adm_csv(tmp_path):
    rc, data = run(tmp_path, "adm", "--group", "GL:2", "--mu", "1,0",
                   "--format", "csv")
    assert rc == 0
    lines = data.decode().strip().splitlines()
    assert lines[0] == "translation,finite_word,length,kappa"
    assert len(lines) == 4


def test_zmu_methods_identical(tmp_path):
    rc1, d1 = run(tmp_path, "zmu", "--group", "GL:4", "--mu", "1,1,0,0",
                  "--method", "theta", name="a")
    rc2, d2 = run(tmp_path, "zmu", "--group", "GL:4", "--mu", "1,1,0,0",
                  "--method", "closed", name="b")
    assert rc1 == rc2 == 0
    a, b = json.loads(d1), json.loads(d2)
    assert a["terms"] == b["terms"]  # identical modulo the method tag


def test_zmu_closed_requires_minuscule(tmp_path):
    rc, _ = run(tmp_path, "zmu", "--group", "GL:2", "--mu", "2,0",
                "--method", "closed")
    assert rc == 3


def test_zmu_trivial(tmp_path):
    rc, data = run(tmp_path, "zmu", "--group", "GL:3", "--mu", "0,0,0")
    doc = json.loads(data)
    assert rc == 0 and len(doc["terms"]) == 1
    assert doc["terms"][0]["coeff"] == {"0": 1}


def test_zmu_q_specialization(tmp_path):
    rc, data = run(tmp_path, "zmu", "--group", "GL:2", "--mu", "1,0",
                   "--q", "4")
    doc = json.loads(data)
    coeffs = {tuple(t["element"]["translation"]): t["coeff"]
              for t in doc["terms"]}
    assert coeffs[(1, 0)] == {"q": 4, "value": 1}
    assert coeffs[(0, 1)] == {"q": 4, "value": 1}


def test_zmu_levi(tmp_path):
    rc, data = run(tmp_path, "zmu", "--group", "GL:3", "--mu", "1,0,0",
                   "--levi", "1")
    doc = json.loads(data)
    assert rc == 0
    assert doc["normalization"] == "c^G_L(z_mu)"
    assert len(doc["terms"]) == 4  # z^L_{(1,0,0)} (3 terms) + z^L_{(0,0,1)}


def test_zmu_base_change(tmp_path):
    rc, data = run(tmp_path, "zmu", "--group", "GL:2", "--mu", "1,0",
                   "--r", "2")
    doc = json.loads(data)
    assert rc == 0
    translations = {tuple(t["element"]["translation"]) for t in doc["terms"]
                    if not t["element"]["finite_word"]}
    assert {(2, 0), (0, 2)} <= translations


def test_transfer_pass(tmp_path):
    rc, data = run(tmp_path, "transfer", "--group", "GL:4", "--mu", "1,1,0,0")
    doc = json.loads(data)
    assert rc == 0
    assert doc["routes_match"] == "PASS"
    assert doc["grassmannian"]["match"] == "PASS"
    assert doc["grassmannian"]["expected"] == \
        {"0": 1, "2": 1, "4": 2, "6": 1, "8": 1}


def test_transfer_trivial_grade(tmp_path):
    rc, data = run(tmp_path, "transfer", "--group", "GL:3", "--mu", "0,0,0")
    doc = json.loads(data)
    assert rc == 0 and doc["graded"] == {"0": {"0": 1}}


def test_custom_group_config(tmp_path):
    rc, data = run(tmp_path, "adm", "--group", str(DATA / "gsp4.cfg"),
                   "--mu", "1,1,1")
    assert rc == 0
    assert json.loads(data)["count"] == 13


def test_determinism(tmp_path):
    rc1, d1 = run(tmp_path, "zmu", "--group", "GL:3", "--mu", "1,1,0", name="a")
    rc2, d2 = run(tmp_path, "zmu", "--group", "GL:3", "--mu", "1,1,0", name="b")
    assert rc1 == rc2 == 0 and d1 == d2
    rc3, d3 = run(tmp_path, "scholze", "--n", "1", "--q", "2", "--corpus",
                  str(CORPUS_Q2), "--precision", "12", "--pairs", "1", name="c")
    rc4, d4 = run(tmp_path, "scholze", "--n", "1", "--q", "2", "--corpus",
                  str(CORPUS_Q2), "--precision", "12", "--pairs", "1", name="d")
    assert rc3 == rc4 == 0 and d3 == d4


def test_scholze_empty_corpus(tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n")
    rc, data = run(tmp_path, "scholze", "--n", "1", "--q", "2",
                   "--corpus", str(empty))
    assert rc == 0
    assert data.decode().strip() == "index,matrix,phi,z,flag"


def test_scholze_precision_starved_row(tmp_path):
    corpus = tmp_path / "c.txt"
    corpus.write_text("1:1 | z | z | 0:1\n")
    rc, data = run(tmp_path, "scholze", "--n", "3", "--q", "2",
                   "--corpus", str(corpus), "--precision", "2", "--pairs", "0")
    assert rc == 0
    rows = data.decode().strip().splitlines()
    assert rows[1].endswith("INDETERMINATE")


def test_scholze_golden(tmp_path):
    rc, data = run(tmp_path, "scholze", "--n", "1", "--q", "2",
                   "--corpus", str(CORPUS_Q2), "--precision", "12",
                   "--pairs", "1")
    assert rc == 0
    golden = (DATA / "golden_scholze_q2_n1.csv").read_bytes()
    assert data == golden


def test_zmu_golden(tmp_path):
    rc, data = run(tmp_path, "zmu", "--group", "GL:3", "--mu", "1,0,0")
    assert rc == 0
    golden = (DATA / "golden_zmu_gl3.json").read_bytes()
    assert data == golden


def test_jobspec_round_trip():
    from iwahecke.cli import JobSpec, build_parser
    args = build_parser().parse_args(
        ["zmu", "--group", "GL:3", "--mu", "1,0,0", "--q", "4",
         "--method", "closed"])
    spec = JobSpec.from_args(args)
    assert JobSpec.from_dict(spec.to_dict()) == spec
    args2 = build_parser().parse_args(
        ["scholze", "--n", "2", "--q", "3", "--pairs", "5"])
    spec2 = JobSpec.from_args(args2)
    assert JobSpec.from_dict(spec2.to_dict()) == spec2
    assert spec2 != spec


def test_transfer_report_embeds_function(tmp_path):
    rc, data = run(tmp_path, "transfer", "--group", "GL:2", "--mu", "1,0")
    doc = json.loads(data)
    assert doc["input_function"] == [{"coweight": [1, 0], "coeff": {"0": 1}}]


def test_unsupported_formats_exit_3(tmp_path):
    rc, _ = run(tmp_path, "zmu", "--group", "GL:2", "--mu", "1,0",
                "--format", "csv")
    assert rc == 3
    rc, _ = run(tmp_path, "transfer", "--group", "GL:2", "--mu", "1,0",
                "--format", "csv")
    assert rc == 3
    rc, _ = run(tmp_path, "scholze", "--n", "1", "--q", "2",
                "--format", "json")
    assert rc == 3


def test_scholze_rejects_non_prime_power(tmp_path):
    rc, _ = run(tmp_path, "scholze", "--n", "1", "--q", "6")
    assert rc == 3


def test_scholze_generated_corpus_gf9(tmp_path):
    rc, data = run(tmp_path, "scholze", "--n", "1", "--q", "9",
                   "--count", "5", "--pairs", "1")
    assert rc == 0
    assert len(data.decode().strip().splitlines()) == 6
