import json
import os
import pathlib
import random
import subprocess
import sys

import pytest

from gens import rand_formula, rand_proof, rand_term
from izf.corpus import corpus_files, render_corpus_file
from izf.parser import Diagnostic, parse, parse_formula, parse_proof, parse_term
from izf.printer import print_formula, print_proof, print_term
from izf.proof_ops import alpha_eq_proof
from izf.syntax import Bottom, Eq, Forall, Imp, Var, alpha_eq

ROOT = pathlib.Path(__file__).resolve().parents[1]
CORPUS = ROOT / "corpus"


def izf(*args, env_extra=None, cwd=ROOT):
    env = dict(os.environ)
    src_dir = str(ROOT / "src")
    env["PYTHONPATH"] = src_dir + os.pathsep + env.get("PYTHONPATH", "")
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "izf.cli", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=cwd,
    )


def test_parse_simple_declaration():
    tf = parse("thm id : bot -> bot := fun (x:bot) => x .")
    assert len(tf.declarations) == 1
    d = tf.declarations[0]
    assert d.name == "id"
    assert alpha_eq(d.formula, Imp(Bottom(), Bottom()))


def test_parse_reports_position():
    with pytest.raises(Diagnostic) as e:
        parse("thm bad : bot := magic .")
    assert e.value.line == 1
    assert e.value.col >= 18


def test_print_examples():
    assert print_formula(Imp(Bottom(), Imp(Bottom(), Bottom()))) == "bot -> bot -> bot"
    assert print_formula(Forall("a", Eq(Var("a"), Var("a")))) == "forall a, a = a"


def test_comments_and_mode_header():
    tf = parse("-- hello\nmode nwf .\nthm t : nwfD in nwfC -> nwfD in nwfC := fun (x : nwfD in nwfC) => x .")
    assert tf.nwf
    assert tf.declarations[0].name == "t"


def test_reference_inlining():
    tf = parse(
        "thm base : bot -> bot := fun (x:bot) => x .\n"
        "thm uses : bot -> bot := base .\n"
    )
    assert alpha_eq_proof(tf.declarations[0].proof, tf.declarations[1].proof)


def test_duplicate_names_rejected():
    with pytest.raises(Diagnostic):
        parse("thm t : bot -> bot := fun (x:bot) => x .\nthm t : bot -> bot := fun (x:bot) => x .")


def test_directive_unknown_name_rejected():
    with pytest.raises(Diagnostic):
        parse("eval nothing .")


@pytest.mark.parametrize("seed", range(150))
def test_round_trip_terms(seed):
    rng = random.Random(seed)
    t = rand_term(rng, 3)
    assert alpha_eq(parse_term(print_term(t)), t)


@pytest.mark.parametrize("seed", range(150))
def test_round_trip_formulas(seed):
    rng = random.Random(500 + seed)
    f = rand_formula(rng, 4)
    assert alpha_eq(parse_formula(print_formula(f)), f)


@pytest.mark.parametrize("seed", range(150))
def test_round_trip_proofs(seed):
    rng = random.Random(900 + seed)
    m = rand_proof(rng, 4)
    assert alpha_eq_proof(parse_proof(print_proof(m)), m)


def test_round_trip_corpus_files():
    for name, (mode, entries, directives) in corpus_files().items():
        text = render_corpus_file(mode, entries, directives)
        tf = parse(text)
        assert len(tf.declarations) == len(entries)
        for decl, entry in zip(tf.declarations, entries):
            assert decl.name == entry.name
            assert alpha_eq(decl.formula, entry.formula)
            assert alpha_eq_proof(decl.proof, entry.proof)


def test_shipped_files_match_builders():
    for name, (mode, entries, directives) in corpus_files().items():
        on_disk = (CORPUS / name).read_text(encoding="utf-8")
        assert on_disk == render_corpus_file(mode, entries, directives), name


# -- command line


def test_cli_check_corpus_ok():
    r = izf("check", "corpus/axioms.izf")
    assert r.returncode == 0, r.stdout + r.stderr
    assert r.stdout.count("ok ") == 11


def test_cli_check_failure_exit_code(tmp_path):
    bad = tmp_path / "bad.izf"
    bad.write_text("thm nope : bot := fun (x:bot) => x .")
    r = izf("check", str(bad))
    assert r.returncode == 1
    assert "FAIL nope" in r.stdout


def test_cli_usage_error_exit_code():
    r = izf("extract", "corpus/axioms.izf", "--goal", "bogus")
    assert r.returncode == 2


def test_cli_normalize_nwf_loop():
    r = izf("normalize", "corpus/nwf_loop.izf", "--fuel", "100000")
    assert r.returncode == 1
    assert "FuelExhausted" in r.stdout
    assert "cycle prefix=0 period=3" in r.stdout


def test_cli_extract_numeral():
    r = izf("extract", "corpus/two_in_omega.izf", "--goal", "numeral")
    assert r.returncode == 0
    assert r.stdout.strip() == "2"


def test_cli_trace_export(tmp_path):
    out = tmp_path / "trace.jsonl"
    r = izf("normalize", "corpus/equality.izf", "--trace", str(out))
    assert r.returncode == 0
    lines = out.read_text().splitlines()
    assert lines
    per_thm: dict[str, int] = {}
    for line in lines:
        rec = json.loads(line)
        assert set(rec) == {"thm", "step", "rule", "path", "term"}
        prev = per_thm.get(rec["thm"], -1)
        assert rec["step"] == prev + 1  # strictly increasing per theorem
        per_thm[rec["thm"]] = rec["step"]
        parse_proof(rec["term"])  # term field re-parses


def test_cli_deterministic_reports():
    a = izf("check", "corpus/equality.izf")
    b = izf("check", "corpus/equality.izf")
    assert a.stdout == b.stdout
    assert a.returncode == b.returncode == 0


def test_cli_env_fuel(tmp_path):
    r = izf("normalize", "corpus/nwf_loop.izf", env_extra={"IZF_FUEL": "50"})
    assert r.returncode == 1
    assert "after 50 steps" in r.stdout


def test_cli_axiom_statement():
    from izf.axioms import PairAx, axiom_statement

    r = izf("axiom", "pair")
    assert r.returncode == 0
    assert alpha_eq(parse_formula(r.stdout.strip()), axiom_statement(PairAx()))


def test_cli_axiom_instantiated():
    r = izf("axiom", "pair", "--inst", "empty", "omega")
    assert r.returncode == 0
    got = parse_formula(r.stdout.strip())
    want = parse_formula(
        "forall c, (c ini {empty, omega} -> c = empty \\/ c = omega)"
        " /\\ (c = empty \\/ c = omega -> c ini {empty, omega})"
    )
    assert alpha_eq(got, want)


def test_cli_realize_eq_file():
    r = izf("realize", "corpus/equality.izf", "--depth", "1", "--fuel", "10000")
    assert r.returncode == 0
    for line in r.stdout.strip().splitlines():
        assert line.endswith("REALIZES")


def test_cli_deterministic_across_hash_seeds():
    a = izf("check", "corpus/equality.izf", env_extra={"PYTHONHASHSEED": "1"})
    b = izf("check", "corpus/equality.izf", env_extra={"PYTHONHASHSEED": "271828"})
    assert a.stdout == b.stdout and a.returncode == b.returncode == 0
    ra = izf("realize", "corpus/numerals.izf", "--depth", "1", env_extra={"PYTHONHASHSEED": "7"})
    rb = izf("realize", "corpus/numerals.izf", "--depth", "1", env_extra={"PYTHONHASHSEED": "99"})
    assert ra.stdout == rb.stdout


def test_print_tree_dispatch():
    from izf.printer import print_tree
    from izf.proofs import PropVar as PV

    assert print_tree(Var("a")) == "a"
    assert print_tree(Eq(Var("a"), Var("a"))) == "a = a"
    assert print_tree(PV("x")) == "x"
    with pytest.raises(TypeError):
        print_tree(42)
