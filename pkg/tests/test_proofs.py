import random

import pytest

from gens import rand_proof, rand_term
from izf.axioms import PairAx
from izf.proof_ops import alpha_eq_proof, erase, esubst_prop, esubst_term, subst_proof, subst_proof_term
from izf.proofs import (
    App,
    AppT,
    AxRep,
    EAppT,
    EAxRep,
    ELamP,
    ExIntro,
    Ind,
    Inl,
    LamP,
    Magic,
    PairP,
    PropVar,
    ValueTag,
    is_value,
    proof_free_vars,
    value_tag,
)
from izf.axioms import IndAx
from izf.syntax import Bottom, Empty, Eq, Exists, Omega, Var

x, y = PropVar("x"), PropVar("y")
B = Bottom()


def test_proof_free_vars_examples():
    assert proof_free_vars(x) == ({"x"}, frozenset())
    assert proof_free_vars(LamP("x", B, x)) == (frozenset(), frozenset())
    exi = ExIntro(Var("a"), x, Exists("a", Eq(Var("a"), Var("a"))))
    assert proof_free_vars(exi) == ({"x"}, {"a"})


def test_subst_proof_examples():
    assert subst_proof(x, "x", Magic(y, B)) == Magic(y, B)
    exi = ExIntro(Var("a"), x, Exists("b", Eq(Var("b"), Var("b"))))
    got = subst_proof_term(exi, "a", Empty())
    assert got.witness == Empty()
    # shadowing: the bound x is untouched
    lam = LamP("x", B, x)
    assert subst_proof(lam, "x", y) == lam


def test_subst_proof_capture_avoidance():
    # substituting a term mentioning x under a lambda binding x renames it
    m = LamP("x", B, PairP(x, y))
    got = subst_proof(m, "y", x)
    assert isinstance(got, LamP) and got.var != "x"
    assert proof_free_vars(got)[0] == {"x"}


def test_erase_examples():
    m = AxRep(PairAx(), Empty(), (Empty(), Omega()), x)
    got = erase(m)
    assert got == EAxRep("pair", erase(x))
    lam = LamP("x", B, x)
    assert isinstance(erase(lam), ELamP)
    apt = AppT(x, Omega())
    assert erase(apt) == EAppT(erase(x), Omega())


def test_value_tag_examples():
    assert value_tag(Inl(x, Bottom())) is ValueTag.INL
    assert value_tag(App(x, y)) is ValueTag.NOT_VALUE
    ind = Ind(IndAx("a", (), Eq(Var("a"), Var("a"))), x, ())
    assert value_tag(ind) is ValueTag.NOT_VALUE


@pytest.mark.parametrize("seed", range(80))
def test_erase_commutes_with_prop_substitution(seed):
    rng = random.Random(seed)
    m = rand_proof(rng, 3)
    n = rand_proof(rng, 2)
    lhs = erase(subst_proof(m, "x", n))
    rhs = esubst_prop(erase(m), "x", erase(n))
    assert alpha_eq_proof(lhs, rhs)


@pytest.mark.parametrize("seed", range(80))
def test_erase_commutes_with_term_substitution(seed):
    rng = random.Random(1000 + seed)
    m = rand_proof(rng, 3)
    t = rand_term(rng, 2)
    lhs = erase(subst_proof_term(m, "a", t))
    rhs = esubst_term(erase(m), "a", t)
    assert alpha_eq_proof(lhs, rhs)


@pytest.mark.parametrize("seed", range(80))
def test_erasure_preserves_valueness(seed):
    rng = random.Random(2000 + seed)
    m = rand_proof(rng, 3)
    if is_value(m):
        assert is_value(erase(m))
        assert value_tag(erase(m)) == value_tag(m)


@pytest.mark.parametrize("seed", range(40))
def test_prop_substitution_matches_free_var_accounting(seed):
    rng = random.Random(3000 + seed)
    m = rand_proof(rng, 3)
    n = rand_proof(rng, 2)
    pv_m, fv_m = proof_free_vars(m)
    out = subst_proof(m, "x", n)
    pv_out, _ = proof_free_vars(out)
    if "x" not in pv_m:
        assert alpha_eq_proof(out, m)
    else:
        pv_n, _ = proof_free_vars(n)
        assert pv_out == (pv_m - {"x"}) | pv_n
