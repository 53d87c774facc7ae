import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gens import rand_formula, rand_term
from izf.nameless import nameless_free_vars, nameless_subst, readback, to_nameless
from izf.syntax import (
    And,
    BoundedForall,
    Bottom,
    Empty,
    Eq,
    Exists,
    ExistsUnique,
    Forall,
    Iff,
    Imp,
    Mem,
    MemI,
    Not,
    Numeral,
    Omega,
    PairT,
    Sep,
    Succ,
    UnionT,
    Var,
    alpha_eq,
    desugar,
    free_vars,
    fresh_name,
    substitute,
)

a, b, c, f = Var("a"), Var("b"), Var("c"), Var("f")


def test_free_vars_atoms():
    assert free_vars(MemI(c, a)) == {"c", "a"}
    assert free_vars(Forall("a", Eq(a, a))) == frozenset()


def test_free_vars_sep_binders():
    sep = Sep("z", (), Mem(Var("z"), f), a, ())
    # oracle: occurrence scan on the nameless representation
    assert free_vars(sep) == nameless_free_vars(to_nameless(sep)) == {"a", "f"}


def test_substitute_variable():
    assert substitute(a, "a", Omega()) == Omega()


def test_substitute_atom():
    got = substitute(MemI(c, a), "a", PairT(Empty(), Empty()))
    assert got == MemI(c, PairT(Empty(), Empty()))


def test_substitute_capture_avoiding():
    # forall b. b in a  [a := {b, b}]  must rename the binder
    got = substitute(Forall("b", Mem(b, a)), "a", PairT(b, b))
    assert isinstance(got, Forall) and got.binder != "b"
    # oracle: nameless substitution then readback
    oracle = readback(nameless_subst(to_nameless(Forall("b", Mem(b, a))), "a", to_nameless(PairT(b, b))))
    assert alpha_eq(got, oracle)


def test_alpha_eq_examples():
    assert alpha_eq(Forall("a", Eq(a, a)), Forall("b", Eq(b, b)))
    assert not alpha_eq(Forall("a", Eq(a, a)), Forall("a", Mem(a, a)))
    s1 = Sep("z", (), Eq(Var("z"), c), a, ())
    s2 = Sep("w", (), Eq(Var("w"), c), a, ())
    assert alpha_eq(s1, s2)


def test_desugar_examples():
    assert desugar(Numeral(0)) == Empty()
    assert desugar(Succ(Empty())) == UnionT(PairT(Empty(), PairT(Empty(), Empty())))
    assert desugar(Not(Bottom())) == Imp(Bottom(), Bottom())


def test_desugar_iff_and_bounded():
    got = desugar(Iff(Bottom(), Bottom()))
    assert got == And(Imp(Bottom(), Bottom()), Imp(Bottom(), Bottom()))
    got = desugar(BoundedForall("a", Omega(), Eq(a, a)))
    assert got == Forall("a", Imp(Mem(a, Omega()), Eq(a, a)))


def test_desugar_exists_unique():
    got = desugar(ExistsUnique("a", Eq(a, a)))
    want = Exists("a", And(Eq(a, a), Forall("b", Imp(Eq(b, b), Eq(b, a)))))
    assert alpha_eq(got, want)


def test_desugar_rejected_by_kernel_ops():
    with pytest.raises(TypeError):
        free_vars(Not(Bottom()))


def test_fresh_name_deterministic():
    assert fresh_name("b", frozenset()) == "b"
    assert fresh_name("b", frozenset({"b"})) == "b1"
    assert fresh_name("b", frozenset({"b", "b1"})) == "b2"


def _rng_pair(seed):
    rng = random.Random(seed)
    return rand_formula(rng, 3), rand_term(rng, 2)


@pytest.mark.parametrize("seed", range(60))
def test_substitution_identity_laws(seed):
    rng = random.Random(seed)
    phi = rand_formula(rng, 3)
    t = rand_term(rng, 2)
    # substituting a variable for itself is alpha-identity
    assert alpha_eq(substitute(phi, "a", Var("a")), phi)
    # substituting for a non-free variable is alpha-identity
    if "q" not in free_vars(phi):
        assert alpha_eq(substitute(phi, "q", t), phi)


@pytest.mark.parametrize("seed", range(120))
def test_substitution_commutation(seed):
    # phi[a:=t][b:=u[a:=t]] == phi[b:=u][a:=t]  when a != b and b not free in t
    rng = random.Random(10_000 + seed)
    phi = rand_formula(rng, 3)
    t = rand_term(rng, 2)
    u = rand_term(rng, 2)
    if "b" in free_vars(t):
        t = substitute(t, "b", Empty())
    lhs = substitute(substitute(phi, "a", t), "b", substitute(u, "a", t))
    rhs = substitute(substitute(phi, "b", u), "a", t)
    assert alpha_eq(lhs, rhs)


@pytest.mark.parametrize("seed", range(80))
def test_alpha_eq_equivalence_relation(seed):
    rng = random.Random(20_000 + seed)
    phi = rand_formula(rng, 3)
    psi = rand_formula(rng, 3)
    chi = rand_formula(rng, 2)
    assert alpha_eq(phi, phi)
    assert alpha_eq(phi, psi) == alpha_eq(psi, phi)
    if alpha_eq(phi, psi) and alpha_eq(psi, chi):
        assert alpha_eq(phi, chi)


@pytest.mark.parametrize("seed", range(60))
def test_alpha_eq_matches_nameless_oracle(seed):
    rng = random.Random(30_000 + seed)
    phi = rand_formula(rng, 3)
    psi = rand_formula(rng, 3)
    assert alpha_eq(phi, psi) == (to_nameless(phi) == to_nameless(psi))
    # renaming by round-tripping through the nameless view is invisible
    assert alpha_eq(phi, readback(to_nameless(phi)))


@given(st.integers(0, 10))
@settings(max_examples=11)
def test_numeral_expansion_is_iterated_succ(n):
    expanded = desugar(Numeral(n))
    expect = Empty()
    for _ in range(n):
        expect = UnionT(PairT(expect, PairT(expect, expect)))
    assert expanded == expect
