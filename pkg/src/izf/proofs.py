"""Proof terms, their erased counterparts, and the erasure map.

Two variable namespaces: propositional variables (hypothesis names) and
first-order variables shared with terms and formulas.  Lambdas, case, let
and the extra introduction forms carry formula annotations so that type
inference is fully syntax-directed; erasure drops every annotation and the
term arguments of the axiom and induction constructors, but keeps the
first-order terms of quantifier proofs, mirroring the reduction-transparent
erasure of the untyped calculus.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import syntax as sx
from .axioms import AxiomId, IndAx
from .syntax import Formula, Term


class Proof:
    __slots__ = ()


class ErasedProof:
    __slots__ = ()


# ---------------------------------------------------------------------------
# Annotated proof terms


@dataclass(frozen=True)
class PropVar(Proof):
    name: str


@dataclass(frozen=True)
class App(Proof):
    fn: Proof
    arg: Proof


@dataclass(frozen=True)
class LamP(Proof):
    var: str
    dom: Formula
    body: Proof


@dataclass(frozen=True)
class LamF(Proof):
    var: str
    body: Proof


@dataclass(frozen=True)
class AppT(Proof):
    fn: Proof
    arg: Term


@dataclass(frozen=True)
class PairP(Proof):
    left: Proof
    right: Proof


@dataclass(frozen=True)
class Fst(Proof):
    arg: Proof


@dataclass(frozen=True)
class Snd(Proof):
    arg: Proof


@dataclass(frozen=True)
class Inl(Proof):
    body: Proof
    ann: Formula  # the full disjunction being introduced


@dataclass(frozen=True)
class Inr(Proof):
    body: Proof
    ann: Formula


@dataclass(frozen=True)
class Case(Proof):
    scrut: Proof
    lvar: str
    lann: Formula
    lbody: Proof
    rvar: str
    rann: Formula
    rbody: Proof


@dataclass(frozen=True)
class ExIntro(Proof):
    witness: Term
    body: Proof
    ann: Formula  # the full existential formula being introduced


@dataclass(frozen=True)
class Let(Proof):
    fvar: str
    pvar: str
    ann: Formula  # the body formula of the eliminated existential
    subject: Proof
    body: Proof


@dataclass(frozen=True)
class Magic(Proof):
    arg: Proof
    ann: Formula  # the formula concluded ex falso


@dataclass(frozen=True)
class Ind(Proof):
    schema: IndAx
    arg: Proof
    terms: tuple[Term, ...]


@dataclass(frozen=True)
class AxRep(Proof):
    ax: AxiomId
    term: Term
    args: tuple[Term, ...]
    arg: Proof


@dataclass(frozen=True)
class AxProp(Proof):
    ax: AxiomId
    term: Term
    args: tuple[Term, ...]
    arg: Proof


# ---------------------------------------------------------------------------
# Erased proof terms


@dataclass(frozen=True)
class EPropVar(ErasedProof):
    name: str


@dataclass(frozen=True)
class EApp(ErasedProof):
    fn: ErasedProof
    arg: ErasedProof


@dataclass(frozen=True)
class ELamP(ErasedProof):
    var: str
    body: ErasedProof


@dataclass(frozen=True)
class ELamF(ErasedProof):
    var: str
    body: ErasedProof


@dataclass(frozen=True)
class EAppT(ErasedProof):
    fn: ErasedProof
    arg: Term


@dataclass(frozen=True)
class EPairP(ErasedProof):
    left: ErasedProof
    right: ErasedProof


@dataclass(frozen=True)
class EFst(ErasedProof):
    arg: ErasedProof


@dataclass(frozen=True)
class ESnd(ErasedProof):
    arg: ErasedProof


@dataclass(frozen=True)
class EInl(ErasedProof):
    body: ErasedProof


@dataclass(frozen=True)
class EInr(ErasedProof):
    body: ErasedProof


@dataclass(frozen=True)
class ECase(ErasedProof):
    scrut: ErasedProof
    lvar: str
    lbody: ErasedProof
    rvar: str
    rbody: ErasedProof


@dataclass(frozen=True)
class EExIntro(ErasedProof):
    witness: Term
    body: ErasedProof


@dataclass(frozen=True)
class ELet(ErasedProof):
    fvar: str
    pvar: str
    subject: ErasedProof
    body: ErasedProof


@dataclass(frozen=True)
class EMagic(ErasedProof):
    arg: ErasedProof


@dataclass(frozen=True)
class EInd(ErasedProof):
    arg: ErasedProof


@dataclass(frozen=True)
class EAxRep(ErasedProof):
    family: str  # axiom family tag, e.g. "pair", "in", "inac1"
    arg: ErasedProof


@dataclass(frozen=True)
class EAxProp(ErasedProof):
    family: str
    arg: ErasedProof


# ---------------------------------------------------------------------------
# Value classification


class ValueTag(Enum):
    LAMF = "lamf"
    LAMP = "lamp"
    INL = "inl"
    INR = "inr"
    EXINTRO = "exintro"
    PAIRP = "pairp"
    AXREP = "axrep"
    NOT_VALUE = "not-value"


def value_tag(m: Proof | ErasedProof) -> ValueTag:
    """Classify per the value grammar; ind terms always reduce."""
    match m:
        case LamF() | ELamF():
            return ValueTag.LAMF
        case LamP() | ELamP():
            return ValueTag.LAMP
        case Inl() | EInl():
            return ValueTag.INL
        case Inr() | EInr():
            return ValueTag.INR
        case ExIntro() | EExIntro():
            return ValueTag.EXINTRO
        case PairP() | EPairP():
            return ValueTag.PAIRP
        case AxRep() | EAxRep():
            return ValueTag.AXREP
        case _:
            return ValueTag.NOT_VALUE


def is_value(m: Proof | ErasedProof) -> bool:
    return value_tag(m) is not ValueTag.NOT_VALUE


# ---------------------------------------------------------------------------
# Free variables


def proof_free_vars(m: Proof | ErasedProof) -> tuple[frozenset[str], frozenset[str]]:
    """Free propositional and free first-order variables of a proof term.

    First-order variables occurring in formula annotations and embedded
    terms count as free occurrences; the let binder binds its first-order
    variable in both the annotation and the body.
    """
    match m:
        case PropVar(x) | EPropVar(x):
            return frozenset((x,)), frozenset()
        case App(f, a) | EApp(f, a):
            return _union2(proof_free_vars(f), proof_free_vars(a))
        case LamP(x, dom, body):
            pv, fv = proof_free_vars(body)
            return pv - {x}, fv | sx.free_vars(dom)
        case ELamP(x, body):
            pv, fv = proof_free_vars(body)
            return pv - {x}, fv
        case LamF(a, body) | ELamF(a, body):
            pv, fv = proof_free_vars(body)
            return pv, fv - {a}
        case AppT(f, t) | EAppT(f, t):
            pv, fv = proof_free_vars(f)
            return pv, fv | sx.free_vars(t)
        case PairP(l, r) | EPairP(l, r):
            return _union2(proof_free_vars(l), proof_free_vars(r))
        case Fst(a) | Snd(a) | EFst(a) | ESnd(a) | EMagic(a):
            return proof_free_vars(a)
        case Inl(body, ann) | Inr(body, ann):
            pv, fv = proof_free_vars(body)
            return pv, fv | sx.free_vars(ann)
        case EInl(body) | EInr(body):
            return proof_free_vars(body)
        case Case(s, lx, la, lb, rx, ra, rb):
            spv, sfv = proof_free_vars(s)
            lpv, lfv = proof_free_vars(lb)
            rpv, rfv = proof_free_vars(rb)
            pv = spv | (lpv - {lx}) | (rpv - {rx})
            fv = sfv | lfv | rfv | sx.free_vars(la) | sx.free_vars(ra)
            return pv, fv
        case ECase(s, lx, lb, rx, rb):
            spv, sfv = proof_free_vars(s)
            lpv, lfv = proof_free_vars(lb)
            rpv, rfv = proof_free_vars(rb)
            return spv | (lpv - {lx}) | (rpv - {rx}), sfv | lfv | rfv
        case ExIntro(t, body, ann):
            pv, fv = proof_free_vars(body)
            return pv, fv | sx.free_vars(t) | sx.free_vars(ann)
        case EExIntro(t, body):
            pv, fv = proof_free_vars(body)
            return pv, fv | sx.free_vars(t)
        case Let(a, x, ann, subj, body):
            spv, sfv = proof_free_vars(subj)
            bpv, bfv = proof_free_vars(body)
            return spv | (bpv - {x}), sfv | ((bfv | sx.free_vars(ann)) - {a})
        case ELet(a, x, subj, body):
            spv, sfv = proof_free_vars(subj)
            bpv, bfv = proof_free_vars(body)
            return spv | (bpv - {x}), sfv | (bfv - {a})
        case Magic(arg, ann):
            pv, fv = proof_free_vars(arg)
            return pv, fv | sx.free_vars(ann)
        case Ind(schema, arg, terms):
            pv, fv = proof_free_vars(arg)
            for t in terms:
                fv |= sx.free_vars(t)
            inner = sx.free_vars(schema.body) - ({schema.binder} | set(schema.params))
            return pv, fv | inner
        case EInd(arg):
            return proof_free_vars(arg)
        case AxRep(ax, t, args, arg) | AxProp(ax, t, args, arg):
            pv, fv = proof_free_vars(arg)
            fv |= sx.free_vars(t)
            for u in args:
                fv |= sx.free_vars(u)
            fv |= _schema_free(ax)
            return pv, fv
        case EAxRep(_, arg) | EAxProp(_, arg):
            return proof_free_vars(arg)
    raise TypeError(f"not a proof term: {m!r}")


def _schema_free(ax: AxiomId) -> frozenset[str]:
    from .axioms import ReplAx, SepAx

    match ax:
        case SepAx(z, ps, body):
            return sx.free_vars(body) - ({z} | set(ps))
        case ReplAx(z, y, ps, body):
            return sx.free_vars(body) - ({z, y} | set(ps))
        case _:
            return frozenset()


def _union2(
    a: tuple[frozenset[str], frozenset[str]], b: tuple[frozenset[str], frozenset[str]]
) -> tuple[frozenset[str], frozenset[str]]:
    return a[0] | b[0], a[1] | b[1]
