"""Desk-scale realizability: names, the atomic relations, and the clauses.

Names are hereditarily finite sets of (erased value, name) pairs with
alpha-aware set semantics.  The realizability relation follows the clause
definitions literally, with two finite surrogates for the class-sized
quantifiers: candidate member names come from the names embedded in the
relevant sets (which is exhaustive for the intensional conjuncts), while
hypothesis realizers and instantiating terms come from configured pools,
which is a genuine truncation.  With ``truncated=False`` the pools are
treated as exhaustive and every verdict is decisive; with ``truncated=True``
a universally quantified pool position that merely survives its pool
reports Unknown instead.  Fuel exhaustion always reports Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .proof_ops import canon_key, canon_repr, esubst_prop, esubst_term
from .proofs import (
    EAxRep,
    EExIntro,
    EInl,
    EInr,
    ELamF,
    ELamP,
    EPairP,
    EPropVar,
    ErasedProof,
    is_value,
)
from .reduction import normalize
from .realizers import mk_eqRefl
from .syntax import (
    And,
    Bottom,
    Empty,
    Eq,
    Exists,
    Forall,
    Formula,
    Imp,
    Inac,
    Mem,
    MemI,
    NameRef,
    NwfConst,
    Omega,
    Or,
    PairT,
    PowerT,
    Repl,
    Sep,
    Term,
    UnionT,
    Var,
    succ_term,
)


class UnsupportedFormulaError(Exception):
    pass


# ---------------------------------------------------------------------------
# Lambda-names


@dataclass(frozen=True, eq=False, repr=False)
class LambdaName:
    """A finite set of (erased value, name) pairs, compared up to alpha."""

    entries: tuple[tuple[ErasedProof, "LambdaName"], ...]
    key: tuple = field(default=(), compare=False)

    def __post_init__(self) -> None:
        for label, member in self.entries:
            if not is_value(label):
                raise ValueError("name labels must be erased values")
            if not isinstance(member, LambdaName):
                raise ValueError("name members must be names")
        seen = {}
        for label, member in self.entries:
            seen[(canon_repr(label), member.key)] = (label, member)
        ordered = tuple(seen[k] for k in sorted(seen))
        object.__setattr__(self, "entries", ordered)
        object.__setattr__(self, "key", ("name", tuple(sorted(seen))))

    def __eq__(self, other) -> bool:
        return isinstance(other, LambdaName) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"<name:{self.rank()}:{len(self.entries)}>"

    def members(self) -> tuple["LambdaName", ...]:
        out, seen = [], set()
        for _, m in self.entries:
            if m.key not in seen:
                seen.add(m.key)
                out.append(m)
        return tuple(out)

    def labels(self) -> tuple[ErasedProof, ...]:
        out, seen = [], set()
        for v, _ in self.entries:
            k = canon_repr(v)
            if k not in seen:
                seen.add(k)
                out.append(v)
        return tuple(out)

    def rank(self) -> int:
        return 1 + max((m.rank() for m in self.members()), default=0)

    def has_entry(self, label: ErasedProof, member: "LambdaName") -> bool:
        want = (canon_repr(label), member.key)
        return any((canon_repr(v), m.key) == want for v, m in self.entries)


EMPTY_NAME = LambdaName(())


def name_of(pairs) -> LambdaName:
    return LambdaName(tuple(pairs))


# ---------------------------------------------------------------------------
# Verdicts


@dataclass(frozen=True)
class Verdict:
    status: str  # "realizes" | "fails" | "unknown"
    reason: str = ""

    @property
    def realizes(self) -> bool:
        return self.status == "realizes"

    @property
    def fails(self) -> bool:
        return self.status == "fails"

    @property
    def unknown(self) -> bool:
        return self.status == "unknown"


REALIZES = Verdict("realizes")
FAILS = Verdict("fails")


def unknown(reason: str) -> Verdict:
    return Verdict("unknown", reason)


def _v_all(verdicts, truncated_pool: bool = False) -> Verdict:
    pending = None
    for v in verdicts:
        if v.fails:
            return v
        if v.unknown and pending is None:
            pending = v
    if pending is not None:
        return pending
    if truncated_pool:
        return unknown("universal position exhausted a truncated pool")
    return REALIZES


def _v_any(verdicts, truncated_pool: bool = False) -> Verdict:
    pending = None
    for v in verdicts:
        if v.realizes:
            return v
        if v.unknown and pending is None:
            pending = v
    if pending is not None:
        return pending
    if truncated_pool:
        return unknown("existential position exhausted a truncated pool")
    return FAILS


def _v_implies(hyp: Verdict, conclusion) -> Verdict:
    """conclusion is a thunk, evaluated only when the hypothesis may hold."""
    if hyp.fails:
        return REALIZES
    c = conclusion()
    if hyp.realizes:
        return c
    return REALIZES if c.realizes else unknown(hyp.reason or "hypothesis unknown")


# ---------------------------------------------------------------------------
# Configuration


@dataclass(frozen=True)
class RealizCfg:
    fuel: int = 10**4
    universe: tuple[LambdaName, ...] = (EMPTY_NAME,)
    realizers: tuple[ErasedProof, ...] = ()
    terms: tuple[Term, ...] = (Empty(),)
    truncated: bool = False
    omega_depth: int = 3
    power_cap: int = 6

    def __post_init__(self) -> None:
        if self.fuel <= 0 or not self.universe or not self.terms:
            raise ValueError("configuration pools must be non-empty, fuel positive")


# canonical building blocks ---------------------------------------------------


@lru_cache(maxsize=None)
def identity_value() -> ErasedProof:
    return ELamP("x", EPropVar("x"))


@lru_cache(maxsize=None)
def refl_value() -> ErasedProof:
    """The reflexivity realizer, unfolded once and instantiated: a value
    realizing A = A for every name A."""
    out = normalize(mk_eqRefl(), 100)
    assert out.is_value
    lam = out.result
    assert isinstance(lam, ELamF)
    inst = normalize(esubst_term(lam.body, lam.var, Empty()), 1000)
    assert inst.is_value
    return inst.result


def mem_wrap(label: ErasedProof) -> ErasedProof:
    """inRep([0, <label, refl>]): realizes A in B whenever (label, A) in B."""
    return EAxRep("in", EExIntro(Empty(), EPairP(label, refl_value())))


@lru_cache(maxsize=None)
def generator_labels() -> tuple[ErasedProof, ...]:
    i = identity_value()
    return (i, EInl(i), EInr(i), refl_value())


def default_realizer_pool() -> tuple[ErasedProof, ...]:
    """Eight stock hypothesis realizers covering the shapes the lemmas need."""
    from .realizers import mk_eqSymm

    i = identity_value()
    r = refl_value()
    mid = mem_wrap(i)
    return (
        i,
        EInl(i),
        EInr(i),
        r,
        mid,
        EPairP(mid, r),
        EPairP(r, r),
        mk_eqSymm(),
    )


def enumerate_names(depth: int, limit: int | None = None) -> tuple[LambdaName, ...]:
    """Deterministic name universe of the given depth.

    Depth 0 is just the empty name; each further level adds every singleton
    and doubleton of (generator label, previous-level name) pairs, smallest
    first, truncated to ``limit``.
    """
    labels = generator_labels()
    level: list[LambdaName] = [EMPTY_NAME]
    seen = {EMPTY_NAME.key}
    for _ in range(depth):
        pairs = [(v, m) for m in tuple(level) for v in labels]
        fresh: list[LambdaName] = []
        for v, m in pairs:
            cand = name_of(((v, m),))
            if cand.key not in seen:
                seen.add(cand.key)
                fresh.append(cand)
        for i in range(len(pairs)):
            for j in range(i + 1, len(pairs)):
                cand = name_of((pairs[i], pairs[j]))
                if cand.key not in seen:
                    seen.add(cand.key)
                    fresh.append(cand)
                if limit is not None and len(level) + len(fresh) >= 4 * limit:
                    break
            else:
                continue
            break
        level.extend(fresh)
        if limit is not None and len(level) >= 4 * limit:
            break
    out = tuple(level[:limit]) if limit is not None else tuple(level)
    return out


def default_cfg(
    depth: int = 2,
    fuel: int = 10**4,
    universe_size: int = 24,
    pool_size: int = 8,
    truncated: bool = False,
) -> RealizCfg:
    pool = default_realizer_pool()
    if pool_size < len(pool):
        pool = pool[:pool_size]
    return RealizCfg(
        fuel=fuel,
        universe=enumerate_names(depth, universe_size),
        realizers=pool,
        terms=(Empty(),),
        truncated=truncated,
    )


# ---------------------------------------------------------------------------
# The evaluator


class _Eval:
    def __init__(self, cfg: RealizCfg):
        self.cfg = cfg
        self._norm: dict[object, tuple[str, ErasedProof]] = {}
        self._rel: dict[object, Verdict] = {}
        self._meaning: dict[object, LambdaName] = {}
        self._pools: dict[object, tuple] = {}
        self._running: set[object] = set()

    # -- normalization with memo

    def norm(self, m: ErasedProof) -> tuple[str, ErasedProof]:
        key = canon_key(m)
        hit = self._norm.get(key)
        if hit is None:
            out = normalize(m, self.cfg.fuel)
            hit = (out.status, out.result)
            self._norm[key] = hit
        return hit

    def _value_of(self, m: ErasedProof):
        status, v = self.norm(m)
        if status == "value":
            return v, None
        if status == "fuel":
            return None, unknown("fuel exhausted during normalization")
        return None, FAILS  # stuck terms do not normalize

    # -- relation memoization

    def _memo(self, key, compute) -> Verdict:
        hit = self._rel.get(key)
        if hit is not None:
            return hit
        if key in self._running:
            return unknown("self-referential relation instance")
        self._running.add(key)
        try:
            out = compute()
        finally:
            self._running.discard(key)
        self._rel[key] = out
        return out

    # -- atomic relations

    def mem_i(self, m: ErasedProof, a: LambdaName, b: LambdaName) -> Verdict:
        return self._memo(("memi", canon_key(m), a.key, b.key), lambda: self._mem_i(m, a, b))

    def _mem_i(self, m: ErasedProof, a: LambdaName, b: LambdaName) -> Verdict:
        v, err = self._value_of(m)
        if err is not None:
            return err
        if b.has_entry(v, a):
            return REALIZES
        if b.key == self.omega_name().key:
            # The omega name is inductively defined: arbitrary labels are
            # admitted whenever the base or successor clause accepts them,
            # not only the canonical entries listed in the approximation.
            return self._omega_entry(v, a)
        return FAILS

    def _omega_entry(self, v: ErasedProof, a: LambdaName) -> Verdict:
        key = ("omega-entry", canon_key(v), a.key)
        return self._memo(key, lambda: self._omega_entry_raw(v, a))

    def _omega_entry_raw(self, v: ErasedProof, a: LambdaName) -> Verdict:
        if not (isinstance(v, EAxRep) and v.family == "inf"):
            return FAILS
        nv, err = self._value_of(v.arg)
        if err is not None:
            return err
        if isinstance(nv, EInl):
            return self.eq(nv.body, a, EMPTY_NAME)
        if not isinstance(nv, EInr):
            return FAILS
        ex, err = self._value_of(nv.body)
        if err is not None:
            return err
        if not isinstance(ex, EExIntro):
            return FAILS
        pair, err = self._value_of(ex.body)
        if err is not None:
            return err
        if not isinstance(pair, EPairP):
            return FAILS
        omega = self.omega_name()
        candidates: list[LambdaName] = list(omega.members())
        for extra in (a, *a.members(), *self.cfg.universe):
            if all(extra.key != c.key for c in candidates):
                candidates.append(extra)

        def for_b(b: LambdaName) -> Verdict:
            member = self.mem(pair.left, b, omega)
            if member.fails:
                return member
            succ = self.meaning(succ_term(NameRef(b)), {})
            return _v_all([member, self.eq(pair.right, a, succ)])

        return _v_any(for_b(b) for b in candidates)

    def mem(self, m: ErasedProof, a: LambdaName, b: LambdaName) -> Verdict:
        return self._memo(("mem", canon_key(m), a.key, b.key), lambda: self._mem(m, a, b))

    def _mem(self, m: ErasedProof, a: LambdaName, b: LambdaName) -> Verdict:
        v, err = self._value_of(m)
        if err is not None:
            return err
        if not (isinstance(v, EAxRep) and v.family == "in"):
            return FAILS
        ex, err = self._value_of(v.arg)
        if err is not None:
            return err
        if not isinstance(ex, EExIntro):
            return FAILS
        pair, err = self._value_of(ex.body)
        if err is not None:
            return err
        if not isinstance(pair, EPairP):
            return FAILS
        candidates = list(b.members())
        for extra in (a, *a.members(), *self.cfg.universe):
            if all(extra.key != c.key for c in candidates):
                candidates.append(extra)

        def check_c(c: LambdaName) -> Verdict:
            first = self.mem_i(pair.left, c, b)
            if first.fails:
                return first
            second = self.eq(pair.right, a, c)
            return _v_all([first, second])

        # Membership witnesses must label an entry of b, so the sweep over
        # b's member names is exhaustive for literal entries; the subject
        # and its members are added for the clause-extended omega name.
        return _v_any(check_c(c) for c in candidates)

    def eq(self, m: ErasedProof, a: LambdaName, b: LambdaName) -> Verdict:
        return self._memo(("eq", canon_key(m), a.key, b.key), lambda: self._eq(m, a, b))

    def _eq(self, m: ErasedProof, a: LambdaName, b: LambdaName) -> Verdict:
        v, err = self._value_of(m)
        if err is not None:
            return err
        if not (isinstance(v, EAxRep) and v.family == "eq"):
            return FAILS
        m0, err = self._value_of(v.arg)
        if err is not None:
            return err
        if not isinstance(m0, ELamF):
            return FAILS

        def per_term(t: Term) -> Verdict:
            pair, err = self._value_of(esubst_term(m0.body, m0.var, t))
            if err is not None:
                return err
            if not isinstance(pair, EPairP):
                return FAILS
            o, err = self._value_of(pair.left)
            if err is not None:
                return err
            p, err = self._value_of(pair.right)
            if err is not None:
                return err
            if not isinstance(o, ELamP) or not isinstance(p, ELamP):
                return FAILS
            # Only member names of a or b can have realizable intensional
            # membership hypotheses, so this sweep is exhaustive.
            dpool = list(a.members())
            for extra in b.members():
                if all(extra.key != d.key for d in dpool):
                    dpool.append(extra)

            def direction(lam: ELamP, src: LambdaName, dst: LambdaName, d: LambdaName) -> Verdict:
                pool = self._hyp_pool((src, dst))
                return _v_all(
                    (
                        _v_implies(
                            self.mem_i(n, d, src),
                            lambda n=n: self.mem(esubst_prop(lam.body, lam.var, n), d, dst),
                        )
                        for n in pool
                    ),
                    truncated_pool=self.cfg.truncated,
                )

            return _v_all(
                _v_all([direction(o, a, b, d), direction(p, b, a, d)]) for d in dpool
            )

        return _v_all((per_term(t) for t in self.cfg.terms), truncated_pool=self.cfg.truncated)

    def _hyp_pool(self, names: tuple[LambdaName, ...]) -> tuple[ErasedProof, ...]:
        cache_key = tuple(sorted({n.key for n in names}))
        hit = self._pools.get(cache_key)
        if hit is not None:
            return hit
        out = list(self.cfg.realizers)
        seen = {canon_repr(x) for x in out}
        for nm in names:
            for lab in nm.labels():
                k = canon_repr(lab)
                if k not in seen:
                    seen.add(k)
                    out.append(lab)
        pool = tuple(out)
        self._pools[cache_key] = pool
        return pool

    # -- term meanings

    def meaning(self, t: Term, rho: dict[str, LambdaName]) -> LambdaName:
        key = ("t", self._tkey(t, rho))
        hit = self._meaning.get(key)
        if hit is None:
            hit = self._meaning_of(t, rho)
            self._meaning[key] = hit
        return hit

    def _meaning_of(self, t: Term, rho: dict[str, LambdaName]) -> LambdaName:
        match t:
            case Var(a):
                if a not in rho:
                    raise UnsupportedFormulaError(f"unbound variable {a} in realizability")
                return rho[a]
            case NameRef(payload):
                if not isinstance(payload, LambdaName):
                    raise UnsupportedFormulaError("foreign name constant")
                return payload
            case Empty():
                return EMPTY_NAME
            case Omega():
                return self.omega_name()
            case Inac() | NwfConst():
                raise UnsupportedFormulaError(f"no desk-scale meaning for {t!r}")
            case PairT(l, r):
                al, ar = self.meaning(l, rho), self.meaning(r, rho)
                rv = refl_value()
                return name_of(
                    ((EAxRep("pair", EInl(rv)), al), (EAxRep("pair", EInr(rv)), ar))
                )
            case UnionT(u):
                un = self.meaning(u, rho)
                entries = []
                for v1, w in un.entries:
                    for v2, c in w.entries:
                        witness = EExIntro(
                            Empty(), EPairP(mem_wrap(v1), mem_wrap(v2))
                        )
                        entries.append((EAxRep("union", witness), c))
                return name_of(entries)
            case PowerT(u):
                un = self.meaning(u, rho)
                base = un.entries[: self.cfg.power_cap]
                subsets = [()]
                for e in base:
                    subsets += [s + (e,) for s in subsets]
                entries = []
                for s in subsets:
                    sub = name_of(s)
                    # Any membership proof for the subset is one for the
                    # carrier verbatim, so identity realizes the inclusion.
                    witness = ELamF("a", ELamP("x", EPropVar("x")))
                    entries.append((EAxRep("power", witness), sub))
                return name_of(entries)
            case Sep(z, ps, body, carrier, args):
                un = self.meaning(carrier, rho)
                argnames = tuple(self.meaning(u, rho) for u in args)
                entries = []
                for v1, c in un.entries:
                    inner_rho = dict(rho)
                    inner_rho[z] = c
                    inner_rho.update(zip(ps, argnames))
                    for w in self.cfg.realizers + (refl_value(),):
                        if self.reals(w, body, inner_rho).realizes:
                            entries.append(
                                (EAxRep("sep", EPairP(mem_wrap(v1), w)), c)
                            )
                            break
                return name_of(entries)
            case Repl():
                # Pool-searched; replacement meanings are usually empty at
                # desk scale and that is acceptable for the tests they back.
                return EMPTY_NAME
        raise UnsupportedFormulaError(f"no meaning for term {t!r}")

    def omega_name(self) -> LambdaName:
        key = ("omega", self.cfg.omega_depth)
        hit = self._meaning.get(key)
        if hit is not None:
            return hit
        rv = refl_value()
        entries: list[tuple[ErasedProof, LambdaName]] = []
        numeral_name = EMPTY_NAME
        label = EAxRep("inf", EInl(rv))
        entries.append((label, numeral_name))
        for _ in range(self.cfg.omega_depth - 1):
            succ = self.meaning(succ_term(NameRef(numeral_name)), {})
            witness = EExIntro(Empty(), EPairP(mem_wrap(label), rv))
            label = EAxRep("inf", EInr(witness))
            numeral_name = succ
            entries.append((label, numeral_name))
        out = name_of(entries)
        self._meaning[key] = out
        return out

    def _tkey(self, t: Term, rho: dict[str, LambdaName]):
        match t:
            case Var(a):
                return ("v", rho[a].key) if a in rho else ("v?", a)
            case NameRef(payload):
                return ("n", payload.key if isinstance(payload, LambdaName) else repr(payload))
            case Empty():
                return ("empty",)
            case Omega():
                return ("omega",)
            case Inac(i):
                return ("inac", i)
            case NwfConst(n):
                return ("nwf", n)
            case PairT(l, r):
                return ("pair", self._tkey(l, rho), self._tkey(r, rho))
            case UnionT(u):
                return ("union", self._tkey(u, rho))
            case PowerT(u):
                return ("power", self._tkey(u, rho))
            case Sep(z, ps, body, carrier, args):
                return (
                    "sep",
                    repr(canon(ELamP("_", EPropVar("_")))),  # stable filler
                    repr((z, ps, body)),
                    self._tkey(carrier, rho),
                    tuple(self._tkey(u, rho) for u in args),
                )
            case Repl(z, y, ps, body, carrier, args):
                return (
                    "repl",
                    repr((z, y, ps, body)),
                    self._tkey(carrier, rho),
                    tuple(self._tkey(u, rho) for u in args),
                )
        raise UnsupportedFormulaError(f"no key for term {t!r}")

    def _fkey(self, phi: Formula, rho: dict[str, LambdaName], stack: tuple[str, ...] = ()):
        def tk(t: Term):
            match t:
                case Var(a):
                    for i in range(len(stack) - 1, -1, -1):
                        if stack[i] == a:
                            return ("b", len(stack) - 1 - i)
                    return self._tkey(t, rho)
                case PairT(l, r):
                    return ("pair", tk(l), tk(r))
                case UnionT(u):
                    return ("union", tk(u))
                case PowerT(u):
                    return ("power", tk(u))
                case _:
                    return self._tkey(t, rho)

        match phi:
            case Bottom():
                return ("bot",)
            case MemI(l, r):
                return ("memi", tk(l), tk(r))
            case Mem(l, r):
                return ("mem", tk(l), tk(r))
            case Eq(l, r):
                return ("eq", tk(l), tk(r))
            case And(l, r):
                return ("and", self._fkey(l, rho, stack), self._fkey(r, rho, stack))
            case Or(l, r):
                return ("or", self._fkey(l, rho, stack), self._fkey(r, rho, stack))
            case Imp(l, r):
                return ("imp", self._fkey(l, rho, stack), self._fkey(r, rho, stack))
            case Forall(a, body):
                return ("all", self._fkey(body, rho, stack + (a,)))
            case Exists(a, body):
                return ("ex", self._fkey(body, rho, stack + (a,)))
        raise UnsupportedFormulaError(f"no key for formula {phi!r}")

    # -- the realizability relation proper

    def reals(self, m: ErasedProof, phi: Formula, rho: dict[str, LambdaName]) -> Verdict:
        key = ("reals", canon_key(m), self._fkey(phi, rho))
        return self._memo(key, lambda: self._reals(m, phi, rho))

    def _reals(self, m: ErasedProof, phi: Formula, rho: dict[str, LambdaName]) -> Verdict:
        _reject_inac(phi)
        match phi:
            case Bottom():
                return FAILS
            case MemI(l, r):
                return self.mem_i(m, self.meaning(l, rho), self.meaning(r, rho))
            case Mem(l, r):
                return self.mem(m, self.meaning(l, rho), self.meaning(r, rho))
            case Eq(l, r):
                return self.eq(m, self.meaning(l, rho), self.meaning(r, rho))
            case And(l, r):
                v, err = self._value_of(m)
                if err is not None:
                    return err
                if not isinstance(v, EPairP):
                    return FAILS
                return _v_all([self.reals(v.left, l, rho), self.reals(v.right, r, rho)])
            case Or(l, r):
                v, err = self._value_of(m)
                if err is not None:
                    return err
                if isinstance(v, EInl):
                    return self.reals(v.body, l, rho)
                if isinstance(v, EInr):
                    return self.reals(v.body, r, rho)
                return FAILS
            case Imp(l, r):
                v, err = self._value_of(m)
                if err is not None:
                    return err
                if not isinstance(v, ELamP):
                    return FAILS
                pool = self._hyp_pool(tuple(rho.values()))
                return _v_all(
                    (
                        _v_implies(
                            self.reals(n, l, rho),
                            lambda n=n: self.reals(esubst_prop(v.body, v.var, n), r, rho),
                        )
                        for n in pool
                    ),
                    truncated_pool=self.cfg.truncated,
                )
            case Forall(a, body):
                v, err = self._value_of(m)
                if err is not None:
                    return err
                if not isinstance(v, ELamF):
                    return FAILS

                def inst(nm: LambdaName, t: Term) -> Verdict:
                    rho2 = dict(rho)
                    rho2[a] = nm
                    return self.reals(esubst_term(v.body, v.var, t), body, rho2)

                return _v_all(
                    (inst(nm, t) for nm in self.cfg.universe for t in self.cfg.terms),
                    truncated_pool=self.cfg.truncated,
                )
            case Exists(a, body):
                v, err = self._value_of(m)
                if err is not None:
                    return err
                if not isinstance(v, EExIntro):
                    return FAILS

                def inst(nm: LambdaName) -> Verdict:
                    rho2 = dict(rho)
                    rho2[a] = nm
                    return self.reals(v.body, body, rho2)

                return _v_any(
                    (inst(nm) for nm in self._exists_pool(rho)),
                    truncated_pool=self.cfg.truncated,
                )
        raise UnsupportedFormulaError(f"no clause for {phi!r}")

    def _exists_pool(self, rho: dict[str, LambdaName]) -> tuple[LambdaName, ...]:
        out = list(self.cfg.universe)
        seen = {n.key for n in out}
        for nm in rho.values():
            for cand in (nm, *nm.members()):
                if cand.key not in seen:
                    seen.add(cand.key)
                    out.append(cand)
        return tuple(out)


def _reject_inac(phi: Formula) -> None:
    def bad_term(t: Term) -> bool:
        match t:
            case Inac():
                return True
            case PairT(l, r):
                return bad_term(l) or bad_term(r)
            case UnionT(u) | PowerT(u):
                return bad_term(u)
            case Sep(_, _, body, carrier, args):
                return bad_term(carrier) or any(bad_term(u) for u in args) or bad(body)
            case Repl(_, _, _, body, carrier, args):
                return bad_term(carrier) or any(bad_term(u) for u in args) or bad(body)
            case _:
                return False

    def bad(f: Formula) -> bool:
        match f:
            case Bottom():
                return False
            case MemI(l, r) | Mem(l, r) | Eq(l, r):
                return bad_term(l) or bad_term(r)
            case And(l, r) | Or(l, r) | Imp(l, r):
                return bad(l) or bad(r)
            case Forall(_, body) | Exists(_, body):
                return bad(body)
        return False

    if bad(phi):
        raise UnsupportedFormulaError("inaccessible constants are outside the finite model")


# ---------------------------------------------------------------------------
# Public operations


def reals_mem_i(m: ErasedProof, a: LambdaName, b: LambdaName, fuel: int = 10**4) -> Verdict:
    ev = _Eval(RealizCfg(fuel=fuel))
    return ev.mem_i(m, a, b)


def reals_mem(m: ErasedProof, a: LambdaName, b: LambdaName, cfg: RealizCfg) -> Verdict:
    return _Eval(cfg).mem(m, a, b)


def reals_eq(m: ErasedProof, a: LambdaName, b: LambdaName, cfg: RealizCfg) -> Verdict:
    return _Eval(cfg).eq(m, a, b)


def reals(
    m: ErasedProof,
    phi: Formula,
    rho: dict[str, LambdaName] | None = None,
    cfg: RealizCfg | None = None,
) -> Verdict:
    cfg = cfg if cfg is not None else default_cfg()
    ev = _Eval(cfg)
    return ev.reals(m, phi, dict(rho or {}))


def omega_prime_member(
    entry: tuple[ErasedProof, LambdaName],
    approx: LambdaName,
    fuel: int = 10**4,
) -> Verdict:
    """Check one candidate entry against the base or successor clause.

    The base clause wants an inl whose payload realizes equality with zero;
    the successor clause wants an inr packaging a membership in the given
    approximation together with an equality to the successor of the member.
    """
    label, a = entry
    universe = [EMPTY_NAME, a, approx, *approx.members(), *a.members()]
    dedup: list[LambdaName] = []
    for nm in universe:
        if all(nm.key != o.key for o in dedup):
            dedup.append(nm)
    pool = default_realizer_pool()
    cfg = RealizCfg(fuel=fuel, universe=tuple(dedup), realizers=pool, terms=(Empty(),))
    ev = _Eval(cfg)
    if not (isinstance(label, EAxRep) and label.family == "inf"):
        return FAILS
    v, err = ev._value_of(label.arg)
    if err is not None:
        return err
    if isinstance(v, EInl):
        return ev.eq(v.body, a, EMPTY_NAME)
    if not isinstance(v, EInr):
        return FAILS
    ex, err = ev._value_of(v.body)
    if err is not None:
        return err
    if not isinstance(ex, EExIntro):
        return FAILS
    pair, err = ev._value_of(ex.body)
    if err is not None:
        return err
    if not isinstance(pair, EPairP):
        return FAILS

    def for_b(b: LambdaName) -> Verdict:
        member = ev.mem(pair.left, b, approx)
        if member.fails:
            return member
        succ = ev.meaning(succ_term(NameRef(b)), {})
        return _v_all([member, ev.eq(pair.right, a, succ)])

    return _v_any(for_b(b) for b in (*approx.members(), *dedup))
