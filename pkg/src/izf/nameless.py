"""Nameless (de Bruijn) views of terms and formulas.

Independent of the named kernel operations on purpose: the conversions here
back the oracle tests for substitution, alpha equivalence and free-variable
computation.  Nameless trees are plain nested tuples so they compare with
``==``.
"""

from __future__ import annotations

from . import syntax as s

Nameless = tuple


def to_nameless(x: s.Tree, stack: tuple[str, ...] = ()) -> Nameless:
    """Convert to a tuple tree; bound vars become levels, free vars names."""

    def var(a: str) -> Nameless:
        for i in range(len(stack) - 1, -1, -1):
            if stack[i] == a:
                return ("bound", len(stack) - 1 - i)
        return ("free", a)

    match x:
        case s.Var(a):
            return var(a)
        case s.Empty():
            return ("empty",)
        case s.Omega():
            return ("omega",)
        case s.Inac(i):
            return ("inac", i)
        case s.NwfConst(n):
            return ("nwf", n)
        case s.NameRef(p):
            return ("nameref", p)
        case s.PairT(l, r):
            return ("pair", to_nameless(l, stack), to_nameless(r, stack))
        case s.UnionT(t):
            return ("union", to_nameless(t, stack))
        case s.PowerT(t):
            return ("power", to_nameless(t, stack))
        case s.Sep(z, ps, body, carrier, args):
            inner = stack + (z,) + ps
            return (
                "sep",
                len(ps),
                to_nameless(body, inner),
                to_nameless(carrier, stack),
                tuple(to_nameless(u, stack) for u in args),
            )
        case s.Repl(z, y, ps, body, carrier, args):
            inner = stack + (z, y) + ps
            return (
                "repl",
                len(ps),
                to_nameless(body, inner),
                to_nameless(carrier, stack),
                tuple(to_nameless(u, stack) for u in args),
            )
        case s.Bottom():
            return ("bot",)
        case s.MemI(l, r):
            return ("memi", to_nameless(l, stack), to_nameless(r, stack))
        case s.Mem(l, r):
            return ("mem", to_nameless(l, stack), to_nameless(r, stack))
        case s.Eq(l, r):
            return ("eq", to_nameless(l, stack), to_nameless(r, stack))
        case s.And(l, r):
            return ("and", to_nameless(l, stack), to_nameless(r, stack))
        case s.Or(l, r):
            return ("or", to_nameless(l, stack), to_nameless(r, stack))
        case s.Imp(l, r):
            return ("imp", to_nameless(l, stack), to_nameless(r, stack))
        case s.Forall(a, body):
            return ("forall", to_nameless(body, stack + (a,)))
        case s.Exists(a, body):
            return ("exists", to_nameless(body, stack + (a,)))
    raise TypeError(f"not a term or formula: {x!r}")


def nameless_free_vars(n: Nameless) -> frozenset[str]:
    """Occurrence scan over a nameless tree."""
    tag = n[0]
    if tag == "free":
        return frozenset((n[1],))
    if tag in ("bound", "empty", "omega", "inac", "nwf", "nameref", "bot"):
        return frozenset()
    if tag in ("sep", "repl"):
        out = nameless_free_vars(n[2]) | nameless_free_vars(n[3])
        for u in n[4]:
            out |= nameless_free_vars(u)
        return out
    out: frozenset[str] = frozenset()
    for child in n[1:]:
        if isinstance(child, tuple) and child and isinstance(child[0], str):
            out |= nameless_free_vars(child)
    return out


def nameless_subst(n: Nameless, a: str, sub: Nameless) -> Nameless:
    """Substitute a closed-under-levels tree for the free name ``a``.

    The substituted tree must not itself contain bound levels (callers pass
    to_nameless of a standalone term), so no shifting is required; this is
    exactly why the nameless route makes a trustworthy oracle.
    """
    tag = n[0]
    if tag == "free":
        return sub if n[1] == a else n
    if tag in ("bound", "empty", "omega", "inac", "nwf", "nameref", "bot"):
        return n
    if tag in ("sep", "repl"):
        return (
            tag,
            n[1],
            nameless_subst(n[2], a, sub),
            nameless_subst(n[3], a, sub),
            tuple(nameless_subst(u, a, sub) for u in n[4]),
        )
    head = [tag]
    for child in n[1:]:
        head.append(nameless_subst(child, a, sub))
    return tuple(head)


def readback(n: Nameless, stack: tuple[str, ...] = ()) -> s.Tree:
    """Rebuild a named tree with canonical binder names x0, x1, ..."""

    def bind(k: int) -> tuple[str, ...]:
        return tuple(f"x{len(stack) + i}" for i in range(k))

    tag = n[0]
    if tag == "free":
        return s.Var(n[1])
    if tag == "bound":
        return s.Var(stack[len(stack) - 1 - n[1]])
    if tag == "empty":
        return s.Empty()
    if tag == "omega":
        return s.Omega()
    if tag == "inac":
        return s.Inac(n[1])
    if tag == "nwf":
        return s.NwfConst(n[1])
    if tag == "nameref":
        return s.NameRef(n[1])
    if tag == "pair":
        return s.PairT(readback(n[1], stack), readback(n[2], stack))
    if tag == "union":
        return s.UnionT(readback(n[1], stack))
    if tag == "power":
        return s.PowerT(readback(n[1], stack))
    if tag == "sep":
        names = bind(1 + n[1])
        return s.Sep(
            names[0],
            names[1:],
            readback(n[2], stack + names),
            readback(n[3], stack),
            tuple(readback(u, stack) for u in n[4]),
        )
    if tag == "repl":
        names = bind(2 + n[1])
        return s.Repl(
            names[0],
            names[1],
            names[2:],
            readback(n[2], stack + names),
            readback(n[3], stack),
            tuple(readback(u, stack) for u in n[4]),
        )
    if tag == "bot":
        return s.Bottom()
    if tag in ("memi", "mem", "eq"):
        cls = {"memi": s.MemI, "mem": s.Mem, "eq": s.Eq}[tag]
        return cls(readback(n[1], stack), readback(n[2], stack))
    if tag in ("and", "or", "imp"):
        cls = {"and": s.And, "or": s.Or, "imp": s.Imp}[tag]
        return cls(readback(n[1], stack), readback(n[2], stack))
    if tag in ("forall", "exists"):
        (name,) = bind(1)
        cls = {"forall": s.Forall, "exists": s.Exists}[tag]
        return cls(name, readback(n[1], stack + (name,)))
    raise ValueError(f"bad nameless tag: {tag}")
