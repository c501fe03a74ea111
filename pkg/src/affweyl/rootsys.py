"""Finite root systems in Bourbaki epsilon-coordinates, rank-2 subsystems, circular orders.

Roots are tuples of Fractions; all comparisons are exact.  The circular-order
search implements the hypothesis of the Bruhat-Tits rank-2 criterion: a sequence
b^(1), ..., b^(2k) drawn from the reduced part of the closed subsystem generated
by the two input roots, such that for 1 < i < 2k the roots of that subsystem in
the nonnegative cone spanned by b^(i-1) and b^(i+1) are exactly the three listed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as Q


class RootSystemError(ValueError):
    """Illegal type/rank pair or a root outside its system."""


Root = tuple  # of Fraction


def _v(*coords):
    return tuple(Q(c) for c in coords)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def neg(a):
    return tuple(-x for x in a)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def scale(c, a):
    c = Q(c)
    return tuple(c * x for x in a)


def is_parallel(a, b):
    for i, (x, y) in enumerate(zip(a, b)):
        if x == 0 and y == 0:
            continue
        if x == 0 or y == 0:
            return False
        r = Q(y, 1) / x if isinstance(y, int) else y / x
        return all(r * u == v for u, v in zip(a, b))
    return False


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    roots: frozenset
    simple_roots: tuple
    dim: int

    def __contains__(self, b):
        return tuple(b) in self.roots


ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "BC": lambda n: 2 * n * n + 2 * n,
    "E6": lambda n: 72,
    "E7": lambda n: 126,
    "E8": lambda n: 240,
    "F4": lambda n: 48,
    "G2": lambda n: 12,
}


def _unit(dim, i, c=1):
    out = [Q(0)] * dim
    out[i] = Q(c)
    return tuple(out)


def _classical_roots(label, n):
    roots = set()
    if label == "A":
        dim = n + 1
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    roots.add(add(_unit(dim, i), _unit(dim, j, -1)))
        simple = tuple(add(_unit(dim, i), _unit(dim, i + 1, -1)) for i in range(n))
        return roots, simple, dim
    dim = n
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    roots.add(add(_unit(dim, i, si), _unit(dim, j, sj)))
    if label in ("B", "BC"):
        for i in range(n):
            roots.add(_unit(dim, i))
            roots.add(_unit(dim, i, -1))
    if label in ("C", "BC"):
        for i in range(n):
            roots.add(_unit(dim, i, 2))
            roots.add(_unit(dim, i, -2))
    if label == "B":
        simple = tuple(add(_unit(dim, i), _unit(dim, i + 1, -1)) for i in range(n - 1)) + (_unit(dim, n - 1),)
    elif label == "C":
        simple = tuple(add(_unit(dim, i), _unit(dim, i + 1, -1)) for i in range(n - 1)) + (_unit(dim, n - 1, 2),)
    elif label == "BC":
        simple = tuple(add(_unit(dim, i), _unit(dim, i + 1, -1)) for i in range(n - 1)) + (_unit(dim, n - 1),)
    else:  # D
        simple = tuple(add(_unit(dim, i), _unit(dim, i + 1, -1)) for i in range(n - 1)) + \
            (add(_unit(dim, n - 2), _unit(dim, n - 1)),)
    return roots, simple, dim


def _e8_roots():
    roots = set()
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (1, -1):
                for sj in (1, -1):
                    roots.add(add(_unit(8, i, si), _unit(8, j, sj)))
    half = Q(1, 2)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.add(tuple(half * s for s in signs))
    return roots


def _exceptional(label):
    if label == "G2":
        roots = set()
        for i in range(3):
            for j in range(3):
                if i != j:
                    roots.add(add(_unit(3, i), _unit(3, j, -1)))
        for i in range(3):
            others = [k for k in range(3) if k != i]
            long = add(_unit(3, i, 2), add(_unit(3, others[0], -1), _unit(3, others[1], -1)))
            roots.add(long)
            roots.add(neg(long))
        simple = (_v(1, -1, 0), _v(-2, 1, 1))
        return roots, simple, 3
    if label == "F4":
        roots = set()
        for i in range(4):
            roots.add(_unit(4, i))
            roots.add(_unit(4, i, -1))
            for j in range(i + 1, 4):
                for si in (1, -1):
                    for sj in (1, -1):
                        roots.add(add(_unit(4, i, si), _unit(4, j, sj)))
        half = Q(1, 2)
        for signs in itertools.product((1, -1), repeat=4):
            roots.add(tuple(half * s for s in signs))
        simple = (_v(0, 1, -1, 0), _v(0, 0, 1, -1), _v(0, 0, 0, 1),
                  tuple(Q(1, 2) * s for s in (1, -1, -1, -1)))
        return roots, simple, 4
    e8 = _e8_roots()
    a1 = tuple(Q(1, 2) * s for s in (1, -1, -1, -1, -1, -1, -1, 1))
    a2 = _v(1, 1, 0, 0, 0, 0, 0, 0)
    a3 = _v(-1, 1, 0, 0, 0, 0, 0, 0)
    a4 = _v(0, -1, 1, 0, 0, 0, 0, 0)
    a5 = _v(0, 0, -1, 1, 0, 0, 0, 0)
    a6 = _v(0, 0, 0, -1, 1, 0, 0, 0)
    a7 = _v(0, 0, 0, 0, -1, 1, 0, 0)
    a8 = _v(0, 0, 0, 0, 0, -1, 1, 0)
    if label == "E8":
        return e8, (a1, a2, a3, a4, a5, a6, a7, a8), 8
    if label == "E7":
        simple = (a1, a2, a3, a4, a5, a6, a7)
    else:
        simple = (a1, a2, a3, a4, a5, a6)
    span = _span_closure(simple)
    roots = {r for r in e8 if _in_subspace(r, span)}
    return roots, simple, 8


def _span_closure(vectors):
    """Row-reduced exact basis of the span."""
    basis = []
    for v in vectors:
        v = list(v)
        for b in basis:
            piv = next(i for i, x in enumerate(b) if x != 0)
            if v[piv] != 0:
                c = v[piv] / b[piv]
                v = [x - c * y for x, y in zip(v, b)]
        if any(x != 0 for x in v):
            basis.append(v)
    return basis


def _in_subspace(v, basis):
    v = list(v)
    for b in basis:
        piv = next(i for i, x in enumerate(b) if x != 0)
        if v[piv] != 0:
            c = v[piv] / b[piv]
            v = [x - c * y for x, y in zip(v, b)]
    return all(x == 0 for x in v)


def build_root_system(type_label, rank):
    """Full root set in epsilon-coordinates with the standard simple roots."""
    label = type_label.upper().replace("_", "")
    if label in ("E6", "E7", "E8", "F4", "G2"):
        expected_rank = int(label[1])
        if rank not in (None, expected_rank):
            raise RootSystemError(f"{label} has rank {expected_rank}, not {rank}")
        roots, simple, dim = _exceptional(label)
        rank = expected_rank
    elif label in ("A", "B", "C", "D", "BC"):
        minimum = {"A": 1, "B": 2, "C": 2, "D": 3, "BC": 1}[label]
        if rank is None or rank < minimum:
            raise RootSystemError(f"type {label} requires rank >= {minimum}")
        roots, simple, dim = _classical_roots(label, rank)
    else:
        raise RootSystemError(f"unknown root system type {type_label!r}")
    system = RootSystem(label, rank, frozenset(roots), simple, dim)
    assert len(system.roots) == ROOT_COUNTS[label](rank)
    assert all(neg(r) in system.roots for r in system.roots)
    return system


def reflect(b, c):
    """Image of c under the reflection in b: c - <c, b^vee> b."""
    bb = dot(b, b)
    if bb == 0:
        raise RootSystemError("reflection in the zero vector")
    coef = 2 * dot(c, b) / bb
    return tuple(x - coef * y for x, y in zip(c, b))


def coroot(b):
    """b^vee = 2b / (b, b) as a vector."""
    bb = dot(b, b)
    return tuple(2 * x / bb for x in b)


def star_reduction(b, system):
    """b/2 if b/2 is a root, else b."""
    b = tuple(b)
    if b not in system.roots:
        raise RootSystemError("root not in the system")
    half = scale(Q(1, 2), b)
    return half if half in system.roots else b


def reduced_members(roots):
    """Non-divisible members: r with r/2 not in the set."""
    rootset = set(roots)
    return {r for r in rootset if scale(Q(1, 2), r) not in rootset}


@dataclass(frozen=True)
class Rank2Subsystem:
    ambient: RootSystem
    members: frozenset
    basis_pair: tuple

    def reduced(self):
        return reduced_members(self.members)


def rank2_closed_subsystem(system, b, bprime):
    """All ambient roots in the rational span of b and b'."""
    b, bprime = tuple(b), tuple(bprime)
    if b not in system.roots or bprime not in system.roots:
        raise RootSystemError("basis roots must lie in the ambient system")
    if is_parallel(b, bprime):
        raise RootSystemError("basis roots must be linearly independent")
    basis = _span_closure([b, bprime])
    members = frozenset(r for r in system.roots if _in_subspace(r, basis))
    return Rank2Subsystem(system, members, (b, bprime))


def additive_closure(members, seed):
    """Smallest symmetric subset containing the seed, closed under ambient sums."""
    out = set()
    for r in seed:
        out.add(r)
        out.add(neg(r))
    grew = True
    while grew:
        grew = False
        pairs = list(out)
        for x in pairs:
            for y in pairs:
                s = add(x, y)
                if any(c != 0 for c in s) and s in members and s not in out:
                    out.add(s)
                    grew = True
    return out


def _plane_coords(u, v, x):
    """(a, c) with x = a u + c v, or None if the 2x2 Gram system is singular/inconsistent."""
    g11, g12, g22 = dot(u, u), dot(u, v), dot(v, v)
    det = g11 * g22 - g12 * g12
    if det == 0:
        return None
    r1, r2 = dot(x, u), dot(x, v)
    a = (r1 * g22 - r2 * g12) / det
    c = (g11 * r2 - g12 * r1) / det
    if tuple(a * p + c * q for p, q in zip(u, v)) != tuple(x):
        return None
    return a, c


def _in_cone(u, v, x):
    """Whether x lies in Q>=0 u + Q>=0 v (edges included)."""
    if is_parallel(u, v):
        same = dot(u, v) > 0
        if not is_parallel(u, x):
            return False
        if same:
            return dot(x, u) > 0
        return True  # opposite rays span the whole line
    co = _plane_coords(u, v, x)
    return co is not None and co[0] >= 0 and co[1] >= 0


def circular_order_condition(reduced, seq):
    """The rank-2 criterion hypothesis for every interior index of seq."""
    n = len(seq)
    for i in range(1, n - 1):
        cone = {r for r in reduced if _in_cone(seq[i - 1], seq[i + 1], r)}
        if cone != {seq[i - 1], seq[i], seq[i + 1]}:
            return False
    return True


def circular_order(subsystem, b, bprime):
    """Circular order b^(1)..b^(2k) with b^(1) = b, b^(k) = b', or None.

    The sequence exhausts the reduced part of the closed subsystem generated by
    +-b, +-b' inside the given rank-2 subsystem; the search is exhaustive with
    pruning, and ties are broken by the lexicographically least valid order.
    """
    b, bprime = tuple(b), tuple(bprime)
    red_all = subsystem.reduced()
    if b not in red_all or bprime not in red_all:
        raise RootSystemError("basis roots must be reduced members of the subsystem")
    if is_parallel(b, bprime):
        raise RootSystemError("basis roots must be linearly independent")
    generated = additive_closure(subsystem.members, [b, bprime])
    R = sorted(reduced_members(generated))
    n = len(R)
    if n % 2:
        return None
    k = n // 2
    rest = [r for r in R if r != b]
    best = None

    def extend(seq, remaining):
        nonlocal best
        i = len(seq)
        if i >= 3:
            # interior condition at index i-2 is decided once index i-1 is placed
            a, mid, c = seq[i - 3], seq[i - 2], seq[i - 1]
            cone = {r for r in R if _in_cone(a, c, r)}
            if cone != {a, mid, c}:
                return
        if i == n:
            cand = list(seq)
            if best is None or cand < best:
                best = cand
            return
        for idx, r in enumerate(remaining):
            if i == k - 1 and r != bprime:
                continue
            if i != k - 1 and r == bprime:
                continue
            seq.append(r)
            extend(seq, remaining[:idx] + remaining[idx + 1:])
            seq.pop()

    extend([b], rest)
    return best


def orders_equivalent(found, expected):
    """Equality modulo cyclic rotation, reversal and global negation."""
    if found is None or expected is None:
        return found is None and expected is None
    if len(found) != len(expected):
        return False
    variants = set()
    for base in (list(expected), [neg(r) for r in expected]):
        for seq in (base, base[::-1]):
            for shift in range(len(seq)):
                variants.add(tuple(seq[shift:] + seq[:shift]))
    return tuple(found) in variants


# ---------------------------------------------------------------------------
# the case table of rank-2 configurations checked by the braid criterion


@dataclass(frozen=True)
class CircularCase:
    label: str
    ambient_type: str
    ambient_rank: int
    b: tuple
    bprime: tuple
    expected: tuple | None  # None = provably no circular order


def _a2_like(b, bprime):
    return (b, add(b, bprime), bprime, neg(b), neg(add(b, bprime)), neg(bprime))


_E6_B = tuple(-Q(1, 2) * s for s in (1, 1, 1, 1, 1, -1, -1, 1))
_E7_B = _v(0, 0, 0, 0, 0, 0, 1, -1)
_E7_BP = tuple(Q(1, 2) * s for s in (1, -1, -1, -1, -1, -1, -1, 1))
_E8_B = _v(0, 0, 0, 0, 0, 0, -1, -1)
_G2_B = _v(1, 1, -2)
_G2_BP = _v(-2, 1, 1)

CIRCULAR_CASES = (
    CircularCase("A_n", "A", 3, _v(-1, 0, 0, 1), _v(0, 0, 1, -1),
                 (_v(-1, 0, 0, 1), _v(-1, 0, 1, 0), _v(0, 0, 1, -1),
                  _v(1, 0, 0, -1), _v(1, 0, -1, 0), _v(0, 0, -1, 1))),
    CircularCase("A_n", "A", 3, _v(-1, 0, 0, 1), _v(1, -1, 0, 0),
                 (_v(-1, 0, 0, 1), _v(0, -1, 0, 1), _v(1, -1, 0, 0),
                  _v(1, 0, 0, -1), _v(0, 1, 0, -1), _v(-1, 1, 0, 0))),
    CircularCase("B_n", "B", 3, _v(-1, -1, 0), _v(0, 1, -1),
                 (_v(-1, -1, 0), _v(-1, 0, -1), _v(0, 1, -1),
                  _v(1, 1, 0), _v(1, 0, 1), _v(0, -1, 1))),
    CircularCase("B_n", "B", 3, _v(-1, -1, 0), _v(1, -1, 0), None),
    CircularCase("B-C_n", "C", 3, _v(-1, -1, 0), _v(0, 1, -1),
                 (_v(-1, -1, 0), _v(-1, 0, -1), _v(0, 1, -1),
                  _v(1, 1, 0), _v(1, 0, 1), _v(0, -1, 1))),
    CircularCase("B-C_n", "C", 3, _v(-1, -1, 0), _v(1, -1, 0), None),
    CircularCase("C_n", "C", 2, _v(-2, 0), _v(1, -1),
                 (_v(-2, 0), _v(-1, -1), _v(0, -2), _v(1, -1),
                  _v(2, 0), _v(1, 1), _v(0, 2), _v(-1, 1))),
    CircularCase("C-B_n", "B", 2, _v(-1, 0), _v(1, -1),
                 (_v(-1, 0), _v(-1, -1), _v(0, -1), _v(1, -1),
                  _v(1, 0), _v(1, 1), _v(0, 1), _v(-1, 1))),
    CircularCase("C-BC_n^III", "BC", 2, _v(-1, 0), _v(1, -1),
                 (_v(-1, 0), _v(-1, -1), _v(0, -1), _v(1, -1),
                  _v(1, 0), _v(1, 1), _v(0, 1), _v(-1, 1))),
    CircularCase("D_n", "D", 4, _v(-1, -1, 0, 0), _v(0, 1, -1, 0),
                 (_v(-1, -1, 0, 0), _v(-1, 0, -1, 0), _v(0, 1, -1, 0),
                  _v(1, 1, 0, 0), _v(1, 0, 1, 0), _v(0, -1, 1, 0))),
    CircularCase("E6", "E6", 6, _E6_B, _v(1, 1, 0, 0, 0, 0, 0, 0),
                 _a2_like(_E6_B, _v(1, 1, 0, 0, 0, 0, 0, 0))),
    CircularCase("E7", "E7", 7, _E7_B, _E7_BP, _a2_like(_E7_B, _E7_BP)),
    CircularCase("E8", "E8", 8, _E8_B, _v(0, 0, 0, 0, 0, -1, 1, 0),
                 _a2_like(_E8_B, _v(0, 0, 0, 0, 0, -1, 1, 0))),
    CircularCase("F4", "F4", 4, _v(-1, -1, 0, 0), _v(0, 1, -1, 0),
                 (_v(-1, -1, 0, 0), _v(-1, 0, -1, 0), _v(0, 1, -1, 0),
                  _v(1, 1, 0, 0), _v(1, 0, 1, 0), _v(0, -1, 1, 0))),
    CircularCase("F4^1", "F4", 4, _v(-1, -1, 0, 0), _v(0, 1, -1, 0),
                 (_v(-1, -1, 0, 0), _v(-1, 0, -1, 0), _v(0, 1, -1, 0),
                  _v(1, 1, 0, 0), _v(1, 0, 1, 0), _v(0, -1, 1, 0))),
    CircularCase("G2", "G2", 2, _G2_B, _G2_BP, _a2_like(_G2_B, _G2_BP)),
    CircularCase("G2^1", "G2", 2, _G2_B, _G2_BP, _a2_like(_G2_B, _G2_BP)),
)


def run_circular_case(case):
    """Run one table case; returns (found order or None, matches-golden bool)."""
    system = build_root_system(case.ambient_type, case.ambient_rank)
    sub = rank2_closed_subsystem(system, case.b, case.bprime)
    found = circular_order(sub, case.b, case.bprime)
    if found is not None:
        assert circular_order_condition(
            sorted(reduced_members(additive_closure(sub.members, [case.b, case.bprime]))), found)
    ok = orders_equivalent(found, list(case.expected) if case.expected else None)
    return found, ok
