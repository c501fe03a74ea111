"""Affine root data with value sets, the alcove, and the affine Weyl group engine.

Elements of the affine Weyl group are stored as pairs (translation, finite part)
realizing the semi-direct decomposition; words are derived views.  Lengths are
computed by exact hyperplane counting against the wall sets of the datum, with a
Cayley-graph BFS available as an independent oracle in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q

from . import rootsys
from .rootsys import RootSystemError, build_root_system, coroot, dot, neg


class AffineError(ValueError):
    """Configuration or domain error in the affine layer."""


# ---------------------------------------------------------------------------
# arithmetic progressions of rationals (value sets, wall positions)


@dataclass(frozen=True)
class Progression:
    """shift + step * Z."""

    step: Q
    shift: Q

    def contains(self, x):
        return ((x - self.shift) / self.step).denominator == 1

    def min_positive(self):
        k = math.floor(-self.shift / self.step)
        x = self.shift + self.step * k
        while x <= 0:
            x += self.step
        return x

    def count_strictly_between(self, a, b):
        if a > b:
            a, b = b, a
        lo = math.floor((a - self.shift) / self.step) + 1
        hi = math.ceil((b - self.shift) / self.step) - 1
        count = hi - lo + 1
        # endpoints landing exactly on the progression were not counted; interior only
        return max(0, count)

    def as_json(self):
        return {"step": str(self.step), "shift": str(self.shift)}


@dataclass(frozen=True)
class WallSet:
    """Union of progressions: the wall positions in one root direction."""

    parts: tuple

    def min_positive(self):
        return min(p.min_positive() for p in self.parts)

    def count_strictly_between(self, a, b):
        positions = set()
        if a == b:
            return 0
        lo, hi = min(a, b), max(a, b)
        for p in self.parts:
            k0 = math.floor((lo - p.shift) / p.step) + 1
            x = p.shift + p.step * k0
            while x < hi:
                if x > lo:
                    positions.add(x)
                x += p.step
        return len(positions)

    def contains(self, x):
        return any(p.contains(x) for p in self.parts)

    def difference_step(self):
        """Generator of the group generated by differences of wall positions."""
        gens = []
        for p in self.parts:
            gens.append(p.step)
            gens.append(p.shift - self.parts[0].shift)
        g = Q(0)
        for x in gens:
            if x != 0:
                g = abs(x) if g == 0 else _qgcd(g, abs(x))
        return g


def _qgcd(a, b):
    num = math.gcd(a.numerator * b.denominator, b.numerator * a.denominator)
    return Q(num, a.denominator * b.denominator)


# ---------------------------------------------------------------------------
# Iwahori-Weyl elements: (translation, finite part) pairs


def _mat_vec(m, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _mat_id(n):
    return tuple(tuple(Q(1) if i == j else Q(0) for j in range(n)) for i in range(n))


def _mat_transpose(m):
    n = len(m)
    return tuple(tuple(m[j][i] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class IWElement:
    """(lam, w0) acting on V by v -> w0 v + lam; product (l,w)(l',w') = (l + w l', w w')."""

    lam: tuple
    w0: tuple

    def __mul__(self, other):
        return IWElement(tuple(a + b for a, b in zip(self.lam, _mat_vec(self.w0, other.lam))),
                         _mat_mul(self.w0, other.w0))

    def inverse(self):
        winv = _mat_transpose(self.w0)  # finite parts are orthogonal
        return IWElement(tuple(-x for x in _mat_vec(winv, self.lam)), winv)

    def apply(self, v):
        return tuple(a + b for a, b in zip(_mat_vec(self.w0, v), self.lam))

    def apply_affine_root(self, grad, off):
        """Image of the affine root (grad, off) under this element."""
        g = _mat_vec(self.w0, grad)
        return g, off - dot(g, self.lam)

    def is_identity(self):
        n = len(self.lam)
        return all(x == 0 for x in self.lam) and self.w0 == _mat_id(n)

    @staticmethod
    def identity(dim):
        return IWElement(tuple(Q(0) for _ in range(dim)), _mat_id(dim))

    @staticmethod
    def translation(lam):
        return IWElement(tuple(Q(x) for x in lam), _mat_id(len(lam)))


def reflection_element(grad, off, dim):
    """The affine reflection in the wall {grad(v) + off = 0}."""
    cv = coroot(grad)
    w0 = tuple(tuple((Q(1) if i == j else Q(0)) - grad[j] * cv[i] for j in range(dim)) for i in range(dim))
    lam = tuple(-off * c for c in cv)
    return IWElement(lam, w0)


# ---------------------------------------------------------------------------
# the datum


@dataclass(frozen=True)
class AffineInput:
    """What the affine layer needs to know about a group: family, size, ramification."""

    family: str  # SL | Sp | SO_odd | SO_even | U
    n: int       # matrix size
    ext: str     # none | tame | wild  (tame = alpha 0, wild = alpha nonzero)


class AffineDatum:
    def __init__(self, system, gamma_prime, simple_affine, label, ext):
        self.system = system
        self.gamma_prime = gamma_prime          # root -> Progression (Gamma'_b)
        self.simple_affine = tuple(simple_affine)  # (gradient, offset); finite simples first
        self.rank = len(system.simple_roots)
        self.label = label
        self.ext = ext
        self.dim = system.dim
        self.positive = tuple(sorted(r for r in rootsys.reduced_members(system.roots)
                                     if _is_positive(r)))
        walls = {}
        for b in self.positive:
            parts = [gamma_prime[b]]
            double = tuple(2 * c for c in b)
            if double in system.roots:
                g2 = gamma_prime[double]
                parts.append(Progression(g2.step / 2, g2.shift / 2))
            walls[b] = WallSet(tuple(parts))
        self.walls = walls
        self._reflections = tuple(reflection_element(g, off, self.dim) for g, off in self.simple_affine)
        self._barycenter = self._compute_barycenter()
        self._validate()
        self._translation_gens = tuple(tuple(walls[b].difference_step() * c for c in coroot(b))
                                       for b in self.positive)
        self._word_cache = {}
        self._coxeter = None

    # -- construction helpers
    def _constraint_rows(self):
        rows = []
        for g, off in self.simple_affine:
            rows.append((g, off))
        return rows

    def _compute_barycenter(self):
        rows = self._constraint_rows()
        extra = []
        if self.system.type_label == "A":
            extra.append((tuple(Q(1) for _ in range(self.dim)), Q(0)))
        if self.system.type_label == "G2":
            extra.append((tuple(Q(1) for _ in range(self.dim)), Q(0)))
        vertices = []
        k = len(rows)
        for skip in range(k):
            eqs = [rows[i] for i in range(k) if i != skip] + extra
            sol = _solve_affine(eqs, self.dim)
            if sol is None:
                raise AffineError("alcove walls are degenerate")
            vertices.append(sol)
        n = len(vertices)
        return tuple(sum(v[i] for v in vertices) / n for i in range(self.dim))

    def _validate(self):
        bary = self._barycenter
        for g, off in self.simple_affine:
            if dot(g, bary) + off <= 0:
                raise AffineError(f"alcove is empty: wall {g}+{off} fails at the barycenter")
        for b in self.positive:
            val = dot(b, bary)
            if not (0 < val < self.walls[b].min_positive()):
                raise AffineError(f"barycenter crosses the first wall in direction {b}")
        for g, off in self.simple_affine:
            key = g if g in self.gamma_prime else None
            if key is None or not self.gamma_prime[g].contains(off):
                raise AffineError(f"offset {off} of {g} is not in its value set")

    # -- basic accessors
    def simple_names(self):
        r = self.rank
        return tuple(f"s{i + 1}" for i in range(r)) + ("s0",)

    def reflection(self, i):
        return self._reflections[i]

    def identity(self):
        return IWElement.identity(self.dim)

    def barycenter(self):
        return self._barycenter

    # -- lengths and words
    def length(self, w):
        x0 = self._barycenter
        x1 = w.apply(x0)
        total = 0
        for b in self.positive:
            total += self.walls[b].count_strictly_between(dot(b, x0), dot(b, x1))
        return total

    def left_descents(self, w):
        lw = self.length(w)
        return [i for i in range(len(self._reflections))
                if self.length(self._reflections[i] * w) < lw]

    def reduced_word(self, w):
        word = []
        cur = w
        cap = self.length(w) + 1
        while not cur.is_identity():
            if len(word) >= cap:
                raise AffineError("descent walk did not terminate; not in the affine Weyl group?")
            ds = self.left_descents(cur)
            if not ds:
                raise AffineError("element admits no descent; not in the affine Weyl group?")
            i = ds[0]
            word.append(i)
            cur = self._reflections[i] * cur
        return tuple(word)

    def reduced_words(self, w):
        """Iterate over every reduced word of w, each exactly once."""
        if w.is_identity():
            yield ()
            return
        for i in self.left_descents(w):
            for rest in self.reduced_words(self._reflections[i] * w):
                yield (i,) + rest

    def from_word(self, word):
        out = self.identity()
        for i in word:
            out = out * self._reflections[i]
        return out

    def in_affine_weyl_group(self, w):
        """Membership: finite part arbitrary Weyl, translation in the wall lattice."""
        lam = w.lam
        # remove the finite-part contribution by peeling descents; cheaper: lattice test
        return _lattice_member(self._translation_gens, lam) if w.w0 == _mat_id(self.dim) \
            else self._element_reachable(w)

    def _element_reachable(self, w):
        try:
            word = self.reduced_word(w)
        except AffineError:
            return False
        return self.from_word(word) == w

    def ball(self, radius):
        """BFS ball of the Cayley graph: {element: distance}."""
        dist = {self.identity(): 0}
        frontier = [self.identity()]
        for d in range(1, radius + 1):
            new = []
            for w in frontier:
                for s in self._reflections:
                    cand = w * s
                    if cand not in dist:
                        dist[cand] = d
                        new.append(cand)
            frontier = new
        return dist

    # -- Coxeter matrix
    def coxeter_matrix(self):
        if self._coxeter is not None:
            return self._coxeter
        k = len(self._reflections)
        m = [[1 if i == j else None for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                prod = self._reflections[i] * self._reflections[j]
                cur = prod
                order = None
                for step in range(1, 13):
                    if cur.is_identity():
                        order = step
                        break
                    cur = cur * prod
                m[i][j] = m[j][i] = order
        self._coxeter = tuple(tuple(row) for row in m)
        return self._coxeter

    def decompose(self, w):
        return w.lam, w.w0

    def recompose(self, lam, w0):
        return IWElement(tuple(Q(x) for x in lam), w0)

    def as_json(self):
        return {
            "echelonnage": self.label,
            "simple_affine": [{"name": nm, "gradient": [str(c) for c in g], "offset": str(off)}
                              for nm, (g, off) in zip(self.simple_names(), self.simple_affine)],
            "coxeter_matrix": [[(x if x is not None else "inf") for x in row]
                               for row in self.coxeter_matrix()],
            "value_sets": {" ".join(str(c) for c in b): self.gamma_prime[b].as_json()
                           for b in sorted(self.gamma_prime)},
        }


def _is_positive(root):
    for c in root:
        if c != 0:
            return c > 0
    return False


def _solve_affine(eqs, dim):
    """Solve grad . v + off = 0 systems exactly; None if singular/inconsistent."""
    rows = [[*g, Q(off)] for g, off in eqs]
    mat = [row[:] for row in rows]
    piv_cols = []
    r = 0
    for c in range(dim):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
        if r == len(mat):
            break
    for i in range(r, len(mat)):
        if mat[i][dim] != 0:
            return None
    if r < dim:
        return None
    sol = [Q(0)] * dim
    for i, c in enumerate(piv_cols):
        sol[c] = -mat[i][dim]
    return tuple(sol)


def _lattice_member(gens, target):
    """Is target an integer combination of the generator vectors (all rational)?"""
    denom = 1
    for v in list(gens) + [target]:
        for x in v:
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
    work = [[int(x * denom) for x in v] for v in gens]
    t = [int(x * denom) for x in target]
    m = len(t)
    used = []
    for col in range(m):
        idxs = [i for i in range(len(work)) if i not in used and work[i][col] != 0]
        if not idxs:
            if t[col] != 0:
                return False
            continue
        # euclidean reduction to a single nonzero entry in this column
        while len(idxs) > 1:
            idxs.sort(key=lambda i: abs(work[i][col]))
            i0, i1 = idxs[0], idxs[1]
            q = work[i1][col] // work[i0][col]
            work[i1] = [a - q * b for a, b in zip(work[i1], work[i0])]
            idxs = [i for i in idxs if work[i][col] != 0]
        piv = work[idxs[0]]
        if t[col] % piv[col] != 0:
            return False
        q = t[col] // piv[col]
        t = [a - q * b for a, b in zip(t, piv)]
        used.append(idxs[0])
    return all(x == 0 for x in t)


# ---------------------------------------------------------------------------
# family construction


def _affine_root_on_wall(system, gp, direction, position, toward_origin):
    """The affine root vanishing on {direction . v = position}, positive on the alcove side.

    Prefers the non-divisible label: gradient +-direction if the offset fits its
    value set, else +-(2 direction).
    """
    g = neg(direction) if toward_origin else direction
    k = position if toward_origin else -position
    if g in system.roots and gp[g].contains(k):
        return (g, k)
    g2 = tuple(2 * c for c in g)
    if g2 in system.roots and gp[g2].contains(2 * k):
        return (g2, 2 * k)
    raise AffineError(f"no affine root carries the wall {direction} = {position}")


def build_affine_datum(inp: AffineInput) -> AffineDatum:
    """Assemble the affine datum for a supported family; offsets minimal positive in Gamma'."""
    fam, n, ext = inp.family, inp.n, inp.ext
    half = Q(1, 2)
    quarter = Q(1, 4)
    one = Q(1)
    if fam in ("SL", "Sp", "SO_odd", "SO_even") and ext != "none":
        raise AffineError(f"family {fam} is split; extension data must be 'none'")
    if fam == "SL":
        if n < 2:
            raise AffineError("SL needs n >= 2")
        system = build_root_system("A", n - 1)
        gp = {r: Progression(one, Q(0)) for r in system.roots}
        label = f"A_{n - 1}"
    elif fam == "Sp":
        if n % 2 or n < 4:
            raise AffineError("Sp needs even n >= 4")
        system = build_root_system("C", n // 2)
        gp = {rt: Progression(one, Q(0)) for rt in system.roots}
        label = f"C_{n // 2}"
    elif fam == "SO_odd":
        if n % 2 == 0 or n < 5:
            raise AffineError("SO_odd needs odd n >= 5")
        system = build_root_system("B", (n - 1) // 2)
        gp = {rt: Progression(one, Q(0)) for rt in system.roots}
        label = f"B_{(n - 1) // 2}"
    elif fam == "SO_even":
        if n % 2 or n < 6:
            raise AffineError("SO_even needs even n >= 6")
        system = build_root_system("D", n // 2)
        gp = {rt: Progression(one, Q(0)) for rt in system.roots}
        label = f"D_{n // 2}"
    elif fam == "U":
        if ext not in ("tame", "wild"):
            raise AffineError("unitary family needs ramified extension data (tame or wild)")
        if n % 2 == 0:
            r = n // 2
            if r < 2:
                raise AffineError("even unitary needs n >= 4")
            system = build_root_system("C", r)
            gp = {}
            for rt in system.roots:
                if sum(1 for c in rt if c != 0) == 1:
                    gp[rt] = Progression(one, Q(0))       # gradients 2e_i
                else:
                    gp[rt] = Progression(half, Q(0))      # gradients e_i +- e_j
            label = f"B-C_{r}"
        else:
            r = (n - 1) // 2
            if r < 1:
                raise AffineError("odd unitary needs n >= 3")
            system = build_root_system("BC", r)
            gp = {}
            for rt in system.roots:
                nz = [abs(c) for c in rt if c != 0]
                if len(nz) == 2:
                    gp[rt] = Progression(half, Q(0))
                elif nz == [1]:
                    gp[rt] = Progression(half, Q(0)) if ext == "tame" else Progression(half, quarter)
                else:  # 2e_i
                    gp[rt] = Progression(one, half) if ext == "tame" else Progression(one, Q(0))
            label = f"C-BC_{r}^III"
    else:
        raise AffineError(f"unsupported family {fam!r}")

    positive = sorted(r for r in rootsys.reduced_members(system.roots) if _is_positive(r))
    walls = {}
    for b in positive:
        parts = [gp[b]]
        double = tuple(2 * c for c in b)
        if double in system.roots:
            g2 = gp[double]
            parts.append(Progression(g2.step / 2, g2.shift / 2))
        walls[b] = WallSet(tuple(parts))

    # provisional interior point: a strictly dominant ray scaled inside the first walls
    dim = system.dim
    w = tuple(Q(dim - i) for i in range(dim))
    if system.type_label == "A":
        mean = sum(w) / dim
        w = tuple(x - mean for x in w)
    mu = min(walls[b].min_positive() / dot(b, w) for b in positive) / 2
    x0 = tuple(mu * c for c in w)

    # the extra facet: the unique direction whose first wall touches the alcove closure
    extra = None
    for b in positive:
        mb = walls[b].min_positive()
        y = tuple(c * mb / dot(b, x0) for c in x0)
        ok = True
        for c in positive:
            if c == b:
                continue
            val = dot(c, y)
            if not (0 < val < walls[c].min_positive()):
                ok = False
                break
        if ok:
            if extra is not None:
                raise AffineError("extra alcove facet is not unique")
            extra = _affine_root_on_wall(system, gp, b, mb, toward_origin=True)
    if extra is None:
        raise AffineError("no extra alcove facet found")

    simple_affine = []
    for s in system.simple_roots:
        simple_affine.append(_affine_root_on_wall(system, gp, s, Q(0), toward_origin=False))
    simple_affine.append(extra)
    return AffineDatum(system, gp, tuple(simple_affine), label, ext)


# ---------------------------------------------------------------------------
# diagram automorphisms, orbits, and the bijection onto descended simple reflections


def validate_diagram_map(datum, perm):
    """perm: tuple, index permutation of the simple affine roots preserving the Coxeter matrix."""
    k = len(datum.simple_affine)
    if sorted(perm) != list(range(k)):
        raise AffineError("diagram map is not a permutation of the simple reflections")
    m = datum.coxeter_matrix()
    for i in range(k):
        for j in range(k):
            if m[perm[i]][perm[j]] != m[i][j]:
                raise AffineError("diagram map does not preserve the Coxeter matrix")


def sigma_orbits(datum, perm):
    """Orbits of the diagram map, each with a finiteness flag for its parabolic."""
    validate_diagram_map(datum, perm)
    k = len(perm)
    seen = [False] * k
    out = []
    for i in range(k):
        if seen[i]:
            continue
        orbit = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            orbit.append(j)
            seen[j] = True
            j = perm[j]
        finite = len(orbit) < k  # proper subsets of an irreducible affine diagram are finite
        out.append((tuple(sorted(orbit)), finite))
    return out


def parabolic_elements(datum, subset, cap=20000):
    """All elements of the parabolic generated by the given simple reflections, with lengths."""
    gens = [datum.reflection(i) for i in subset]
    dist = {datum.identity(): 0}
    frontier = [datum.identity()]
    while frontier:
        new = []
        for w in frontier:
            for s in gens:
                cand = w * s
                if cand not in dist:
                    dist[cand] = dist[w] + 1
                    new.append(cand)
                    if len(dist) > cap:
                        raise AffineError("parabolic subgroup exceeded enumeration cap (infinite?)")
        frontier = new
    return dist


def lusztig_bijection(datum, perm):
    """Map each finite sigma-orbit X to the longest element of its parabolic.

    Returns records {orbit, element, word, order_two, sigma_invariant}; the set of
    elements is the set of simple reflections of the fixed-point Coxeter group.
    """
    records = []
    for orbit, finite in sigma_orbits(datum, perm):
        if not finite:
            continue
        elements = parabolic_elements(datum, orbit)
        top = max(elements.values())
        longest = [w for w, d in elements.items() if d == top]
        if len(longest) != 1:
            raise AffineError("parabolic longest element is not unique")
        w = longest[0]
        word = datum.reduced_word(w)
        sigma_word = tuple(perm[i] for i in word)
        records.append({
            "orbit": orbit,
            "element": w,
            "word": word,
            "order_two": (w * w).is_identity(),
            "sigma_invariant": datum.from_word(sigma_word) == w,
        })
    return records
