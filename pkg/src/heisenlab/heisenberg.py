"""The Heisenberg group on triples [x, y, z] with x, y in F_p^n, z in F_p.

Group law: [x,y,z][x',y',z'] = [x+x', y+y', z+z'+x.y'].  The group has
order p^(2n+1); its center is the z-line, every noncentral conjugacy
class is a coset of the center labelled by (x, y), and two elements
commute iff the symplectic form of their vector parts vanishes.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from . import fp
from .guard import check_cap


class HeisElem:
    """Immutable group element [x, y, z] of H_{2n+1}(p)."""

    __slots__ = ("x", "y", "z", "p")

    def __init__(self, x, y, z, p):
        fp.check_modulus(p)
        x = fp.reduce_vec(x, p)
        y = fp.reduce_vec(y, p)
        if len(x) != len(y):
            raise ValueError(f"x and y length mismatch: {len(x)} vs {len(y)}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", int(z) % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("HeisElem is immutable")

    @property
    def n(self):
        return len(self.x)

    def _check_compatible(self, other):
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")

    def __mul__(self, other):
        self._check_compatible(other)
        p = self.p
        return HeisElem(
            fp.vec_add(self.x, other.x, p),
            fp.vec_add(self.y, other.y, p),
            (self.z + other.z + fp.vec_dot(self.x, other.y, p)) % p,
            p,
        )

    def inverse(self):
        p = self.p
        return HeisElem(
            fp.vec_neg(self.x, p),
            fp.vec_neg(self.y, p),
            (-self.z + fp.vec_dot(self.x, self.y, p)) % p,
            p,
        )

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        acc = identity(self.n, self.p)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def commutes(self, other):
        self._check_compatible(other)
        return fp.symplectic(self.x, self.y, other.x, other.y, self.p) == 0

    def commutator(self, other):
        """a^-1 b^-1 a b, always central: [0, 0, x.b - y.a]."""
        self._check_compatible(other)
        s = fp.symplectic(self.x, self.y, other.x, other.y, self.p)
        n = self.n
        return HeisElem((0,) * n, (0,) * n, s, self.p)

    def is_central(self):
        return not any(self.x) and not any(self.y)

    def is_identity(self):
        return self.is_central() and self.z == 0

    def __eq__(self, other):
        if not isinstance(other, HeisElem):
            return NotImplemented
        return (self.p == other.p and self.x == other.x
                and self.y == other.y and self.z == other.z)

    def __hash__(self):
        return hash((self.x, self.y, self.z, self.p))

    def __repr__(self):
        return f"HeisElem({list(self.x)}, {list(self.y)}, {self.z}, p={self.p})"


def identity(n, p):
    return HeisElem((0,) * n, (0,) * n, 0, p)


def class_of(a):
    """Conjugacy class label: ('z', z) for central, ('xy', x, y) otherwise."""
    if a.is_central():
        return ("z", a.z)
    return ("xy", a.x, a.y)


def enumerate_group(n, p, cap=None):
    """All p^(2n+1) elements, lexicographic on the flattened (x, y, z) tuple."""
    fp.check_modulus(p)
    size = p ** (2 * n + 1)
    check_cap(size, cap, f"H_{2 * n + 1}({p})")
    out = []
    for digits in product(range(p), repeat=2 * n + 1):
        out.append(HeisElem(digits[:n], digits[n:2 * n], digits[2 * n], p))
    return out


def center(n, p):
    return [HeisElem((0,) * n, (0,) * n, z, p) for z in range(p)]


def mulclose(gens, cap=None):
    """Closure of a set of elements under the group product."""
    gens = list(gens)
    els = set(gens)
    frontier = list(els)
    while frontier:
        new = []
        for a in gens:
            for b in frontier:
                c = a * b
                if c not in els:
                    els.add(c)
                    new.append(c)
                    check_cap(len(els), cap, "subgroup closure")
        frontier = new
    return els


@dataclass(frozen=True)
class SubgroupReport:
    order: int
    center_size: int
    derived_equals_center: bool
    exponent_p: bool
    is_extraspecial: bool


def _xy_matrix(elements):
    return np.array([el.x + el.y for el in elements], dtype=np.int64)


def _symplectic_gram(V, p, n):
    """Gram matrix of the symplectic form over rows of V = [x | y]."""
    X, Y = V[:, :n], V[:, n:]
    return (X @ Y.T - Y @ X.T) % p


def subgroup_generated(gens, n=None, p=None, include_center=True, cap=None):
    """Subgroup generated by gens (plus the center when asked), with a
    structure report computed by plain enumeration.

    Returns (elements frozenset, SubgroupReport).
    """
    gens = list(gens)
    if gens:
        n, p = gens[0].n, gens[0].p
        for g in gens:
            gens[0]._check_compatible(g)
    elif n is None or p is None:
        raise ValueError("empty generating set needs explicit n and p")
    seed = list(gens)
    if include_center:
        seed.extend(center(n, p))
    if not seed:
        seed = [identity(n, p)]
    els = mulclose(seed, cap=cap)
    report = _subgroup_report(sorted(els, key=lambda e: (e.x, e.y, e.z)), n, p)
    return frozenset(els), report


def _subgroup_report(elements, n, p):
    order = len(elements)
    V = _xy_matrix(elements)
    gram = _symplectic_gram(V, p, n)
    central_mask = ~gram.any(axis=1)
    center_size = int(central_mask.sum())
    central_set = {elements[i] for i in np.flatnonzero(central_mask)}
    # Commutators are central, so the derived subgroup is the subgroup of the
    # z-line generated by the symplectic values, i.e. trivial or all of it.
    nonabelian = bool(gram.any())
    zero = (0,) * n
    if nonabelian:
        derived = {HeisElem(zero, zero, t, p) for t in range(p)}
    else:
        derived = {identity(n, p)}
    derived_equals_center = derived == central_set
    exponent_p = all((g ** p).is_identity() for g in elements)
    is_extraspecial = (center_size == p and derived_equals_center
                       and exponent_p and nonabelian)
    return SubgroupReport(order, center_size, derived_equals_center,
                          exponent_p, is_extraspecial)


@dataclass(frozen=True)
class EtCheck:
    commuting_pairs: int
    order: int
    classes: int
    holds: bool

    @property
    def commuting_probability(self):
        return Fraction(self.commuting_pairs, self.order ** 2)


def conjugacy_classes(elements):
    """Partition a finite group into conjugation orbits, seed by seed,
    with a visited set.  No class formulas are used."""
    elements = list(elements)
    pool = set(elements)
    seen = set()
    classes = []
    for a in elements:
        if a in seen:
            continue
        orbit = frozenset(g.inverse() * a * g for g in elements)
        if not orbit <= pool:
            raise ValueError("elements are not closed under conjugation")
        seen |= orbit
        classes.append(orbit)
    return classes


def commuting_pair_count(elements):
    """Ordered commuting pairs, (a, a) included."""
    els = list(elements)
    if els and isinstance(els[0], HeisElem):
        n, p = els[0].n, els[0].p
        V = _xy_matrix(els)
        gram = _symplectic_gram(V, p, n)
        return int((gram == 0).sum())
    count = 0
    for a in els:
        for b in els:
            if a * b == b * a:
                count += 1
    return count


def erdos_turan_check(elements):
    """e(G) counted from ordered commuting pairs vs |G| times the number of
    conjugation orbits; returns the two counts and whether e = |G| c."""
    els = list(elements)
    e = commuting_pair_count(els)
    c = len(conjugacy_classes(els))
    return EtCheck(e, len(els), c, e == len(els) * c)
