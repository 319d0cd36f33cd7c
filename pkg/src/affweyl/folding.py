"""Pinned automorphisms, coinvariant lattices and folded root data.

Coinvariants L_I = L / <(1-g)x> are presented through an exact Smith normal
form, so torsion comes out as honest invariant factors and the projection map
is materialized (with a section).  Folding produces the based root datum of
the neutral fixed-point group on the torsion-free quotient of the
character-side coinvariants: each orbit of simple roots contributes one
folded simple root, with the coroot given by the orbit sum of coroots
(doubled when two orbit members sum to a root, which is the nonreduced case;
the flag is recorded and the Coxeter realization of the nonreduced restricted
system is deferred to the wall tables of the affine layer).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import FoldingError, PairingError
from .linalg import (dot, identity, mat_inverse_int, mat_mul, mat_transpose,
                     mat_vec, vec_add, vec_sub)
from .root_data import BasedRootDatum
from .smith import smith_normal_form, verify_decomposition


@dataclass(frozen=True)
class PinnedAction:
    """A finite group of based-root-datum automorphisms.

    ``generators`` are character-side lattice matrices.  Validation checks
    the pinning conditions: each generator permutes the roots, preserves the
    set of simple roots, and is compatible with the coroot bijection.
    """

    datum: BasedRootDatum
    generators: tuple
    name: str = ""

    MAX_ORDER = 10000

    def __post_init__(self):
        self._validate()

    @cached_property
    def cochar_generators(self):
        """Cocharacter-side matrices (contragredient of the generators)."""
        return tuple(mat_transpose(mat_inverse_int(g)) for g in self.generators)

    @cached_property
    def group_elements(self):
        """All character-side matrices of the generated (finite) group."""
        ident = identity(self.datum.rank)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for m in frontier:
                for g in self.generators:
                    p = mat_mul(g, m)
                    if p not in seen:
                        seen.add(p)
                        nxt.append(p)
            frontier = nxt
            if len(seen) > self.MAX_ORDER:
                raise FoldingError("automorphism group exceeded the hard cap")
        return tuple(sorted(seen))

    @property
    def order(self):
        return len(self.group_elements)

    @cached_property
    def cochar_elements(self):
        return tuple(mat_transpose(mat_inverse_int(g)) for g in self.group_elements)

    @cached_property
    def simple_permutations(self):
        """Each generator as a permutation of the simple slots."""
        datum = self.datum
        perms = []
        for g in self.generators:
            perm = []
            for i in datum.simples:
                img = mat_vec(g, datum.roots[i])
                j = datum.root_index[img]
                perm.append(datum.simples.index(j))
            perms.append(tuple(perm))
        return tuple(perms)

    def is_trivial(self):
        return all(g == identity(self.datum.rank) for g in self.generators)

    def _validate(self):
        datum = self.datum
        rootset = set(datum.roots)
        simpleset = {datum.roots[i] for i in datum.simples}
        for g in self.generators:
            if len(g) != datum.rank:
                raise FoldingError("generator has wrong size")
            try:
                ginv_t = mat_transpose(mat_inverse_int(g))
            except ValueError:
                raise FoldingError("generator is not a lattice automorphism")
            for i, r in enumerate(datum.roots):
                img = mat_vec(g, r)
                if img not in rootset:
                    raise FoldingError("generator does not permute the roots")
                j = datum.root_index[img]
                if mat_vec(ginv_t, datum.coroots[i]) != datum.coroots[j]:
                    raise FoldingError("generator incompatible with the coroot bijection")
            for i in datum.simples:
                if mat_vec(g, datum.roots[i]) not in simpleset:
                    raise FoldingError("generator does not preserve the simple roots")
        _ = self.group_elements


def trivial_action(datum):
    return PinnedAction(datum, (identity(datum.rank),), name="trivial")


@dataclass(frozen=True, eq=False)
class CoinvariantClass:
    """Element of a coinvariant lattice: free coordinates plus torsion."""

    lattice: object
    free: tuple
    torsion: tuple

    def __add__(self, other):
        return self.lattice.make(vec_add(self.free, other.free),
                                 vec_add(self.torsion, other.torsion))

    def __sub__(self, other):
        return self.lattice.make(vec_sub(self.free, other.free),
                                 vec_sub(self.torsion, other.torsion))

    def __neg__(self):
        return self.lattice.make(tuple(-x for x in self.free),
                                 tuple(-x for x in self.torsion))

    def scale(self, c):
        return self.lattice.make(tuple(c * x for x in self.free),
                                 tuple(c * x for x in self.torsion))

    def is_zero(self):
        return not any(self.free) and not any(self.torsion)

    def __eq__(self, other):
        return (isinstance(other, CoinvariantClass)
                and self.lattice is other.lattice
                and self.free == other.free and self.torsion == other.torsion)

    def __hash__(self):
        return hash((id(self.lattice), self.free, self.torsion))

    def __repr__(self):
        if self.torsion:
            return f"[{','.join(map(str, self.free))};{','.join(map(str, self.torsion))}]"
        return f"[{','.join(map(str, self.free))}]"


class CoinvariantLattice:
    """Quotient of Z^n by the column span of a relation matrix.

    Presented as Z^free_rank + sum Z/d_i via Smith normal form; ``project``
    and ``lift`` realize the projection and a section of it.
    """

    def __init__(self, ambient_rank, relation_columns):
        self.ambient_rank = n = ambient_rank
        cols = [tuple(c) for c in relation_columns]
        if not cols:
            cols = [(0,) * n]
        self.relation_matrix = tuple(
            tuple(c[i] for c in cols) for i in range(n))
        s, u, v = smith_normal_form(self.relation_matrix)
        if not verify_decomposition(self.relation_matrix, s, u, v):
            raise FoldingError("smith decomposition failed to verify")
        self.smith = s
        self.u = u
        self.uinv = mat_inverse_int(u)
        self.v = v
        self.vinv = mat_inverse_int(v)
        diag = [s[i][i] if i < len(s[0]) else 0 for i in range(n)]
        self.diagonal = tuple(diag)
        self.torsion_positions = tuple(i for i, d in enumerate(diag) if d > 1)
        self.free_positions = tuple(i for i, d in enumerate(diag) if d == 0)
        self.torsion = tuple(diag[i] for i in self.torsion_positions)
        self.free_rank = len(self.free_positions)
        self.relation_rank = sum(1 for d in diag if d != 0)

    def make(self, free, torsion):
        torsion = tuple(t % d for t, d in zip(torsion, self.torsion))
        return CoinvariantClass(self, tuple(free), torsion)

    def zero(self):
        return self.make((0,) * self.free_rank, (0,) * len(self.torsion))

    def project(self, mu):
        """Class of an ambient lattice vector."""
        if len(mu) != self.ambient_rank:
            raise PairingError("vector has wrong ambient dimension")
        y = mat_vec(self.u, mu)
        free = tuple(y[i] for i in self.free_positions)
        torsion = tuple(y[i] % self.diagonal[i] for i in self.torsion_positions)
        return self.make(free, torsion)

    def lift(self, cls):
        """A representative in the ambient lattice (section of project)."""
        y = [0] * self.ambient_rank
        for k, i in enumerate(self.free_positions):
            y[i] = cls.free[k]
        for k, i in enumerate(self.torsion_positions):
            y[i] = cls.torsion[k]
        return mat_vec(self.uinv, tuple(y))

    def act(self, ambient_matrix, cls):
        """Induced action of a relation-preserving ambient matrix."""
        return self.project(mat_vec(ambient_matrix, self.lift(cls)))

    def relation_column(self, j):
        return tuple(self.relation_matrix[i][j] for i in range(self.ambient_rank))

    @property
    def num_relations(self):
        return len(self.relation_matrix[0]) if self.ambient_rank else 0


def coinvariants(action, side="cocharacters"):
    """Coinvariant lattice of the (co)character lattice under the action."""
    if side not in ("characters", "cocharacters"):
        raise PairingError("side must be 'characters' or 'cocharacters'")
    mats = action.generators if side == "characters" else action.cochar_generators
    n = action.datum.rank
    cols = []
    for g in mats:
        for k in range(n):
            e = tuple(1 if i == k else 0 for i in range(n))
            col = vec_sub(e, mat_vec(g, e))
            if any(col):
                cols.append(col)
    return CoinvariantLattice(n, cols)


def invariant_pairing(action, cls, chi, side="cocharacters"):
    """<cls, chi> for an invariant character chi; independent of the lift.

    The value is computed on one representative and re-checked on a second
    one, so ill-posed inputs fail loudly rather than silently.
    """
    mats = action.generators if side == "cocharacters" else action.cochar_generators
    for g in mats:
        if mat_vec(g, chi) != tuple(chi):
            raise PairingError("character is not invariant under the action")
    lat = cls.lattice
    rep = lat.lift(cls)
    val = dot(rep, chi)
    if lat.num_relations:
        rep2 = vec_add(rep, lat.relation_column(0))
        if dot(rep2, chi) != val:
            raise PairingError("pairing depends on the representative")
    return val


def average_lift(action, cls, side="cocharacters"):
    """The invariant rational representative of a coinvariant class."""
    mats = action.cochar_elements if side == "cocharacters" else action.group_elements
    rep = cls.lattice.lift(cls)
    n = len(rep)
    acc = [Fraction(0)] * n
    for g in mats:
        img = mat_vec(g, rep)
        for i in range(n):
            acc[i] += img[i]
    order = len(mats)
    return tuple(x / order for x in acc)


@dataclass(frozen=True, eq=False)
class FoldedDatum:
    """Based root datum of the neutral fixed-point group.

    ``datum`` lives on the torsion-free quotient of the character-side
    coinvariants; ``component_group`` is the torsion (the character group of
    the component group of the fixed maximal torus); ``simple_torsion``
    records the torsion coordinates of the projected simple roots, which is
    what lifts folded weights back to the full coinvariant lattice.
    """

    action: PinnedAction
    char_coinv: CoinvariantLattice
    datum: BasedRootDatum
    orbit_map: tuple
    simple_torsion: tuple
    component_group: tuple
    nonreduced: bool

    def project_char(self, chi):
        return self.char_coinv.project(chi)

    def free_part(self, chi):
        return self.char_coinv.project(chi).free


def _simple_orbits(action):
    """Orbits of the action on the simple slots, ordered by least member."""
    nslots = len(action.datum.simples)
    perms = action.simple_permutations
    seen = set()
    orbits = []
    for s in range(nslots):
        if s in seen:
            continue
        orbit = {s}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for p in perms:
                    y = p[x]
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    return tuple(orbits)


def fold(action, characteristic=0):
    """Folded based root datum of a pinned action.

    The construction needs the order of the acting group to be invertible;
    ``characteristic`` declares the characteristic exponent of the intended
    base field (0 by default) and incompatible actions are rejected.
    """
    if characteristic and action.order % characteristic == 0:
        raise FoldingError(
            "action order is divisible by the declared characteristic")
    datum = action.datum
    coinv = coinvariants(action, "characters")
    f = coinv.free_rank

    def free_of(chi):
        return coinv.project(chi).free

    def torsion_of(chi):
        return coinv.project(chi).torsion

    # a functional phi on the ambient character lattice that kills the
    # relations descends to the free quotient; solve c . project = phi
    def descend_functional(phi):
        c = []
        for k in range(f):
            basis_cls = coinv.make(tuple(1 if i == k else 0 for i in range(f)),
                                   (0,) * len(coinv.torsion))
            c.append(dot(phi, coinv.lift(basis_cls)))
        c = tuple(c)
        for k in range(datum.rank):
            e = tuple(1 if i == k else 0 for i in range(datum.rank))
            if dot(c, free_of(e)) != dot(phi, e):
                raise FoldingError("coroot functional does not descend")
        return c

    orbits = _simple_orbits(action)
    rootset = set(datum.roots)
    folded_simple_roots = []
    folded_simple_coroots = []
    simple_torsion = []
    orbit_map = []
    nonreduced = False
    for oi, orbit in enumerate(orbits):
        slot_roots = [datum.roots[datum.simples[s]] for s in orbit]
        doubling = any(
            vec_add(a, b) in rootset
            for i, a in enumerate(slot_roots) for b in slot_roots[i + 1:])
        rep = slot_roots[0]
        bar = free_of(rep)
        for other in slot_roots[1:]:
            if free_of(other) != bar or torsion_of(other) != torsion_of(rep):
                raise FoldingError("orbit members project to different classes")
        phi = (0,) * datum.rank
        for s in orbit:
            phi = vec_add(phi, datum.coroots[datum.simples[s]])
        if doubling:
            phi = tuple(2 * x for x in phi)
            nonreduced = True
        cvec = descend_functional(phi)
        if dot(cvec, bar) != 2:
            raise FoldingError("folded <coroot, root> != 2")
        folded_simple_roots.append(bar)
        folded_simple_coroots.append(cvec)
        simple_torsion.append(torsion_of(rep))
        orbit_map.append((orbit, oi))

    # close the folded simples under their reflections to get all roots
    pairs = {(r, cv) for r, cv in zip(folded_simple_roots, folded_simple_coroots)}
    frontier = list(pairs)
    while frontier:
        nxt = []
        for (r, cv) in frontier:
            for sr, scv in zip(folded_simple_roots, folded_simple_coroots):
                img_r = vec_sub(r, tuple(dot(scv, r) * x for x in sr))
                img_cv = vec_sub(cv, tuple(dot(cv, sr) * x for x in scv))
                if (img_r, img_cv) not in pairs:
                    pairs.add((img_r, img_cv))
                    nxt.append((img_r, img_cv))
        frontier = nxt
        if len(pairs) > 4 * len(datum.roots) + 8:
            raise FoldingError("folded root closure does not terminate")
    if f == 0 and folded_simple_roots:
        raise FoldingError("folded simple root in rank zero")
    ordered = sorted(pairs)
    roots = tuple(p[0] for p in ordered)
    coroots = tuple(p[1] for p in ordered)
    simples = tuple(ordered.index((r, cv)) for r, cv in
                    zip(folded_simple_roots, folded_simple_coroots))
    folded = BasedRootDatum(f, roots, coroots, simples,
                            name=(datum.name + "-folded") if datum.name else "folded")
    return FoldedDatum(
        action=action,
        char_coinv=coinv,
        datum=folded,
        orbit_map=tuple(orbit_map),
        simple_torsion=tuple(simple_torsion),
        component_group=coinv.torsion,
        nonreduced=nonreduced,
    )


def pi0_fixed_torus(action):
    """Invariant factors of pi_0 of the fixed torus (character group)."""
    return coinvariants(action, "characters").torsion
