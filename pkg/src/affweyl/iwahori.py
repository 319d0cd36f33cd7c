"""Iwahori-Weyl groups: translations by coinvariants, extended by the
relative Weyl group, with the quasi-Coxeter structure.

Geometry conventions
--------------------
The apartment is V = (free quotient of the cocharacter coinvariants) x R.
A translation t^mu acts by v -> v + mu (free part; torsion classes act
trivially and have length zero).  The chamber cut out by the positive roots
is *opposite* to the chamber containing the base alcove, i.e. the base
alcove sits on the antidominant side of the origin.  With these choices
l(t^mu) = <mu_dom, 2 rho> and the minimal-length coset representative
formulas come out with the signs used throughout.

Wall data
---------
Hyperplane families are stored as integer covectors c with walls
{v : c(v) in Z}; a declared table entry (direction a, stride s) is
normalized to c = a/s.  Split groups get one family per positive root with
stride 1.  For twisted groups the strides are standard declared data; they
are validated against lattice preservation, Weyl symmetry of the
arrangement, and integrality of the wall reflections, so a wrong table
fails at construction time rather than corrupting lengths.

Groups and elements are immutable once constructed; the length and word
caches are write-once with idempotent fills, so sharing across threads is
safe.
"""

from fractions import Fraction
from functools import cached_property
from itertools import product as iproduct
from math import gcd

from .errors import (EchelonnageError, ElementParseError,
                     InfiniteGroupError, InternalInvariantError)
from .folding import CoinvariantLattice, average_lift, coinvariants
from .linalg import (dot, identity, mat_mul, mat_vec, nullspace_rational,
                     primitive_covector, solve_rational, vec_add, vec_scale,
                     vec_sub)


class RelWeylElement:
    """Element of the relative Weyl group W0 (invariant absolute elements)."""

    __slots__ = ("group", "index", "abs_mat", "free_mat", "word")

    def __init__(self, group, index, abs_mat, free_mat, word):
        self.group = group
        self.index = index
        self.abs_mat = abs_mat
        self.free_mat = free_mat
        self.word = word

    @property
    def length(self):
        return len(self.word)

    def __mul__(self, other):
        prod = mat_mul(self.free_mat, other.free_mat)
        res = self.group.by_free[prod]
        return res

    def inverse(self):
        from .linalg import mat_inverse_int
        return self.group.by_free[mat_inverse_int(self.free_mat)]

    def is_identity(self):
        return not self.word

    def __eq__(self, other):
        return isinstance(other, RelWeylElement) and self.group is other.group \
            and self.index == other.index

    def __hash__(self):
        return hash((id(self.group), self.index))

    def __repr__(self):
        return "w0[%s]" % ",".join(str(i + 1) for i in self.word)


class RelWeylGroup:
    """The relative Weyl group: invariant elements of the absolute one,
    acting on the coinvariant lattice."""

    def __init__(self, action, coinv, simple_line_covectors, line_covectors):
        self.action = action
        self.coinv = coinv
        absgrp = action.datum.weyl
        invariant = []
        for w in absgrp.elements:
            if all(mat_mul(w.mat, g) == mat_mul(g, w.mat)
                   for g in action.cochar_generators):
                invariant.append(w)
        f = coinv.free_rank
        basis = [coinv.make(tuple(1 if i == k else 0 for i in range(f)),
                            (0,) * len(coinv.torsion)) for k in range(f)]

        def free_matrix(absmat):
            cols = [coinv.act(absmat, b).free for b in basis]
            return tuple(tuple(col[i] for col in cols) for i in range(f))

        mats = {}
        for w in invariant:
            fm = free_matrix(w.mat)
            if fm in mats:
                raise InternalInvariantError(
                    "relative Weyl group does not act faithfully on coinvariants")
            mats[fm] = w.mat
        self._line_covectors = tuple(line_covectors)
        lengths = {fm: self._inversions(fm) for fm in mats}

        # simple generators: reflections attached to the simple relative lines
        simple_fms = []
        for cov in simple_line_covectors:
            fm = self._find_reflection(mats, cov, f)
            simple_fms.append(fm)
        # canonical words by least descent
        words = {}
        order = sorted(mats)

        def word_of(fm):
            if fm in words:
                return words[fm]
            if lengths[fm] == 0:
                words[fm] = ()
                return ()
            for k, sfm in enumerate(simple_fms):
                cand = mat_mul(sfm, fm)
                if lengths[cand] < lengths[fm]:
                    words[fm] = (k,) + word_of(cand)
                    return words[fm]
            raise InternalInvariantError("relative element has no descent")

        self.by_free = {}
        self.elements = []
        for idx, fm in enumerate(order):
            el = RelWeylElement(self, idx, mats[fm], fm, word_of(fm))
            self.by_free[fm] = el
            self.elements.append(el)
        self.identity = self.by_free[identity(f)]
        self.simple_reflections = tuple(self.by_free[fm] for fm in simple_fms)
        closure = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.simple_reflections:
                    p = s * w
                    if p not in closure:
                        closure.add(p)
                        nxt.append(p)
            frontier = nxt
        if len(closure) != len(self.elements):
            raise InternalInvariantError(
                "simple relative reflections do not generate the invariant Weyl group")

    def _inversions(self, fm):
        # counts lines sent to the negative side by fm^{-1}; since
        # l(w) = l(w^{-1}) this is the length of the element itself
        negs = {tuple(-x for x in p) for p in self._line_covectors}
        f = len(fm)
        count = 0
        for cov in self._line_covectors:
            img = tuple(sum(cov[i] * fm[i][j] for i in range(f)) for j in range(f))
            if primitive_covector(img) in negs:
                count += 1
        return count

    def _find_reflection(self, mats, cov, f):
        kernel = nullspace_rational([cov], f)
        found = None
        ident = identity(f)
        for fm in mats:
            if fm == ident:
                continue
            if mat_mul(fm, fm) != ident:
                continue
            if all(mat_vec(fm, b) == b for b in kernel):
                if found is not None:
                    raise InternalInvariantError("two reflections fix the same wall")
                found = fm
        if found is None:
            raise InternalInvariantError("no reflection found for a relative line")
        return found

    def __len__(self):
        return len(self.elements)

    def element_from_word(self, word):
        w = self.identity
        for i in word:
            w = w * self.simple_reflections[i]
        return w

    def act_class(self, w, cls):
        return self.coinv.act(w.abs_mat, cls)

    @cached_property
    def longest_element(self):
        return max(self.elements, key=lambda w: w.length)


class IwahoriWeylElement:
    """Element (translation class, finite part) of an Iwahori-Weyl group."""

    __slots__ = ("group", "cls", "w", "_len", "_word", "_omega")

    def __init__(self, group, cls, w):
        self.group = group
        self.cls = cls
        self.w = w
        self._len = None
        self._word = None
        self._omega = None

    def key(self):
        return (self.cls.free, self.cls.torsion, self.w.index)

    def __eq__(self, other):
        return isinstance(other, IwahoriWeylElement) and self.group is other.group \
            and self.key() == other.key()

    def __hash__(self):
        return hash((id(self.group), self.key()))

    def __mul__(self, other):
        g = self.group
        cls = self.cls + g.w0.act_class(self.w, other.cls)
        return g.element(cls, self.w * other.w)

    def inverse(self):
        g = self.group
        winv = self.w.inverse()
        cls = -(g.w0.act_class(winv, self.cls))
        return g.element(cls, winv)

    def is_identity(self):
        return self.w.is_identity() and self.cls.is_zero()

    @property
    def length(self):
        if self._len is None:
            self._len = self.group._length(self)
        return self._len

    def reduced_word(self):
        """(omega, letters): self = s_{letters[0]} ... s_{letters[-1]} * omega."""
        if self._word is None:
            self._word, self._omega = self.group._walk(self)
        return self._omega, self._word

    @property
    def omega(self):
        if self._omega is None:
            self.reduced_word()
        return self._omega

    def affine_part(self):
        """self * omega^{-1}, which lies in the affine Weyl group."""
        return self * self.omega.inverse()

    def __repr__(self):
        return self.group.element_to_string(self)


class WallFamily:
    __slots__ = ("line_id", "covector", "w_vec", "unit_class", "s_lin")

    def __init__(self, line_id, covector, w_vec, unit_class, s_lin):
        self.line_id = line_id
        self.covector = covector
        self.w_vec = w_vec
        self.unit_class = unit_class
        self.s_lin = s_lin


class SimpleAffine:
    __slots__ = ("index", "family", "level", "element")

    def __init__(self, index, family, level, element):
        self.index = index
        self.family = family
        self.level = level
        self.element = element


class IwahoriWeylGroup:
    """W = (cocharacter coinvariants) x| W0 with length and Bruhat order."""

    def __init__(self, action, wall_table=None, name=""):
        self.action = action
        self.datum = action.datum
        self.name = name or (action.datum.name + "-iw")
        self.coinv = coinvariants(action, "cocharacters")
        self._build_pi1()
        self._build_relative_roots()
        self._build_walls(wall_table)
        self._build_base_alcove()
        self._length_cache = {}
        self._word_cache = {}
        self._build_simple_affine()
        self._omega_reps = {}

    # -- construction --------------------------------------------------------

    def _build_pi1(self):
        n = self.datum.rank
        cols = [cv for cv in self.datum.coroots]
        co = self.coinv
        for j in range(co.num_relations):
            cols.append(co.relation_column(j))
        self.pi1 = CoinvariantLattice(n, cols)

    def _build_relative_roots(self):
        datum = self.datum
        action = self.action
        co = self.coinv
        f = co.free_rank
        basis = [co.make(tuple(1 if i == k else 0 for i in range(f)),
                         (0,) * len(co.torsion)) for k in range(f)]
        realized = [average_lift(action, b) for b in basis]
        seen = {}
        self.rel_roots = []  # (covector of Fractions, positive, multiplicity)
        for idx, r in enumerate(datum.roots):
            cov = tuple(dot(real, r) for real in realized)
            pos = idx in set(datum.positive_indices)
            if cov in seen:
                j = seen[cov]
                c0, p0_, m0 = self.rel_roots[j]
                if p0_ != pos:
                    raise InternalInvariantError("relative positivity is inconsistent")
                self.rel_roots[j] = (c0, p0_, m0 + 1)
            else:
                seen[cov] = len(self.rel_roots)
                self.rel_roots.append((cov, pos, 1))
        for cov, pos, _ in self.rel_roots:
            neg = tuple(-x for x in cov)
            if pos and neg in seen and self.rel_roots[seen[neg]][1]:
                raise InternalInvariantError(
                    "a relative root and its negative are both positive")
        # lines through positive relative roots, simple lines first
        simple_first = []
        for i in datum.simples:
            cov = tuple(dot(real, datum.roots[i]) for real in realized)
            prim = primitive_covector(cov)
            if prim not in simple_first:
                simple_first.append(prim)
        others = []
        for cov, pos, _ in self.rel_roots:
            if not pos:
                continue
            prim = primitive_covector(cov)
            if prim not in simple_first and prim not in others:
                others.append(prim)
        others.sort()
        self.line_primitives = tuple(simple_first + others)
        self.n_simple_lines = len(simple_first)
        self.w0 = RelWeylGroup(action, co, simple_first, self.line_primitives)

    def _kottwitz_of_class(self, cls):
        return self.pi1.project(self.coinv.lift(cls))

    def _build_walls(self, wall_table):
        co = self.coinv
        f = co.free_rank
        if wall_table is None:
            if not self.action.is_trivial() and self.line_primitives:
                raise EchelonnageError(
                    "a wall table must be declared for twisted groups")
            wall_table = []
            seen_lines = set()
            for cov, pos, _ in self.rel_roots:
                if not pos:
                    continue
                prim = primitive_covector(cov)
                if prim in seen_lines:
                    continue
                seen_lines.add(prim)
                icov = tuple(int(x) for x in cov)
                if tuple(Fraction(x) for x in icov) != tuple(cov):
                    raise InternalInvariantError("split covector is not integral")
                wall_table.append((icov, Fraction(1)))
        assigned = {}
        for cov, stride in wall_table:
            prim = primitive_covector(cov)
            line_id = None
            for i, p in enumerate(self.line_primitives):
                if p == prim:
                    line_id = i
                    break
            if line_id is None:
                raise EchelonnageError(
                    f"wall direction {cov} is not a relative root direction")
            if line_id in assigned:
                raise EchelonnageError("duplicate wall entry for a root direction")
            norm = tuple(Fraction(x) / Fraction(stride) for x in cov)
            ints = []
            for x in norm:
                if x.denominator != 1:
                    raise EchelonnageError(
                        "normalized wall covector is not integral; bad stride")
                ints.append(int(x))
            assigned[line_id] = tuple(ints)
        missing = [self.line_primitives[i] for i in range(len(self.line_primitives))
                   if i not in assigned]
        if missing:
            raise EchelonnageError(f"wall table gap: no entry for {missing}")
        self.families = []
        for line_id in range(len(self.line_primitives)):
            cprime = assigned[line_id]
            s_lin = self._reflection_for_line(line_id)
            w_vec = self._w_vec(cprime, s_lin)
            unit_class = self._unit_class(w_vec)
            self.families.append(WallFamily(line_id, cprime, w_vec, unit_class, s_lin))
        # the finite Weyl group must permute the wall families
        famset = set()
        for fam in self.families:
            famset.add(fam.covector)
            famset.add(tuple(-x for x in fam.covector))
        for w in self.w0.elements:
            for fam in self.families:
                img = tuple(dot(fam.covector, tuple(w.free_mat[i][j] for i in range(f)))
                            for j in range(f))
                if img not in famset:
                    raise EchelonnageError(
                        "wall arrangement is not Weyl-symmetric; bad stride table")

    def _reflection_for_line(self, line_id):
        prim = self.line_primitives[line_id]
        f = self.coinv.free_rank
        kernel = nullspace_rational([prim], f)
        ident = identity(f)
        found = None
        for w in self.w0.elements:
            fm = w.free_mat
            if fm == ident or mat_mul(fm, fm) != ident:
                continue
            if all(tuple(mat_vec(fm, b)) == tuple(b) for b in kernel):
                if found is not None:
                    raise InternalInvariantError("two reflections for one line")
                found = w
        if found is None:
            raise InternalInvariantError("missing reflection for a relative line")
        return found

    def _w_vec(self, cprime, s_lin):
        f = self.coinv.free_rank
        x0 = None
        for k in range(f):
            e = tuple(1 if i == k else 0 for i in range(f))
            if dot(cprime, e) != 0:
                x0 = e
                break
        diff = vec_sub(x0, mat_vec(s_lin.free_mat, x0))
        c = dot(cprime, x0)
        w_vec = tuple(Fraction(d, c) for d in diff)
        ints = []
        for x in w_vec:
            if x.denominator != 1:
                raise EchelonnageError(
                    "wall reflections do not preserve the translation lattice")
            ints.append(int(x))
        return tuple(ints)

    def _unit_class(self, w_vec):
        co = self.coinv
        choices = [range(d) for d in co.torsion]
        hits = []
        for tors in iproduct(*choices):
            cls = co.make(w_vec, tors)
            if self._kottwitz_of_class(cls).is_zero():
                hits.append(cls)
        if len(hits) != 1:
            raise EchelonnageError(
                "wall translation class is not uniquely determined by the "
                f"Kottwitz kernel (found {len(hits)})")
        return hits[0]

    def _build_base_alcove(self):
        f = self.coinv.free_rank
        if not self.families:
            self.p0_num = (0,) * f
            self.p0_den = 1
            return
        rows = []
        rhs = []
        for i in range(self.n_simple_lines):
            rows.append(list(self.families[i].covector))
            rhs.append(1)
        rho = solve_rational(rows, rhs)
        if rho is None:
            raise InternalInvariantError("no regular direction for the base alcove")
        vals = [sum(Fraction(c) * x for c, x in zip(fam.covector, rho))
                for fam in self.families]
        if any(v <= 0 for v in vals):
            raise InternalInvariantError("base direction is not regular dominant")
        k = max(vals)
        p0 = tuple(-x / (2 * k) for x in rho)
        den = 1
        for x in p0:
            den = den * x.denominator // gcd(den, x.denominator)
        self.p0_num = tuple(int(x * den) for x in p0)
        self.p0_den = den
        for fam in self.families:
            v = dot(fam.covector, self.p0_num)
            if v % self.p0_den == 0 or not (-self.p0_den < v < 0):
                raise InternalInvariantError("base point is not interior to the alcove")

    def _build_simple_affine(self):
        walls = []
        for fam in self.families:
            for level in (0, -1):
                s = self.element(fam.unit_class.scale(level), fam.s_lin)
                if s.length == 1:
                    walls.append((fam, level, s))
        zero_walls = [w for w in walls if w[1] == 0]
        neg_walls = [w for w in walls if w[1] == -1]
        if len(zero_walls) != self.n_simple_lines or \
                sorted(w[0].line_id for w in zero_walls) != list(range(self.n_simple_lines)):
            raise InternalInvariantError("origin walls do not match the simple lines")
        zero_walls.sort(key=lambda w: w[0].line_id)
        neg_walls.sort(key=lambda w: w[0].line_id)
        entries = []
        if neg_walls:
            entries.append((0, neg_walls[0]))
        for i, w in enumerate(zero_walls):
            entries.append((i + 1, w))
        for j, w in enumerate(neg_walls[1:]):
            entries.append((self.n_simple_lines + 1 + j, w))
        entries.sort()
        self.simple_affine = tuple(
            SimpleAffine(idx, w[0], w[1], w[2]) for idx, w in entries)
        for s in self.simple_affine:
            s.element._word = (s.index,)
            s.element._omega = self.identity()

    # -- basic elements -------------------------------------------------------

    def element(self, cls, w):
        return IwahoriWeylElement(self, cls, w)

    def identity(self):
        return self.element(self.coinv.zero(), self.w0.identity)

    def translation(self, cls):
        """t^mu for a coinvariant class mu."""
        return self.element(cls, self.w0.identity)

    def class_from_coords(self, coords):
        co = self.coinv
        need = co.free_rank + len(co.torsion)
        if len(coords) != need:
            raise ElementParseError(
                f"expected {need} coordinates (free then torsion), got {len(coords)}")
        return co.make(tuple(coords[:co.free_rank]), tuple(coords[co.free_rank:]))

    def project_cocharacter(self, mu):
        return self.coinv.project(mu)

    # -- length and words ------------------------------------------------------

    def _act_point(self, g, nums):
        moved = mat_vec(g.w.free_mat, nums)
        return vec_add(moved, vec_scale(self.p0_den, g.cls.free))

    def _length(self, g):
        key = (g.cls.free, g.w.index)
        hit = self._length_cache.get(key)
        if hit is not None:
            return hit
        q = self._act_point(g, self.p0_num)
        d = self.p0_den
        total = 0
        for fam in self.families:
            a = dot(fam.covector, self.p0_num)
            b = dot(fam.covector, q)
            if a > b:
                a, b = b, a
            total += b // d - a // d
        self._length_cache[key] = total
        return total

    def _walk(self, g):
        """Greedy wall-crossing toward the base alcove.

        Returns (letters, omega) with g = s_{letters[0]} ... s_{letters[-1]} * omega,
        the letters forming the lexicographically least reduced word.
        """
        key = g.key()
        hit = self._word_cache.get(key)
        if hit is not None:
            return hit
        p = self._act_point(g, self.p0_num)
        d = self.p0_den
        letters = []
        guard = 0
        while True:
            for s in self.simple_affine:
                cov = s.family.covector
                v = dot(cov, p)
                lvl = s.level * d
                base = dot(cov, self.p0_num)
                if (v - lvl) * (base - lvl) < 0:
                    # wall separates p from the base alcove: cross it
                    r = v - lvl
                    p = tuple(x - r * wv for x, wv in zip(p, s.family.w_vec))
                    letters.append(s.index)
                    break
            else:
                break
            guard += 1
            if guard > 10000:
                raise InternalInvariantError("alcove walk did not terminate")
        om = g
        for i in letters:
            om = self.simple_affine_element(i) * om
        if self._length(om) != 0:
            raise InternalInvariantError("walk remainder has positive length")
        out = (tuple(letters), om)
        self._word_cache[key] = out
        return out

    def simple_affine_element(self, index):
        for s in self.simple_affine:
            if s.index == index:
                return s.element
        raise ElementParseError(f"no simple affine reflection with index {index}")

    def element_from_word(self, letters, omega=None):
        g = self.identity() if omega is None else omega
        for i in reversed(letters):
            g = self.simple_affine_element(i) * g
        return g

    # -- Bruhat order -----------------------------------------------------------

    def bruhat_leq(self, u, v):
        """Subword criterion on one fixed reduced word of v."""
        if u.omega != v.omega:
            return False
        ua = u.affine_part()
        va = v.affine_part()
        if ua.length > va.length:
            return False
        _, letters = va.reduced_word()
        cur = ua
        for i in letters:
            s = self.simple_affine_element(i)
            su = s * cur
            if su.length < cur.length:
                cur = su
        return cur.is_identity()

    # -- Kottwitz morphism -------------------------------------------------------

    def kottwitz(self, g):
        """Class of g in pi1(G)_I (constant on the affine Weyl group)."""
        return self._kottwitz_of_class(g.cls)

    def omega_representative(self, g):
        return g.omega

    # -- coset representatives ----------------------------------------------------

    def min_coset_rep(self, g, letters):
        """Minimal-length representative of g W_J, J given by S_aff letters."""
        cur = g
        while True:
            for j in letters:
                cand = cur * self.simple_affine_element(j)
                if cand.length < cur.length:
                    cur = cand
                    break
            else:
                return cur

    def double_coset_max(self, g, letters):
        """The maximal element of W_J g W_J (W_J finite)."""
        cur = g
        guard = 0
        while True:
            moved = False
            for j in letters:
                cand = self.simple_affine_element(j) * cur
                if cand.length > cur.length:
                    cur = cand
                    moved = True
                    break
            if not moved:
                for j in letters:
                    cand = cur * self.simple_affine_element(j)
                    if cand.length > cur.length:
                        cur = cand
                        moved = True
                        break
            if not moved:
                return cur
            guard += 1
            if guard > 100000:
                raise InfiniteGroupError("double coset ascent did not terminate")

    def dc_rep(self, g, letters):
        """The representative of maximal length among the minimal-length
        representatives over the double coset W_J g W_J."""
        return self.min_coset_rep(self.double_coset_max(g, letters), letters)

    # -- dominance on classes -------------------------------------------------------

    def rel_value(self, cov, cls):
        return dot(cov, cls.free)

    def is_dominant_class(self, cls):
        return all(self.rel_value(fam.covector, cls) >= 0 for fam in self.families)

    def dominant_class(self, cls):
        """The dominant representative of the W0-orbit of a class."""
        cur = cls
        while True:
            for i in range(self.n_simple_lines):
                if self.rel_value(self.families[i].covector, cur) < 0:
                    cur = self.w0.act_class(self.w0.simple_reflections[i], cur)
                    break
            else:
                return cur

    def w0_orbit(self, cls):
        seen = {cls}
        frontier = [cls]
        while frontier:
            nxt = []
            for c in frontier:
                for s in self.w0.simple_reflections:
                    img = self.w0.act_class(s, c)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return seen

    def pairing_two_rho(self, cls):
        """<cls, 2 rho_B> through any representative (well-defined)."""
        from .folding import invariant_pairing
        return invariant_pairing(self.action, cls, self.datum.two_rho)

    def translation_length(self, cls):
        return self.translation(cls).length

    # -- element parsing / printing ---------------------------------------------------

    def element_to_string(self, g):
        co = self.coinv
        coords = list(g.cls.free) + list(g.cls.torsion)
        t = "t[%s]" % ",".join(str(x) for x in coords)
        if g.w.is_identity():
            return t
        w = "w[%s]" % ",".join(str(i + 1) for i in g.w.word)
        if g.cls.is_zero():
            return w
        return t + "*" + w

    def element_from_string(self, text):
        text = text.strip()
        if not text or text in ("e", "1"):
            return self.identity()
        cls = self.coinv.zero()
        w = self.w0.identity
        for part in text.split("*"):
            part = part.strip()
            if part.startswith("t[") and part.endswith("]"):
                body = part[2:-1].replace(";", ",")
                coords = [int(x) for x in body.split(",") if x.strip() != ""] \
                    if body.strip() else []
                cls = cls + self.class_from_coords(coords)
            elif part.startswith("w[") and part.endswith("]"):
                body = part[2:-1]
                letters = [int(x) for x in body.split(",") if x.strip() != ""] \
                    if body.strip() else []
                for ell in letters:
                    if not 1 <= ell <= self.n_simple_lines:
                        raise ElementParseError(
                            f"finite letter {ell} out of range 1..{self.n_simple_lines}")
                    w = w * self.w0.simple_reflections[ell - 1]
            else:
                raise ElementParseError(f"cannot parse element part {part!r}")
        return self.element(cls, w)

    # -- enumeration ---------------------------------------------------------------

    def affine_ball(self, bound):
        """All elements of the affine Weyl group with length <= bound."""
        out = {self.identity()}
        frontier = [self.identity()]
        while frontier:
            nxt = []
            for g in frontier:
                for s in self.simple_affine:
                    cand = s.element * g
                    if cand.length == g.length + 1 and cand.length <= bound \
                            and cand not in out:
                        out.add(cand)
                        nxt.append(cand)
            frontier = nxt
        return out

    def omega_torsion_representatives(self):
        """Length-zero representatives of the torsion part of pi1(G)_I.

        The free part of pi1 corresponds to central translation directions
        whose components all look alike; enumeration-style checks quantify
        over the torsion classes only.
        """
        reps = {}
        pi1 = self.pi1
        choices = [range(d) for d in pi1.torsion]
        for tors in iproduct(*choices):
            c = pi1.make((0,) * pi1.free_rank, tors)
            lifted = self.coinv.project(pi1.lift(c))
            om = self.translation(lifted).omega
            key = (c.free, c.torsion)
            reps[key] = om
        return reps
