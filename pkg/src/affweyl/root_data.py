"""Based root data and their finite Weyl groups.

A ``BasedRootDatum`` stores roots (character side) and coroots (cocharacter
side) as integer vectors in a fixed Z-basis, with the pairing between the two
sides given by the standard dot product.  Simply-connected and adjoint
lattice realizations of the same Dynkin type are distinct data here: the
quotient of the cocharacter lattice by the coroot lattice depends on the
realization, and everything downstream (component groups, torsion of
coinvariants) is sensitive to it.

The Weyl group is generated by closure from the simple reflections and
elements carry a canonical reduced word (lexicographically least), so all
outputs are deterministic.
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import RootDatumError
from .linalg import dot, identity, mat_mul, mat_vec, solve_rational


def reflection_matrices(root, coroot, rank):
    """(character-side, cocharacter-side) matrices of s_a.

    On characters s_a(x) = x - <a^vee, x> a; on cocharacters
    s_a(mu) = mu - <mu, a> a^vee.
    """
    char = tuple(
        tuple((1 if i == j else 0) - root[i] * coroot[j] for j in range(rank))
        for i in range(rank)
    )
    cochar = tuple(
        tuple((1 if i == j else 0) - coroot[i] * root[j] for j in range(rank))
        for i in range(rank)
    )
    return char, cochar


@dataclass(frozen=True)
class BasedRootDatum:
    rank: int
    roots: tuple
    coroots: tuple
    simples: tuple
    name: str = ""

    def __post_init__(self):
        self._validate()

    # -- basic structure ---------------------------------------------------

    def pairing(self, mu, chi):
        """<mu, chi> for a cocharacter mu and character chi."""
        return dot(mu, chi)

    @cached_property
    def root_index(self):
        return {r: i for i, r in enumerate(self.roots)}

    @cached_property
    def simple_roots(self):
        return tuple(self.roots[i] for i in self.simples)

    @cached_property
    def simple_coroots(self):
        return tuple(self.coroots[i] for i in self.simples)

    @cached_property
    def _simple_coords(self):
        """Coordinates of every root in the simple-root basis (fractions)."""
        coords = []
        srows = [list(r) for r in zip(*self.simple_roots)] if self.simples else []
        for r in self.roots:
            if not self.simples:
                raise RootDatumError("roots present but no simple roots")
            sol = solve_rational(srows, r)
            if sol is None:
                raise RootDatumError("root outside the span of the simple roots")
            coords.append(sol)
        return tuple(coords)

    @cached_property
    def positive_indices(self):
        pos = []
        for i, c in enumerate(self._simple_coords):
            if all(x >= 0 for x in c):
                pos.append(i)
            elif not all(x <= 0 for x in c):
                raise RootDatumError("root is neither positive nor negative")
        return tuple(pos)

    @cached_property
    def positive_roots(self):
        return tuple(self.roots[i] for i in self.positive_indices)

    @cached_property
    def two_rho(self):
        """Sum of the positive roots (a character)."""
        out = (0,) * self.rank
        for r in self.positive_roots:
            out = tuple(a + b for a, b in zip(out, r))
        return out

    @cached_property
    def two_rho_check(self):
        """Sum of the positive coroots (a cocharacter)."""
        out = (0,) * self.rank
        for i in self.positive_indices:
            out = tuple(a + b for a, b in zip(out, self.coroots[i]))
        return out

    def height(self, mu):
        """<mu, rho>-style height of a cocharacter, doubled to stay integral."""
        return dot(mu, self.two_rho)

    def is_dominant_cochar(self, mu):
        return all(dot(mu, a) >= 0 for a in self.simple_roots)

    def is_dominant_char(self, chi):
        return all(dot(av, chi) >= 0 for av in self.simple_coroots)

    # -- validation ---------------------------------------------------------

    def _validate(self):
        n = self.rank
        if n < 0:
            raise RootDatumError("rank must be nonnegative")
        if n == 0 and self.roots:
            raise RootDatumError("rank zero cannot carry roots")
        if len(self.roots) != len(self.coroots):
            raise RootDatumError("roots and coroots must be indexed alike")
        for r in self.roots:
            if len(r) != n:
                raise RootDatumError("root of wrong length")
        for i, (r, cv) in enumerate(zip(self.roots, self.coroots)):
            if dot(cv, r) != 2:
                raise RootDatumError(f"<coroot, root> != 2 at index {i}")
        rootset = set(self.roots)
        if len(rootset) != len(self.roots):
            raise RootDatumError("duplicate roots")
        for i in self.simples:
            if not 0 <= i < len(self.roots):
                raise RootDatumError("bad simple index")
        # reflections permute the root set, and the coroot bijection is
        # equivariant (checked through the simple reflections)
        for i in self.simples:
            char, cochar = reflection_matrices(self.roots[i], self.coroots[i], n)
            for j, r in enumerate(self.roots):
                img = mat_vec(char, r)
                if img not in rootset:
                    raise RootDatumError("simple reflection does not permute roots")
                k = self.root_index[img]
                if mat_vec(cochar, self.coroots[j]) != self.coroots[k]:
                    raise RootDatumError("coroot bijection not reflection-equivariant")
        _ = self.positive_indices
        # positivity preserved by the coroot bijection
        if self.roots:
            pos = set(self.positive_indices)
            cosimple = [list(r) for r in zip(*self.simple_coroots)]
            for i in pos:
                sol = solve_rational(cosimple, self.coroots[i])
                if sol is None or not all(x >= 0 for x in sol):
                    raise RootDatumError("coroot bijection does not preserve positivity")
        for i in self.simples:
            if i not in set(self.positive_indices):
                raise RootDatumError("simple root is not positive")

    # -- Weyl group ----------------------------------------------------------

    @cached_property
    def weyl(self):
        return WeylGroup(self)


class WeylElement:
    """Element of a finite Weyl group, with a canonical reduced word.

    ``mat`` acts on cocharacters, ``mat_char`` on characters; the canonical
    word is the lexicographically least reduced word.
    """

    __slots__ = ("group", "index", "mat", "mat_char", "word")

    def __init__(self, group, index, mat, mat_char, word):
        self.group = group
        self.index = index
        self.mat = mat
        self.mat_char = mat_char
        self.word = word

    @property
    def length(self):
        return len(self.word)

    def __mul__(self, other):
        return self.group.by_matrix[mat_mul(self.mat, other.mat)]

    def inverse(self):
        return self.group.by_matrix[self.group._inverse_mat(self.mat)]

    def apply_cochar(self, mu):
        return mat_vec(self.mat, mu)

    def apply_char(self, chi):
        return mat_vec(self.mat_char, chi)

    def is_identity(self):
        return not self.word

    def __repr__(self):
        return "w[%s]" % ",".join(str(i) for i in self.word)

    def __hash__(self):
        return hash((id(self.group), self.index))

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.group is other.group \
            and self.index == other.index


class WeylGroup:
    """Finite Weyl group of a based root datum, generated by closure."""

    MAX_ORDER = 1200000

    def __init__(self, datum):
        self.datum = datum
        n = datum.rank
        gens = []
        for i in datum.simples:
            char, cochar = reflection_matrices(datum.roots[i], datum.coroots[i], n)
            gens.append((cochar, char))
        ident = identity(n)
        mats = {ident: (ident, ident)}
        frontier = [ident]
        while frontier:
            nxt = []
            for m in frontier:
                mc = mats[m][1]
                for gm, gc in gens:
                    prod = mat_mul(gm, m)
                    if prod not in mats:
                        mats[prod] = (prod, mat_mul(gc, mc))
                        nxt.append(prod)
            frontier = nxt
            if len(mats) > self.MAX_ORDER:
                raise RootDatumError("Weyl group closure exceeded the hard cap")
        self._gen_mats = gens
        order = sorted(mats)
        self.by_matrix = {}
        self.elements = []
        # lengths via inversion counts, then canonical words by least descent
        lengths = {}
        pos = datum.positive_roots
        posset = set(pos)
        for m in order:
            mc = mats[m][1]
            lengths[m] = sum(1 for r in pos if mat_vec(mc, r) not in posset)
        words = {}

        def word_of(m):
            if m in words:
                return words[m]
            if lengths[m] == 0:
                words[m] = ()
                return ()
            mc = mats[m][1]
            for k, i in enumerate(datum.simples):
                # s_i is a left descent iff m^-1(root_i) is negative, i.e.
                # l(s_i m) < l(m); test via the inversion criterion
                sm = mat_mul(gens[k][0], m)
                if lengths[sm] < lengths[m]:
                    words[m] = (k,) + word_of(sm)
                    return words[m]
            raise RootDatumError("no descent found; datum is inconsistent")

        import sys
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old, 4 * len(mats) + 100))
        try:
            for idx, m in enumerate(order):
                w = WeylElement(self, idx, m, mats[m][1], word_of(m))
                self.by_matrix[m] = w
                self.elements.append(w)
        finally:
            sys.setrecursionlimit(old)
        self.identity = self.by_matrix[ident]
        self.simple_reflections = tuple(
            self.by_matrix[gens[k][0]] for k in range(len(gens)))

    def __len__(self):
        return len(self.elements)

    def _inverse_mat(self, m):
        from .linalg import mat_inverse_int
        return mat_inverse_int(m)

    def element_from_word(self, word):
        w = self.identity
        for i in word:
            w = w * self.simple_reflections[i]
        return w

    @cached_property
    def longest_element(self):
        return max(self.elements, key=lambda w: w.length)

    def orbit(self, mu):
        """W-orbit of a cocharacter, as a set of tuples."""
        seen = {tuple(mu)}
        frontier = [tuple(mu)]
        while frontier:
            nxt = []
            for v in frontier:
                for s in self.simple_reflections:
                    img = s.apply_cochar(v)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return seen

    def dominant_representative(self, mu):
        """(mu+, w) with w * mu = mu+ dominant; least-index descent at each step."""
        datum = self.datum
        cur = tuple(mu)
        w = self.identity
        while True:
            for k, a in enumerate(datum.simple_roots):
                if dot(cur, a) < 0:
                    cur = self.simple_reflections[k].apply_cochar(cur)
                    w = self.simple_reflections[k] * w
                    break
            else:
                return cur, w

    def stabilizer_generators(self, mu):
        """Generators of Stab_W(mu): a standard parabolic conjugated back."""
        mu = tuple(mu)
        dom, w = self.dominant_representative(mu)
        winv = w.inverse()
        gens = []
        for k, a in enumerate(self.datum.simple_roots):
            if dot(dom, a) == 0:
                gens.append(winv * self.simple_reflections[k] * w)
        return tuple(gens)

    def stabilizer_order(self, mu):
        return len(self) // len(self.orbit(mu))
