"""Highest-weight combinatorics for fixed-point groups of pinned actions.

Characters are computed on the datum handed in (for dual-group applications
that datum is the dual based root datum, whose character lattice is the
original cocharacter lattice).  The pipeline is:

* Freudenthal's recursion for irreducible characters of a connected group,
  exact over Q (the Weyl character formula stays available as a test
  oracle);
* the dominance order on the character-side coinvariants, with the
  projected simple roots as cone generators;
* component-group twists: weights of a disconnected-group irreducible are
  the connected-group weights lifted back to the full coinvariant lattice,
  the torsion offsets being dictated by the projected simple roots;
* restriction along fold: project every weight of an absolute irreducible
  and greedily peel highest-weight characters from the top of the
  dominance order.
"""

from fractions import Fraction

from .errors import DominanceError, PeelingError
from .folding import fold
from .linalg import dot, solve_rational, vec_add, vec_sub


class WeightMultiset:
    """Finitely supported multiplicity function on a weight lattice."""

    def __init__(self, entries=None):
        self.entries = dict(entries or {})

    @staticmethod
    def _key(w):
        if hasattr(w, "free"):
            return (w.free, w.torsion)
        return (tuple(w), ())

    def add(self, weight, mult=1):
        self.entries[weight] = self.entries.get(weight, 0) + mult
        if self.entries[weight] == 0:
            del self.entries[weight]

    def dimension(self):
        return sum(self.entries.values())

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: self._key(kv[0]))

    def __getitem__(self, w):
        return self.entries.get(w, 0)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, WeightMultiset) and self.entries == other.entries

    def __repr__(self):
        inner = ", ".join(f"{w}:{m}" for w, m in self.items())
        return "{" + inner + "}"


# -- connected-group characters ------------------------------------------------


def _invariant_form(datum):
    """Gram matrix of a Weyl-invariant form on the character lattice."""
    n = datum.rank
    gram = [[0] * n for _ in range(n)]
    for cv in datum.coroots:
        for i in range(n):
            for j in range(n):
                gram[i][j] += cv[i] * cv[j]
    return tuple(tuple(row) for row in gram)


def _form(gram, x, y):
    return sum(Fraction(xi) * gij * Fraction(yj)
               for xi, grow in zip(x, gram)
               for gij, yj in zip(grow, [Fraction(v) for v in y]))


def dominant_weights_below(datum, lam):
    """Dominant weights mu with lam - mu a nonnegative sum of simple roots."""
    height_cap = dot(datum.two_rho_check, lam)
    simples = datum.simple_roots
    out = []

    def rec(idx, current, remaining):
        if idx == len(simples):
            if datum.is_dominant_char(current):
                out.append(tuple(current))
            return
        vec = current
        for c in range(remaining + 1):
            rec(idx + 1, vec, remaining - c)
            vec = vec_sub(vec, simples[idx])

    rec(0, tuple(lam), max(height_cap, 0))
    return out


def freudenthal(datum, lam):
    """Multiplicities of the dominant weights of the irreducible with
    highest weight lam, by Freudenthal's recursion (exact)."""
    if not datum.is_dominant_char(lam):
        raise DominanceError(f"{lam} is not a dominant weight")
    lam = tuple(lam)
    if datum.rank == 0 or not datum.roots:
        return {lam: 1}
    gram = _invariant_form(datum)
    rho = tuple(Fraction(x, 2) for x in datum.two_rho)
    lam_rho = tuple(Fraction(a) + b for a, b in zip(lam, rho))
    norm_top = _form(gram, lam_rho, lam_rho)

    def dom_rep(v):
        rep, _ = dominant_of_char(datum, v)
        return rep

    candidates = dominant_weights_below(datum, lam)
    candidates.sort(key=lambda v: -dot(datum.two_rho_check, v))
    mult = {lam: 1}
    positives = datum.positive_roots
    for mu in candidates:
        if mu == lam:
            continue
        mu_rho = tuple(Fraction(a) + b for a, b in zip(mu, rho))
        denom = norm_top - _form(gram, mu_rho, mu_rho)
        if denom <= 0:
            mult[mu] = 0
            continue
        acc = 0
        for alpha in positives:
            k = 1
            while True:
                shifted = tuple(a + k * b for a, b in zip(mu, alpha))
                rep = dom_rep(shifted)
                m = mult.get(rep, 0)
                if m == 0:
                    # higher shifts leave the weight polytope once the norm
                    # bound is exceeded
                    sh_rho = tuple(Fraction(a) + b for a, b in zip(shifted, rho))
                    if _form(gram, sh_rho, sh_rho) > norm_top:
                        break
                else:
                    acc += m * _form(gram, shifted, alpha)
                k += 1
        val = 2 * acc / denom
        if val.denominator != 1:
            raise PeelingError("Freudenthal recursion produced a non-integer")
        if int(val):
            mult[mu] = int(val)
    return {w: m for w, m in mult.items() if m}


def dominant_of_char(datum, chi):
    """Dominant representative of a character under the Weyl group."""
    cur = tuple(chi)
    w = datum.weyl.identity
    while True:
        for k, cv in enumerate(datum.simple_coroots):
            if dot(cv, cur) < 0:
                cur = datum.weyl.simple_reflections[k].apply_char(cur)
                w = datum.weyl.simple_reflections[k] * w
                break
        else:
            return cur, w


def weyl_orbit_char(datum, chi):
    seen = {tuple(chi)}
    frontier = [tuple(chi)]
    while frontier:
        nxt = []
        for v in frontier:
            for s in datum.weyl.simple_reflections:
                img = s.apply_char(v)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def irreducible_character(datum, lam):
    """Full weight multiset of the irreducible with highest weight lam."""
    dom = freudenthal(datum, lam)
    out = WeightMultiset()
    for mu, m in dom.items():
        for w in weyl_orbit_char(datum, mu):
            out.add(w, m)
    return out


def weyl_dimension(datum, lam):
    """Weyl dimension formula (independent of Freudenthal)."""
    if not datum.roots:
        return 1
    rho2 = datum.two_rho
    num = 1
    den = 1
    for i in datum.positive_indices:
        cv = datum.coroots[i]
        num *= dot(cv, tuple(2 * x for x in lam)) + dot(cv, rho2)
        den *= dot(cv, rho2)
    q = Fraction(num, den)
    if q.denominator != 1:
        raise PeelingError("Weyl dimension formula produced a non-integer")
    return int(q)


def kostant_multiplicity(datum, lam, mu):
    """Weight multiplicity by Kostant's alternating sum (test oracle)."""
    positives = datum.positive_roots
    memo = {}

    def partitions(v, idx):
        v = tuple(v)
        if all(x == 0 for x in v):
            return 1
        if idx == len(positives):
            return 0
        key = (v, idx)
        if key in memo:
            return memo[key]
        total = partitions(v, idx + 1)
        shifted = vec_sub(v, positives[idx])
        # only finitely many subtractions can stay in the positive cone
        if _in_root_cone(datum, shifted):
            total += partitions(shifted, idx)
        memo[key] = total
        return total

    rho = datum.two_rho  # doubled; scale the whole identity by 2
    total = 0
    for w in datum.weyl.elements:
        arg2 = vec_sub(vec_add(w.apply_char(tuple(2 * x for x in lam)),
                               w.apply_char(rho)),
                       vec_add(tuple(2 * x for x in mu), rho))
        if any(x % 2 for x in arg2):
            continue
        arg = tuple(x // 2 for x in arg2)
        if not _in_root_cone(datum, arg):
            continue
        total += (-1) ** w.length * partitions(arg, 0)
    return total


def _in_root_cone(datum, v):
    srows = [list(r) for r in zip(*datum.simple_roots)]
    sol = solve_rational(srows, v)
    return sol is not None and all(x >= 0 for x in sol)


# -- dominance order on coinvariants ---------------------------------------------


class DominanceOrder:
    """Partial order on the full coinvariant weight lattice generated by the
    projected positive roots."""

    def __init__(self, folded):
        self.folded = folded
        self.generators = tuple(
            folded.char_coinv.make(r, t)
            for r, t in zip(folded.datum.simple_roots, folded.simple_torsion))

    def leq(self, lam, mu):
        """lam <= mu iff mu - lam is a nonnegative integer combination of
        the projected simple roots (exact integer feasibility)."""
        diff = mu - lam
        coeffs = self._coefficients(diff.free)
        if coeffs is None:
            return False
        if any(c < 0 or c.denominator != 1 for c in coeffs):
            return False
        tors = self.folded.char_coinv.make(
            (0,) * self.folded.char_coinv.free_rank, diff.torsion)
        acc = self.folded.char_coinv.make(
            (0,) * self.folded.char_coinv.free_rank,
            (0,) * len(self.folded.char_coinv.torsion))
        for c, g in zip(coeffs, self.generators):
            acc = acc + g.scale(int(c))
        return acc.torsion == diff.torsion and acc.free == diff.free

    def _coefficients(self, free_vec):
        simples = self.folded.datum.simple_roots
        if not simples:
            return None if any(free_vec) else ()
        rows = [list(v) for v in zip(*simples)]
        return solve_rational(rows, free_vec)


# -- disconnected groups: torsion lifting ------------------------------------------


def _torsion_offset(folded, coeffs):
    co = folded.char_coinv
    acc = [0] * len(co.torsion)
    for c, tors in zip(coeffs, folded.simple_torsion):
        for i, t in enumerate(tors):
            acc[i] += int(c) * t
    return tuple(a % d for a, d in zip(acc, co.torsion))


def extend_by_component_twist(char, mu_cls, folded):
    """Lift a connected-group character to the component-carrying lattice.

    ``char`` is a weight multiset on the free quotient whose highest weight
    is the free part of mu_cls (with multiplicity one).  The unique
    component-group twist realizing mu_cls as highest weight determines the
    torsion offset of every weight through the projected simple roots; the
    component group itself is folded.component_group.
    """
    co = folded.char_coinv
    order = DominanceOrder(folded)
    height = folded.datum.two_rho_check
    if char.entries:
        top = max(char.entries, key=lambda w: (dot(height, w), w))
        if tuple(top) != tuple(mu_cls.free):
            raise PeelingError("character's highest weight differs from the class")
        if char[top] != 1:
            raise PeelingError("highest weight multiplicity is not 1")
    out = WeightMultiset()
    for w, m in char.items():
        coeffs = order._coefficients(vec_sub(mu_cls.free, w))
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            raise PeelingError("inconsistent torsion offset: weight does not "
                               "differ from the highest weight by roots")
        off = _torsion_offset(folded, coeffs)
        tors = tuple((a - b) % d for a, b, d in
                     zip(mu_cls.torsion, off, co.torsion))
        out.add(co.make(tuple(w), tors), m)
    return out


def character_with_torsion(folded, mu_cls):
    """Weight multiset of the irreducible of highest weight mu_cls on the
    full (torsion-carrying) coinvariant lattice."""
    if not folded.datum.is_dominant_char(mu_cls.free):
        raise DominanceError(f"{mu_cls} is not dominant for the folded datum")
    conn = irreducible_character(folded.datum, mu_cls.free)
    return extend_by_component_twist(conn, mu_cls, folded)


def induced_dimension(folded, mu_cls):
    """dim of the induction of the connected irreducible to the full fixed
    group, computed from the component-twist side of the reciprocity
    isomorphism."""
    base = character_with_torsion(folded, mu_cls)
    pi0 = folded.component_group
    n_chars = 1
    for d in pi0:
        n_chars *= d
    return n_chars * base.dimension()


# -- restriction along folding ------------------------------------------------------


def restrict_to_fixed_group(datum, action, lam, folded=None):
    """Decompose the projection of an absolute irreducible character into
    highest-weight characters of the fixed-point group.

    Returns a sorted list of (class, multiplicity).  Peeling is greedy from
    the top of the dominance order (height functional, lexicographic tie
    break); a negative residue raises, since it would falsify the
    highest-weight theory this computes in.
    """
    if folded is None:
        folded = fold(action)
    if not datum.is_dominant_char(lam):
        raise DominanceError(f"{lam} is not dominant")
    co = folded.char_coinv
    absolute = irreducible_character(datum, lam)
    remaining = WeightMultiset()
    for w, m in absolute.items():
        remaining.add(co.project(w), m)
    fd = folded.datum
    height = fd.two_rho_check

    def sort_key(cls):
        return (-dot(height, cls.free), cls.free, cls.torsion)

    out = []
    guard = 0
    while remaining.entries:
        top = min(remaining.entries, key=sort_key)
        mult = remaining[top]
        if mult < 0:
            raise PeelingError("negative multiplicity while peeling")
        if not fd.is_dominant_char(top.free):
            raise PeelingError(f"top weight {top} is not dominant; "
                               "cannot peel a highest-weight character")
        char = character_with_torsion(folded, top)
        for w, m in char.items():
            remaining.add(w, -m * mult)
        for w, m in remaining.items():
            if m < 0:
                raise PeelingError("negative multiplicity while peeling")
        out.append((top, mult))
        guard += 1
        if guard > 100000:
            raise PeelingError("peeling did not terminate")
    out.sort(key=lambda t: sort_key(t[0]))
    return out


def highest_weight_table(datum, action, lams, folded=None):
    """Rows (class, dim, #weights, provenance) for every constituent of the
    restrictions of the given absolute highest weights."""
    if folded is None:
        folded = fold(action)
    rows = {}
    for lam in lams:
        for cls, mult in restrict_to_fixed_group(datum, action, lam, folded):
            if cls not in rows:
                char = character_with_torsion(folded, cls)
                rows[cls] = {
                    "mu": cls,
                    "dim": char.dimension(),
                    "n_weights": len(char),
                    "provenance": [],
                }
            rows[cls]["provenance"].append((tuple(lam), mult))
    height = folded.datum.two_rho_check
    return sorted(rows.values(),
                  key=lambda r: (-dot(height, r["mu"].free), r["mu"].free,
                                 r["mu"].torsion))
