"""Standard facets, speciality, admissible sets and the finite checks
behind the speciality criteria.

A standard facet is a subset J of the simple affine reflections whose
parahoric subgroup W_J is finite.  Speciality is decided by the subgroup
criterion (W_{0,J} = W_0) and cross-checked against the parallel-wall
definition; a disagreement aborts, since it can only mean a broken preset.

Admissible sets are computed from their definition: downward Bruhat closure
of the translations by the projected orbit for the alcove, then the
max-min double-coset representatives relative to J.  The maxima are computed
as genuine Bruhat maxima of the resulting set, so the closed-form
description (translations by the J-dominant orbit representatives, counted
by double cosets) stays available as an independent check.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product as iproduct

from .errors import CapExceededError, InfiniteGroupError, InternalInvariantError
from .linalg import dot, nullspace_rational, solve_rational


class Facet:
    """A standard facet: J a subset of S_aff with W_J finite."""

    def __init__(self, group, letters):
        self.group = group
        self.letters = tuple(sorted(letters))
        self._enumerate()

    def _enumerate(self):
        g = self.group
        cap = len(g.w0) + 1
        ident = g.identity()
        elements = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for j in self.letters:
                    p = g.simple_affine_element(j) * w
                    if p not in elements:
                        elements.add(p)
                        nxt.append(p)
                        if len(elements) > cap:
                            raise InfiniteGroupError(
                                f"W_J for J={self.letters} is infinite")
            frontier = nxt
        self.parahoric = frozenset(elements)
        finite_parts = {w.w for w in elements}
        if len(finite_parts) != len(elements):
            raise InternalInvariantError(
                "projection to the finite Weyl group is not injective on W_J")
        self.w0j = frozenset(finite_parts)

    @property
    def order(self):
        return len(self.parahoric)

    @cached_property
    def restricted_root_indices(self):
        """Indices into group.rel_roots of the subsystem R_J."""
        g = self.group
        out = []
        for i, (cov, pos, mult) in enumerate(g.rel_roots):
            from .linalg import primitive_covector
            prim = primitive_covector(cov)
            neg = tuple(-x for x in prim)
            line = None
            for lid, p in enumerate(g.line_primitives):
                if p == prim or p == neg:
                    line = lid
                    break
            if line is None:
                raise InternalInvariantError("relative root without a line")
            if g.families[line].s_lin in self.w0j:
                out.append(i)
        return tuple(out)

    @cached_property
    def hull_point(self):
        """A rational point on the affine hull of the facet."""
        g = self.group
        f = g.coinv.free_rank
        rows, rhs = [], []
        for j in self.letters:
            aff = next(x for x in g.simple_affine if x.index == j)
            rows.append(list(aff.family.covector))
            rhs.append(aff.level)
        if not rows:
            return tuple([0] * f)
        vstar = solve_rational(rows, rhs)
        if vstar is None:
            raise InternalInvariantError("facet equations are inconsistent")
        return vstar

    def restricted_roots(self):
        """(R_J, R_J^+) as lists of rational covectors.

        Positivity is oriented at the facet: a root of R_J is positive when
        the base alcove lies on its negative side along the wall through the
        facet.  For facets whose walls pass through the origin this is the
        ambient positivity; for the other standard facets it is the twist
        that makes the minimal-representative length formula hold verbatim.
        """
        g = self.group
        diff = self._alcove_side_vector()
        all_ = [g.rel_roots[i][0] for i in self.restricted_root_indices]
        pos = [cov for cov in all_ if dot(cov, diff) < 0]
        if len(pos) * 2 != len(all_):
            raise InternalInvariantError("facet positivity did not split R_J")
        return all_, pos

    def _alcove_side_vector(self):
        from fractions import Fraction
        g = self.group
        p0 = tuple(Fraction(x, g.p0_den) for x in g.p0_num)
        return tuple(a - b for a, b in zip(p0, self.hull_point))

    def restricted_lines(self):
        """One positively-oriented primitive covector per reflection
        hyperplane direction of R_J.

        For reduced restricted systems this is R_J^+ up to scaling; in the
        nonreduced case proportional roots are counted once, matching the
        affine root directions through the facet.
        """
        g = self.group
        diff = self._alcove_side_vector()
        out = []
        for lid, prim in enumerate(g.line_primitives):
            if g.families[lid].s_lin not in self.w0j:
                continue
            val = dot(prim, diff)
            if val == 0:
                raise InternalInvariantError("facet line with degenerate side")
            out.append(prim if val < 0 else tuple(-x for x in prim))
        return out

    def is_special(self):
        """W_{0,J} = W_0, cross-checked against the parallel-wall test."""
        by_subgroup = len(self.w0j) == len(self.group.w0)
        by_walls = self._special_by_parallel_walls()
        if by_subgroup != by_walls:
            raise InternalInvariantError(
                f"speciality criteria disagree on J={self.letters}: "
                f"subgroup={by_subgroup} walls={by_walls}")
        return by_subgroup

    def _special_by_parallel_walls(self):
        """Every wall direction admits a parallel wall containing the facet."""
        g = self.group
        f = g.coinv.free_rank
        rows = [list(next(x for x in g.simple_affine if x.index == j).family.covector)
                for j in self.letters]
        vstar = self.hull_point
        direction_space = nullspace_rational(rows, f)
        for fam in g.families:
            if any(dot(fam.covector, b) != 0 for b in direction_space):
                return False
            val = dot(fam.covector, vstar)
            if hasattr(val, "denominator") and val.denominator != 1:
                return False
        return True

    def facet_dominant_rep(self, cls):
        """The unique W_{0,J}-orbit member pairing >= 0 with all of R_J^+."""
        g = self.group
        _, pos = self.restricted_roots()
        orbit = set()
        frontier = [cls]
        orbit.add(cls)
        while frontier:
            nxt = []
            for c in frontier:
                for w in self.w0j:
                    img = g.w0.act_class(w, c)
                    if img not in orbit:
                        orbit.add(img)
                        nxt.append(img)
            frontier = nxt
        hits = [c for c in orbit if all(dot(cov, c.free) >= 0 for cov in pos)]
        if len(hits) != 1:
            raise InternalInvariantError(
                f"facet-dominant representative is not unique: {hits}")
        return hits[0]

    def __repr__(self):
        return "Facet(%s)" % ",".join(str(j) for j in self.letters)


def enumerate_facets(group):
    """All standard facets (subsets of S_aff generating a finite group)."""
    indices = [s.index for s in group.simple_affine]
    out = []
    for r in range(len(indices) + 1):
        for combo in combinations(indices, r):
            try:
                out.append(Facet(group, combo))
            except InfiniteGroupError:
                continue
    out.sort(key=lambda f: (len(f.letters), f.letters))
    return out


def lambda_mu(group, mu):
    """Projected translation classes indexing the admissible set of mu.

    ``mu`` is an absolute cocharacter; the result depends only on its
    absolute Weyl orbit and equals the relative orbit of the projected
    dominant representative.
    """
    datum = group.datum
    dom, _ = datum.weyl.dominant_representative(mu)
    base = group.coinv.project(dom)
    return group.w0_orbit(base)


def _lambda_classes(group, mu):
    if hasattr(mu, "free"):
        return group.w0_orbit(group.dominant_class(mu))
    return lambda_mu(group, tuple(mu))


@dataclass
class AdmissibleSet:
    mu_description: str
    facet: Facet
    elements: frozenset
    maxima: frozenset

    @property
    def size(self):
        return len(self.elements)


def admissible_set(group, mu, facet=None, length_cap=64):
    """The mu-admissible set relative to a facet (alcove when facet is None).

    mu may be an absolute cocharacter (tuple) or a coinvariant class.  The
    alcove case is the downward Bruhat closure of the translations by the
    projected orbit; for a general facet the elements are the max-min
    double-coset representatives.  ``length_cap`` bounds the length of the
    translations (the enumeration blows up combinatorially beyond it).
    """
    lam = _lambda_classes(group, mu)
    tops = [group.translation(c) for c in lam]
    for t in tops:
        if t.length > length_cap:
            raise CapExceededError(
                f"translation length {t.length} exceeds cap {length_cap}")
    closure = {}
    frontier = []
    for t in tops:
        if t not in closure:
            closure[t] = None
            frontier.append(t)
    while frontier:
        nxt = []
        for g in frontier:
            om, letters = g.reduced_word()
            for k in range(len(letters)):
                sub = letters[:k] + letters[k + 1:]
                cand = group.element_from_word(sub, om)
                if cand not in closure:
                    closure[cand] = None
                    nxt.append(cand)
        frontier = nxt
    adm = set(closure)
    if facet is not None and facet.letters:
        adm = {group.dc_rep(g, facet.letters) for g in adm}
    kclasses = {(group.kottwitz(g).free, group.kottwitz(g).torsion) for g in adm}
    if len(kclasses) > 1:
        raise InternalInvariantError(
            "admissible set spans several connected components")
    maxima = bruhat_maxima(group, adm)
    return AdmissibleSet(repr(mu), facet, frozenset(adm), frozenset(maxima))


def bruhat_maxima(group, elements):
    """Elements of the set not strictly below another element of the set."""
    els = sorted(elements, key=lambda g: -g.length)
    maxima = []
    for g in els:
        dominated = False
        for h in els:
            if h.length > g.length and group.bruhat_leq(g, h):
                dominated = True
                break
        if dominated:
            continue
        maxima.append(g)
    return maxima


def maximal_admissible(group, mu, facet, length_cap=64):
    """(maxima, count) of the admissible set relative to the facet."""
    adm = admissible_set(group, mu, facet, length_cap=length_cap)
    return adm.maxima, len(adm.maxima)


def predicted_maxima(group, mu, facet):
    """Closed-form description of the maxima: translations by the
    facet-dominant representatives of the orbit of the projected class."""
    lam = _lambda_classes(group, mu)
    reps = {facet.facet_dominant_rep(c) for c in lam}
    return {group.translation(c) for c in reps}


def double_coset_count(group, cls, facet):
    """|W_{0,J} \\ W_0 / W_{0,mu}| for the stabilizer of the class."""
    stab = {w for w in group.w0.elements
            if group.w0.act_class(w, cls) == cls}
    seen = set()
    count = 0
    for w in group.w0.elements:
        if w in seen:
            continue
        count += 1
        coset = set()
        frontier = [w]
        coset.add(w)
        while frontier:
            nxt = []
            for x in frontier:
                for a in facet.w0j:
                    for b in stab:
                        y = a * x * b
                        if y not in coset:
                            coset.add(y)
                            nxt.append(y)
            frontier = nxt
        seen |= coset
    return count


def max_double_coset_rep(group, g, facet):
    """The maximal-length element of {(w' g w'')^J}, by full enumeration.

    Uniqueness of the maximum is asserted; a violation would mean the
    underlying coset combinatorics is broken for this preset.
    """
    seen = set()
    best = None
    for w1 in facet.parahoric:
        for w2 in facet.parahoric:
            rep = group.min_coset_rep(w1 * g * w2, facet.letters)
            seen.add(rep)
    top = max(r.length for r in seen)
    tops = [r for r in seen if r.length == top]
    if len(tops) != 1:
        raise InternalInvariantError(
            "maximal double-coset representative is not unique")
    best = tops[0]
    fast = group.dc_rep(g, facet.letters)
    if fast != best:
        raise InternalInvariantError(
            "double-coset ascent disagrees with enumeration")
    return best


def schubert_components(group, mu, facet, length_cap=64):
    """Stratum dimension table: (element, dimension=length), top entries
    flagged as irreducible components."""
    adm = admissible_set(group, mu, facet, length_cap=length_cap)
    top = max(g.length for g in adm.elements)
    rows = [(g, g.length, g.length == top) for g in adm.elements]
    rows.sort(key=lambda r: (-r[1], group.element_to_string(r[0])))
    return rows


def in_min_double_coset_reps(group, g, letters):
    """Whether g is the max-min representative of its double coset."""
    return group.dc_rep(g, letters) == g


def parity_check(group, facet, bound):
    """Within each connected component, all strata of bounded length must
    have one parity; returns (ok, witness_pair_or_None).

    Components are indexed by the torsion part of pi1(G)_I; free central
    directions translate the picture without changing lengths.
    """
    ball = sorted(group.affine_ball(bound), key=lambda g: (g.length, g.key()))
    omegas = group.omega_torsion_representatives()
    by_class = {}
    for key, om in sorted(omegas.items()):
        members = []
        for w in ball:
            u = w * om
            if group.dc_rep(u, facet.letters) == u:
                members.append(u)
        by_class[key] = members
    for key, members in by_class.items():
        parities = {}
        for u in members:
            p = u.length % 2
            if (1 - p) in parities:
                return False, (parities[1 - p], u)
            parities.setdefault(p, u)
    return True, None


def default_mu_sample(group, pairing_bound=10):
    """Dominant classes with <mu, 2 rho> bounded, plus zero and a regular one."""
    co = group.coinv
    f = co.free_rank
    box = range(-pairing_bound, pairing_bound + 1)
    torsion_choices = [range(d) for d in co.torsion]
    out = []
    seen = set()
    regular = None
    for free in iproduct(*[box] * f):
        for tors in iproduct(*torsion_choices):
            cls = co.make(free, tors)
            if not group.is_dominant_class(cls):
                continue
            val = group.pairing_two_rho(cls)
            is_reg = all(dot(fam.covector, cls.free) > 0 for fam in group.families)
            if is_reg and (regular is None or
                           val < group.pairing_two_rho(regular)):
                regular = cls
            if val <= pairing_bound and cls not in seen:
                seen.add(cls)
                out.append(cls)
    if regular is not None and regular not in seen:
        out.append(regular)
    out.sort(key=lambda c: (group.pairing_two_rho(c), c.free, c.torsion))
    return out


def speciality_report(group, mu_sample=None, bound=None, length_cap=64):
    """Per-facet table of the three finite speciality criteria.

    Columns: is_special, parity of strata up to the bound, uniqueness of the
    maximal admissible element over the mu sample.  The three columns are
    expected to agree; rows where they do not are flagged (a finite check
    can in principle miss a witness, so disagreement is reported rather
    than raised).
    """
    if mu_sample is None:
        mu_sample = default_mu_sample(group)
    if bound is None:
        lmax = max((group.translation(c).length for c in mu_sample), default=0)
        bound = lmax + 2
    rows = []
    for facet in enumerate_facets(group):
        special = facet.is_special()
        parity_ok, witness = parity_check(group, facet, bound)
        unique = True
        nonunique_mu = None
        counts = []
        for cls in mu_sample:
            maxima, count = maximal_admissible(group, cls, facet,
                                               length_cap=length_cap)
            counts.append(count)
            if count != 1 and unique:
                unique = False
                nonunique_mu = cls
        agree = special == parity_ok == unique
        rows.append({
            "facet": facet.letters,
            "special": special,
            "parity": parity_ok,
            "parity_witness": witness,
            "unique_max": unique,
            "nonunique_mu": nonunique_mu,
            "component_counts": tuple(counts),
            "bound": bound,
            "agree": agree,
        })
    return rows
