"""Conjugacy classes, centralizers and coset systems in B_n and S_n.

The class element ordering is deterministic: sorted by the canonical text
format, with the defining representative moved to the front as t_1.  Coset
representatives g_i are the lexicographically least conjugators (again in
text-format order), except for the transposition preset which reproduces
the explicit g_{kj} table for the class of (1 2) in S_n.
"""

from __future__ import annotations

from math import comb

from .groups import (
    BudgetExceeded,
    GroupContext,
    Permutation,
    SignedPermutation,
    Sn,
    nu_left,
    nu_right,
)


class ConjugacyClass:
    """The conjugacy class of `rep` in `group`, with a fixed numeration.

    t_1 = rep; the remaining elements are in canonical text-format order.
    `conjugator[t]` is the BFS word taking rep to t (some g with g |> rep = t).
    """

    def __init__(self, group: GroupContext, rep: SignedPermutation):
        if rep not in group:
            raise ValueError(f"{rep} is not in {group}")
        if group.order > GroupContext.MAX_ORDER:
            raise BudgetExceeded("group too large for orbit enumeration")
        self.group = group
        self.rep = rep
        self.conjugator = _orbit_with_transversal(group, rep)
        rest = sorted(
            (t for t in self.conjugator if t != rep), key=SignedPermutation.sort_key
        )
        self.elements = [rep] + rest
        self.index = {t: i for i, t in enumerate(self.elements)}
        self.class_key = rep.signed_cycle_type()

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def centralizer(self) -> "Centralizer":
        return Centralizer(self)

    def coset_system(self) -> "CosetSystem":
        return CosetSystem(self)

    def to_json(self) -> dict:
        return {
            "group": repr(self.group),
            "representative": self.rep.format(),
            "class_key": list(self.class_key),
            "size": self.size,
            "elements": [t.format() for t in self.elements],
        }

    def __repr__(self) -> str:
        return f"ConjugacyClass({self.group!r}, {self.rep.format()!r}, size={self.size})"


def _orbit_with_transversal(group: GroupContext, rep: SignedPermutation) -> dict:
    """BFS orbit of rep under conjugation; returns {element: conjugator}."""
    gens = group.generators()
    gens = gens + [g.inverse() for g in gens]
    transversal = {rep: group.identity}
    frontier = [rep]
    while frontier:
        new_frontier = []
        for t in frontier:
            g_t = transversal[t]
            for g in gens:
                u = g.conjugate(t)
                if u not in transversal:
                    transversal[u] = g * g_t
                    new_frontier.append(u)
        frontier = new_frontier
    return transversal


def conjugacy_class(group: GroupContext, rep: SignedPermutation) -> ConjugacyClass:
    return ConjugacyClass(group, rep)


class Centralizer:
    """G^s = {g in G : gs = sg}, enumerated from Schreier generators."""

    def __init__(self, cls: ConjugacyClass):
        self.cls = cls
        self.base = cls.rep
        self.group = cls.group
        expect = self.group.order // cls.size
        self.generators = []
        element_set = {self.group.identity}
        # Consume Schreier generators until the closure reaches the size
        # forced by |O_s| * |G^s| = |G|.
        for schreier in _schreier_generators(cls):
            if len(element_set) == expect:
                break
            if schreier in element_set:
                continue
            self.generators.append(schreier)
            frontier = list(element_set)
            while frontier:
                new_frontier = []
                for x in frontier:
                    for g in self.generators:
                        y = g * x
                        if y not in element_set:
                            element_set.add(y)
                            new_frontier.append(y)
                frontier = new_frontier
        if len(element_set) != expect:
            raise AssertionError(
                f"centralizer closure has {len(element_set)} elements, "
                f"expected {expect}"
            )
        self.elements = sorted(element_set, key=SignedPermutation.sort_key)
        self.element_set = element_set

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.element_set

    def to_json(self) -> dict:
        return {
            "group": repr(self.group),
            "base": self.base.format(),
            "order": self.order,
            "elements": [g.format() for g in self.elements],
        }


def _schreier_generators(cls: ConjugacyClass):
    """Yield Schreier generators of the stabilizer of rep, lazily."""
    gens = cls.group.generators()
    gens = gens + [g.inverse() for g in gens]
    for t, g_t in cls.conjugator.items():
        for a in gens:
            u = a.conjugate(t)
            schreier = cls.conjugator[u].inverse() * a * g_t
            if not schreier.is_identity():
                yield schreier


def centralizer(group: GroupContext, s: SignedPermutation) -> Centralizer:
    return Centralizer(ConjugacyClass(group, s))


class CosetSystem:
    """Representatives g_i with g_i |> s = t_i and g_1 = id.

    The g_i form a left transversal of G^s in G.  Default choice: the
    text-format-least element of each coset g C; `transposition_preset`
    builds the explicit table for the class of (1 2) in S_n instead.
    """

    def __init__(self, cls: ConjugacyClass, reps: list | None = None):
        self.cls = cls
        self.centralizer = cls.centralizer()
        if reps is None:
            cent = self.centralizer.elements
            reps = []
            for t in cls.elements:
                g0 = cls.conjugator[t]
                reps.append(min((g0 * c for c in cent), key=SignedPermutation.sort_key))
        self.reps = reps
        self._check()
        self._index_of = {t: i for i, t in enumerate(cls.elements)}

    def _check(self):
        if len(self.reps) != self.cls.size:
            raise ValueError("one representative per class element required")
        if not self.reps[0].is_identity():
            raise ValueError("g_1 must be the identity")
        for g, t in zip(self.reps, self.cls.elements):
            if g.conjugate(self.cls.rep) != t:
                raise ValueError(f"g = {g} does not conjugate s to {t}")

    @property
    def size(self) -> int:
        return len(self.reps)

    def __getitem__(self, i: int) -> SignedPermutation:
        return self.reps[i]

    def zeta(self, i: int, h: SignedPermutation) -> tuple:
        """Solve h g_i = g_j gamma with gamma in G^s; returns (j, gamma)."""
        t_j = h.conjugate(self.cls.elements[i])
        j = self._index_of[t_j]
        gamma = self.reps[j].inverse() * h * self.reps[i]
        return j, gamma

    def zeta_right(self, i: int, u: SignedPermutation) -> tuple:
        """Solve g_i^-1 u = gamma g_j^-1 with gamma in G^s; returns (j, gamma).

        This is the coset map attached to the right coset decomposition
        G = U G^s g_j^-1; it satisfies zeta_right(i, h^-1) = gamma^-1 when
        h g_i = g_j gamma.
        """
        j, gamma_inv = self.zeta(i, u.inverse())
        return j, gamma_inv.inverse()

    def to_json(self) -> dict:
        return {
            "class": self.cls.rep.format(),
            "reps": [g.format() for g in self.reps],
        }


def coset_system(cls: ConjugacyClass) -> CosetSystem:
    return CosetSystem(cls)


def transposition_preset(n: int) -> CosetSystem:
    """The class of (1 2) in S_n with the explicit coset table

        g_{kj} = id         (k,j) = (1,2)
                 (2 j)      k = 1, j > 2
                 (1 j)      k = 2, j > 2
                 (1 k)(2 j) 2 < k < j

    ordered so that t_i runs over the transpositions (k j), k < j, in
    lexicographic order of (k, j).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    group = Sn(n)
    sigma = SignedPermutation.from_perm(Permutation.from_cycles(n, [(1, 2)]))
    cls = ConjugacyClass(group, sigma)

    pairs = [(k, j) for k in range(1, n + 1) for j in range(k + 1, n + 1)]
    order = []
    reps = []
    for k, j in pairs:
        order.append(SignedPermutation.from_perm(Permutation.from_cycles(n, [(k, j)])))
        if (k, j) == (1, 2):
            g = Permutation.identity(n)
        elif k == 1:
            g = Permutation.from_cycles(n, [(2, j)])
        elif k == 2:
            g = Permutation.from_cycles(n, [(1, j)])
        else:
            g = Permutation.from_cycles(n, [(1, k), (2, j)])
        reps.append(SignedPermutation.from_perm(g))

    cls.elements = order
    cls.index = {t: i for i, t in enumerate(order)}
    return CosetSystem(cls, reps=reps)


# -- juxtaposition factorizations (orthogonal case) -----------------------


def _require_orthogonal(x: SignedPermutation, y: SignedPermutation):
    if not x.is_orthogonal_to(y):
        raise ValueError(
            f"{x} and {y} are not orthogonal (shared sign-cycle length)"
        )


def centralizer_factorization(
    gx: GroupContext, x: SignedPermutation, gy: GroupContext, y: SignedPermutation
) -> dict:
    """B_{n+m}^{x#y} = nu->(B_n^x) . nu<-(B_m^y), certified as a bijection.

    Returns the two factors, the ambient centralizer, and the product map.
    """
    _require_orthogonal(x, y)
    n, m = x.n, y.n
    cx = centralizer(gx, x)
    cy = centralizer(gy, y)
    ambient = GroupContext(n + m, signed=gx.signed or gy.signed)
    big = centralizer(ambient, x.juxtapose(y))

    products = {}
    for u in cx:
        nu_u = nu_right(u, m)
        for v in cy:
            w = nu_u * nu_left(v, n)
            if w in products:
                raise AssertionError("product map is not injective")
            products[w] = (u, v)
    if set(products) != big.element_set:
        raise AssertionError("product map is not onto the centralizer")
    return {
        "left_factor": cx,
        "right_factor": cy,
        "centralizer": big,
        "product_map": products,
    }


def class_juxtaposition(
    gx: GroupContext, x: SignedPermutation, gy: GroupContext, y: SignedPermutation
) -> ConjugacyClass:
    """The juxtaposed class O_{x#y}, certified against O_x # O_y.

    O_x # O_y is the orbit of x#y under the embedded subgroup B_n x B_m
    and is a subrack of O_{x#y}; the ambient class additionally moves the
    block supports, so its size carries the binomial placement factor:
    |O_{x#y}| = C(n+m, n) |O_x| |O_y|.  Both facts are checked.
    """
    _require_orthogonal(x, y)
    ambient = GroupContext(x.n + y.n, signed=gx.signed or gy.signed)
    cls_x = ConjugacyClass(gx, x)
    cls_y = ConjugacyClass(gy, y)
    big = ConjugacyClass(ambient, x.juxtapose(y))
    if big.size != comb(x.n + y.n, x.n) * cls_x.size * cls_y.size:
        raise AssertionError("class size mismatch against the placement count")
    for u in cls_x:
        for v in cls_y:
            if u.juxtapose(v) not in big:
                raise AssertionError(f"{u} # {v} escapes the juxtaposed class")
    return big
