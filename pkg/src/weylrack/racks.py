"""Finite racks, the sq test, and type-D certificates.

A conjugacy class is a rack under x |> y = x y x^-1.  A pair of disjoint
nonempty subracks R, S with y|>x in R and x|>y in S (for x in R, y in S)
together with r in R, s in S such that sq(r, s) != s is a type-D
certificate; it proves the class is of type D.

Certificate search is constructive-first: closed-form constructions keyed
by the cycle type, then pullback along the projection to S_n, then a
two-seed closure search, then randomized bipartition repair.  Absence of a
certificate is always reported as inconclusive, never as "not of type D".
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .conjugacy import ConjugacyClass
from .groups import GroupContext, Permutation, SignedPermutation, Sn


def sq(x, y):
    """sq(x, y) = x |> (y |> (x |> y)) for group elements or rack pairs."""
    return x.conjugate(y.conjugate(x.conjugate(y)))


# -- closed forms for sq in B_n (Lemma-style sign formulas) ----------------


def _xor(u: tuple, v: tuple) -> tuple:
    return tuple(a ^ b for a, b in zip(u, v))


def sq_signed(x: SignedPermutation, y: SignedPermutation) -> tuple:
    """Closed form for sq((a,tau),(b,mu)) = (c, lambda), no hypotheses.

    c   = a + tau.[b + mu.(a + tau.b + (tau|>mu).a) + (mu|>(tau|>mu)).b]
          + (tau|>(mu|>(tau|>mu))).a
    lam = tau|>(mu|>(tau|>mu))
    """
    a, tau = x.sign, x.perm
    b, mu = y.sign, y.perm
    tm = tau.conjugate(mu)  # tau|>mu
    mtm = mu.conjugate(tm)  # mu|>(tau|>mu)
    lam = tau.conjugate(mtm)
    inner = _xor(_xor(b, mu.act_on_signs(_xor(_xor(a, tau.act_on_signs(b)), tm.act_on_signs(a)))), mtm.act_on_signs(b))
    c = _xor(_xor(a, tau.act_on_signs(inner)), lam.act_on_signs(a))
    return c, lam


def sq_signed_commuting(x: SignedPermutation, y: SignedPermutation) -> tuple:
    """Closed form when the permutation parts commute:

    c = a + tau mu.a + tau mu^2.a + mu.a + tau.b + tau^2 mu.b + tau mu.b,
    and lambda = mu.
    """
    a, tau = x.sign, x.perm
    b, mu = y.sign, y.perm
    if not tau.commutes_with(mu):
        raise ValueError("permutation parts do not commute")
    tm = tau * mu
    c = a
    for p in (tm, tm * mu, mu):
        c = _xor(c, p.act_on_signs(a))
    for p in (tau, tau * tm, tm):
        c = _xor(c, p.act_on_signs(b))
    return c, mu


def collapse_lhs(a: tuple, tau: Permutation, mu: Permutation) -> tuple:
    """a + tau mu.a + tau mu^2.a + mu.a (commuting case)."""
    out = a
    tm = tau * mu
    for p in (tm, tm * mu, mu):
        out = _xor(out, p.act_on_signs(a))
    return out


def collapse_rhs(b: tuple, tau: Permutation, mu: Permutation) -> tuple:
    """b + tau.b + tau^2 mu.b + tau mu.b (commuting case)."""
    out = b
    tm = tau * mu
    for p in (tau, tau * tm, tm):
        out = _xor(out, p.act_on_signs(b))
    return out


def sq_fixes_second(x: SignedPermutation, y: SignedPermutation) -> bool:
    """sq(a tau, b mu) == b mu, decided by the commuting-case sign identity."""
    tau, mu = x.perm, y.perm
    if not tau.commutes_with(mu):
        raise ValueError("permutation parts do not commute")
    return collapse_lhs(x.sign, tau, mu) == collapse_rhs(y.sign, tau, mu)


# -- racks ----------------------------------------------------------------


class FiniteRack:
    """A finite rack with indexed elements.

    Either backed by an explicit m x m operation table, or by conjugation
    in an ambient group (the usual case here).
    """

    def __init__(self, elements: list, op, source=None):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate rack elements")
        self._op = op
        self.source = source

    @classmethod
    def from_table(cls, elements: list, table: list) -> "FiniteRack":
        idx = {x: i for i, x in enumerate(elements)}
        rack = cls(elements, lambda x, y: elements[table[idx[x]][idx[y]]])
        rack._table = table
        return rack

    @classmethod
    def from_class(cls, conj_class: ConjugacyClass) -> "FiniteRack":
        rack = cls(
            conj_class.elements,
            lambda x, y: x.conjugate(y),
            source=conj_class,
        )
        return rack

    @property
    def size(self) -> int:
        return len(self.elements)

    def op(self, x, y):
        """x |> y."""
        z = self._op(x, y)
        if z not in self.index:
            raise ValueError(f"{x} |> {y} = {z} escapes the rack")
        return z

    def sq(self, x, y):
        return self.op(x, self.op(y, self.op(x, y)))

    def table(self) -> list:
        return [[self.index[self.op(x, y)] for y in self.elements] for x in self.elements]

    def check_axioms(self, sample: int | None = None, seed: int = 0) -> None:
        """Self-distributivity and left-invertibility; exhaustive unless
        `sample` caps the number of random triples."""
        elems = self.elements
        for x in elems:
            images = {self.op(x, y) for y in elems}
            if len(images) != len(elems):
                raise AssertionError(f"y -> {x} |> y is not a bijection")
        if sample is None:
            triples = product(elems, elems, elems)
        else:
            rng = random.Random(seed)
            triples = (
                (rng.choice(elems), rng.choice(elems), rng.choice(elems))
                for _ in range(sample)
            )
        for x, y, z in triples:
            if self.op(x, self.op(y, z)) != self.op(self.op(x, y), self.op(x, z)):
                raise AssertionError(
                    f"self-distributivity fails at ({x}, {y}, {z})"
                )


def conjugation_rack(conj_class: ConjugacyClass) -> FiniteRack:
    return FiniteRack.from_class(conj_class)


# -- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class TypeDCertificate:
    """Witness that a rack is of type D.

    R, S, r, s are indices into the rack's element ordering.
    """

    rack: FiniteRack
    R: tuple
    S: tuple
    r: int
    s: int
    strategy: str = ""
    notes: tuple = ()

    def to_json(self) -> dict:
        elems = self.rack.elements
        r, s = elems[self.r], elems[self.s]
        payload = {
            "R": list(self.R),
            "S": list(self.S),
            "r": self.r,
            "s": self.s,
            "sq_value": str(self.rack.sq(r, s)),
            "strategy": self.strategy,
        }
        if self.rack.source is not None:
            payload["class"] = self.rack.source.rep.format()
            payload["group"] = repr(self.rack.source.group)
        if self.notes:
            payload["notes"] = list(self.notes)
        return payload


@dataclass
class CertificateCheck:
    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(rack: FiniteRack, cert: TypeDCertificate) -> CertificateCheck:
    """Full check: nonemptiness, disjointness, subrack closure, cross
    closure, and sq(r, s) != s.  Failures carry concrete witnesses."""
    failures = []
    m = rack.size
    if not cert.R or not cert.S:
        failures.append("R and S must be nonempty")
    if any(not 0 <= i < m for i in cert.R) or any(not 0 <= i < m for i in cert.S):
        failures.append("index out of range")
        return CertificateCheck(False, failures)
    R = [rack.elements[i] for i in cert.R]
    S = [rack.elements[i] for i in cert.S]
    if set(cert.R) & set(cert.S):
        failures.append(f"R and S overlap: {sorted(set(cert.R) & set(cert.S))}")
    Rset, Sset = set(R), set(S)
    for x in R:
        for y in R:
            if rack.op(x, y) not in Rset:
                failures.append(f"R not closed: {x} |> {y}")
    for x in S:
        for y in S:
            if rack.op(x, y) not in Sset:
                failures.append(f"S not closed: {x} |> {y}")
    for x in R:
        for y in S:
            if rack.op(x, y) not in Sset:
                failures.append(f"cross closure fails: {x} |> {y} not in S")
            if rack.op(y, x) not in Rset:
                failures.append(f"cross closure fails: {y} |> {x} not in R")
    if cert.r not in set(cert.R):
        failures.append("r must lie in R")
    if cert.s not in set(cert.S):
        failures.append("s must lie in S")
    if not failures:
        r, s = rack.elements[cert.r], rack.elements[cert.s]
        if rack.sq(r, s) == s:
            failures.append(f"sq({r}, {s}) == {s}")
    return CertificateCheck(not failures, failures)


# -- search ----------------------------------------------------------------


@dataclass
class SearchConfig:
    seed: int = 0
    max_commuting_partners: int = 200
    max_seed_pairs: int = 40000
    max_closure_size: int = 4000
    max_witness_pairs: int = 20000
    exhaustive_limit: int = 10
    random_restarts: int = 50
    use_pullback: bool = True


@dataclass
class SearchResult:
    certificate: TypeDCertificate | None
    attempted: list
    exhausted: bool = False

    def __bool__(self) -> bool:
        return self.certificate is not None


# shared cache of S_n-rack search results, keyed by (n, cycle type)
_SN_CACHE: dict = {}


def find_type_d_certificate(
    rack: FiniteRack, config: SearchConfig | None = None
) -> SearchResult:
    config = config or SearchConfig()
    attempted = []
    cls = rack.source
    signed = cls is not None and cls.group.signed
    strategies = [("commuting-perm-pair", _strategy_commuting_pair)]
    if signed:
        strategies.append(("fixed-point-sign-split", _strategy_fixed_point_split))
        if config.use_pullback:
            strategies.append(("projection-pullback", _strategy_pullback))
    strategies.append(("seed-closure", _strategy_seed_closure))
    if rack.size <= config.exhaustive_limit:
        strategies.append(("exhaustive-bipartition", _strategy_exhaustive))
    strategies.append(("randomized-repair", _strategy_randomized))

    exhausted = False
    for name, fn in strategies:
        cert = fn(rack, config)
        attempted.append(name)
        if cert is not None:
            check = verify_certificate(rack, cert)
            if not check.ok:
                raise AssertionError(
                    f"strategy {name} produced an invalid certificate: {check.failures}"
                )
            return SearchResult(cert, attempted)
        if name == "exhaustive-bipartition":
            exhausted = True
    return SearchResult(None, attempted, exhausted=exhausted)


def _class_rack(rack: FiniteRack) -> ConjugacyClass:
    if rack.source is None:
        raise ValueError("strategy needs a conjugacy-class rack")
    return rack.source


def _perm_groups(cls: ConjugacyClass) -> dict:
    groups: dict = {}
    for x in cls.elements:
        groups.setdefault(x.perm, []).append(x)
    return groups


def _strategy_commuting_pair(rack: FiniteRack, config: SearchConfig):
    """R and S cut out by two distinct commuting permutation parts.

    Covers the n-cycle / (3^2) / (2^2 3) constructions: there the two
    subracks are the class intersected with Z_2^n x| {tau} and
    Z_2^n x| {mu} for commuting conjugate tau != mu.  Witnesses are found
    through the commuting-case sign identity.
    """
    cls = _class_rack(rack)
    if not cls.group.signed:
        return None  # sq(r, s) == s identically when signs are absent
    tau0 = cls.rep.perm
    if tau0.is_identity():
        return None
    groups = _perm_groups(cls)
    # candidate partners: powers of tau0 first, then every commuting
    # permutation part in the class
    candidates = []
    seen = {tau0}
    p = tau0 * tau0
    while p != tau0:
        if p in groups and p not in seen:
            candidates.append(p)
            seen.add(p)
        p = p * tau0
    for mu in sorted(groups, key=lambda q: q.images):
        if mu not in seen and mu.commutes_with(tau0):
            candidates.append(mu)
            seen.add(mu)
        if len(candidates) >= config.max_commuting_partners:
            break

    R = groups[tau0]
    for mu in candidates:
        S = groups[mu]
        witness = _commuting_witness(R, S, tau0, mu)
        if witness is None:
            continue
        r, s = witness
        return TypeDCertificate(
            rack,
            tuple(sorted(rack.index[x] for x in R)),
            tuple(sorted(rack.index[x] for x in S)),
            rack.index[r],
            rack.index[s],
            strategy="commuting-perm-pair",
            notes=(
                "R and S are the class intersected with the sign-vector "
                f"cosets of {tau0} and {mu}",
            ),
        )
    return None


def _commuting_witness(R: list, S: list, tau: Permutation, mu: Permutation):
    """First (r, s) with sq(r, s) != s, via the sign identity; None if the
    identity holds on all of R x S."""
    rhs = [(collapse_rhs(s.sign, tau, mu), s) for s in S]
    for r in R:
        lhs = collapse_lhs(r.sign, tau, mu)
        for rv, s in rhs:
            if lhs != rv:
                return r, s
    return None


def _strategy_fixed_point_split(rack: FiniteRack, config: SearchConfig):
    """Split the sub-rack of elements fixing a point f by the sign bit at f.

    Needs the class to carry both positive and negative fixed points;
    the witness is any pair whose permutation parts xi, lam satisfy
    sq(xi, lam) != lam.
    """
    cls = _class_rack(rack)
    key = cls.class_key
    if (1, 0) not in key or (1, 1) not in key:
        return None
    tau0 = cls.rep.perm
    fixed = tau0.fixed_points()
    if not fixed:
        return None
    f = max(fixed)
    R = [x for x in cls.elements if x.perm(f) == f and x.sign[f] == 0]
    S = [x for x in cls.elements if x.perm(f) == f and x.sign[f] == 1]
    if not R or not S:
        return None
    # look for a witness at the level of permutation parts first
    perms_R: dict = {}
    for x in R:
        perms_R.setdefault(x.perm, x)
    perms_S: dict = {}
    for y in S:
        perms_S.setdefault(y.perm, y)
    for xi, r in perms_R.items():
        for lam, s in perms_S.items():
            if sq(xi, lam) != lam:
                return TypeDCertificate(
                    rack,
                    tuple(sorted(rack.index[x] for x in R)),
                    tuple(sorted(rack.index[x] for x in S)),
                    rack.index[r],
                    rack.index[s],
                    strategy="fixed-point-sign-split",
                    notes=(f"split on the sign bit at fixed point {f + 1}",),
                )
    # fall back to a direct scan over element pairs
    budget = config.max_witness_pairs
    for r in R:
        for s in S:
            budget -= 1
            if budget < 0:
                return None
            if sq(r, s) != s:
                return TypeDCertificate(
                    rack,
                    tuple(sorted(rack.index[x] for x in R)),
                    tuple(sorted(rack.index[x] for x in S)),
                    rack.index[r],
                    rack.index[s],
                    strategy="fixed-point-sign-split",
                    notes=(f"split on the sign bit at fixed point {f + 1}",),
                )
    return None


def _strategy_pullback(rack: FiniteRack, config: SearchConfig):
    """Project to the S_n class of the permutation part, search there, and
    pull the decomposition back through the rack epimorphism."""
    cls = _class_rack(rack)
    tau0 = cls.rep.perm
    if tau0.is_identity():
        return None
    n = cls.group.n
    key = (n, tau0.cycle_type())
    if key not in _SN_CACHE:
        target = ConjugacyClass(Sn(n), SignedPermutation.from_perm(tau0))
        target_rack = FiniteRack.from_class(target)
        sub = SearchConfig(**vars(config))
        sub.use_pullback = False
        _SN_CACHE[key] = (target_rack, find_type_d_certificate(target_rack, sub))
    target_rack, result = _SN_CACHE[key]
    if not result:
        return None
    down = result.certificate
    perms_R = {target_rack.elements[i].perm for i in down.R}
    perms_S = {target_rack.elements[i].perm for i in down.S}
    perm_r = target_rack.elements[down.r].perm
    perm_s = target_rack.elements[down.s].perm
    R = [i for i, x in enumerate(rack.elements) if x.perm in perms_R]
    S = [i for i, x in enumerate(rack.elements) if x.perm in perms_S]
    r = next(i for i in R if rack.elements[i].perm == perm_r)
    s = next(i for i in S if rack.elements[i].perm == perm_s)
    return TypeDCertificate(
        rack,
        tuple(R),
        tuple(S),
        r,
        s,
        strategy="projection-pullback",
        notes=(
            f"pulled back along pi from the S_{n} class of {tau0} "
            f"(downstairs strategy: {down.strategy})",
        ),
    )


def _closure_from_seeds(rack: FiniteRack, x, y, max_size: int):
    """Grow the smallest pair of subsets containing x, y that is closed
    under the decomposition rules; None on collision or size overflow."""
    R, S = {x}, {y}
    queue = [(x, 0), (y, 1)]
    while queue:
        u, side = queue.pop()
        mine, other = (R, S) if side == 0 else (S, R)
        for v in list(mine):
            for w in (rack.op(u, v), rack.op(v, u)):
                if w not in mine:
                    if w in other:
                        return None
                    mine.add(w)
                    queue.append((w, side))
        for v in list(other):
            uv = rack.op(u, v)  # lands on the other side
            vu = rack.op(v, u)  # lands on ours
            if uv not in other:
                if uv in mine:
                    return None
                other.add(uv)
                queue.append((uv, 1 - side))
            if vu not in mine:
                if vu in other:
                    return None
                mine.add(vu)
                queue.append((vu, side))
        if len(R) + len(S) > max_size:
            return None
    return R, S


def _strategy_seed_closure(rack: FiniteRack, config: SearchConfig):
    """Two-seed closure: every decomposition generated by one element on
    each side is found by this scan."""
    elems = rack.elements
    budget = config.max_seed_pairs
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            if i == j:
                continue
            budget -= 1
            if budget < 0:
                return None
            grown = _closure_from_seeds(rack, x, y, config.max_closure_size)
            if grown is None:
                continue
            R, S = grown
            witness = _witness_scan(rack, R, S, config.max_witness_pairs)
            if witness is None:
                continue
            r, s = witness
            return TypeDCertificate(
                rack,
                tuple(sorted(rack.index[u] for u in R)),
                tuple(sorted(rack.index[u] for u in S)),
                rack.index[r],
                rack.index[s],
                strategy="seed-closure",
                notes=(f"grown from seeds {x}, {y}",),
            )
    return None


def _witness_scan(rack: FiniteRack, R, S, budget: int):
    for r in sorted(R, key=lambda u: rack.index[u]):
        for s in sorted(S, key=lambda u: rack.index[u]):
            budget -= 1
            if budget < 0:
                return None
            if rack.sq(r, s) != s:
                return r, s
    return None


def _strategy_exhaustive(rack: FiniteRack, config: SearchConfig):
    """All assignments of elements to {R, S, neither}; only for tiny racks."""
    elems = rack.elements
    m = len(elems)
    for assignment in product((0, 1, 2), repeat=m):
        R = [elems[i] for i in range(m) if assignment[i] == 0]
        S = [elems[i] for i in range(m) if assignment[i] == 1]
        if not R or not S:
            continue
        cert = _check_candidate(rack, R, S)
        if cert is not None:
            return cert
    return None


def _check_candidate(rack: FiniteRack, R: list, S: list):
    Rset, Sset = set(R), set(S)
    for x in R:
        for y in R:
            if rack.op(x, y) not in Rset:
                return None
    for x in S:
        for y in S:
            if rack.op(x, y) not in Sset:
                return None
    for x in R:
        for y in S:
            if rack.op(x, y) not in Sset or rack.op(y, x) not in Rset:
                return None
    witness = _witness_scan(rack, Rset, Sset, len(R) * len(S))
    if witness is None:
        return None
    r, s = witness
    return TypeDCertificate(
        rack,
        tuple(sorted(rack.index[u] for u in R)),
        tuple(sorted(rack.index[u] for u in S)),
        rack.index[r],
        rack.index[s],
        strategy="exhaustive-bipartition",
    )


def _strategy_randomized(rack: FiniteRack, config: SearchConfig):
    """Seeded random two-seed restarts; a cheap last resort."""
    rng = random.Random(config.seed)
    elems = rack.elements
    if len(elems) < 2:
        return None
    for _ in range(config.random_restarts):
        x, y = rng.sample(elems, 2)
        grown = _closure_from_seeds(rack, x, y, config.max_closure_size)
        if grown is None:
            continue
        R, S = grown
        witness = _witness_scan(rack, R, S, config.max_witness_pairs)
        if witness is None:
            continue
        r, s = witness
        return TypeDCertificate(
            rack,
            tuple(sorted(rack.index[u] for u in R)),
            tuple(sorted(rack.index[u] for u in S)),
            rack.index[r],
            rack.index[s],
            strategy="randomized-repair",
        )
    return None


# -- certificate transport -------------------------------------------------


def juxtaposition_extend_certificate(
    cert: TypeDCertificate, y: SignedPermutation
) -> TypeDCertificate:
    """Extend a certificate for O_x to one for O_{x # y} by juxtaposing
    every certificate element with the fixed element y."""
    check = verify_certificate(cert.rack, cert)
    if not check.ok:
        raise ValueError(f"input certificate is invalid: {check.failures}")
    cls = cert.rack.source
    if cls is None:
        raise ValueError("certificate must come from a conjugacy-class rack")
    x = cls.rep
    ambient = GroupContext(x.n + y.n, signed=True)
    big = ConjugacyClass(ambient, x.juxtapose(y))
    big_rack = FiniteRack.from_class(big)
    idx = big_rack.index

    def lift(i: int) -> int:
        return idx[cert.rack.elements[i].juxtapose(y)]

    return TypeDCertificate(
        big_rack,
        tuple(sorted(lift(i) for i in cert.R)),
        tuple(sorted(lift(i) for i in cert.S)),
        lift(cert.r),
        lift(cert.s),
        strategy="juxtaposition-extension",
        notes=(f"extended from {x.format()} by # {y.format()}",),
    )


class RackEpimorphism:
    """A surjective rack homomorphism, verified on construction."""

    def __init__(self, source: FiniteRack, target: FiniteRack, mapping):
        self.source = source
        self.target = target
        self.mapping = mapping
        hit = set()
        for x in source.elements:
            fx = mapping(x)
            if fx not in target.index:
                raise ValueError(f"image {fx} is not in the target rack")
            hit.add(fx)
        if len(hit) != target.size:
            raise ValueError("mapping is not surjective")
        for x in source.elements:
            for y in source.elements:
                if mapping(source.op(x, y)) != target.op(mapping(x), mapping(y)):
                    raise ValueError(
                        f"not a rack homomorphism at ({x}, {y})"
                    )

    def __call__(self, x):
        return self.mapping(x)


def pullback_type_d(
    hom: RackEpimorphism, cert: TypeDCertificate
) -> TypeDCertificate:
    """Pull a certificate back along a rack epimorphism: preimages of R
    and S with any lifts of r and s."""
    if cert.rack is not hom.target:
        raise ValueError("certificate does not live on the target rack")
    check = verify_certificate(hom.target, cert)
    if not check.ok:
        raise ValueError(f"input certificate is invalid: {check.failures}")
    t_elems = hom.target.elements
    R_down = {t_elems[i] for i in cert.R}
    S_down = {t_elems[i] for i in cert.S}
    r_down, s_down = t_elems[cert.r], t_elems[cert.s]
    R_up, S_up, r_up, s_up = [], [], None, None
    for i, x in enumerate(hom.source.elements):
        fx = hom(x)
        if fx in R_down:
            R_up.append(i)
            if r_up is None and fx == r_down:
                r_up = i
        elif fx in S_down:
            S_up.append(i)
            if s_up is None and fx == s_down:
                s_up = i
    if r_up is None or s_up is None:
        raise ValueError("empty fiber over r or s")
    return TypeDCertificate(
        hom.source,
        tuple(R_up),
        tuple(S_up),
        r_up,
        s_up,
        strategy="epimorphism-pullback",
    )
