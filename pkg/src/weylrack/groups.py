"""Exact arithmetic in S_n, Z_2^n and the semidirect product B_n = Z_2^n x| S_n.

Conventions (fixed once, everything else is written against them):

* permutations act on the left: (sigma*tau)(i) = sigma(tau(i));
* a permutation acts on a sign vector by (tau.a)_i = a_{tau^-1(i)};
* the product in B_n is (a,tau)(b,mu) = (a + tau.b, tau*mu).

Elements are immutable and hashable.  Indices are 0-based internally;
the text format and cycle notation are 1-based.
"""

from __future__ import annotations

import itertools
import re
from math import lcm
from typing import Iterable, Iterator


class Permutation:
    """A permutation of {0, ..., n-1} in one-line notation."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(n))

    @staticmethod
    def from_cycles(n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        """Build from 1-based cycles, e.g. from_cycles(5, [(1,2,3),(4,5)])."""
        images = list(range(n))
        for cyc in cycles:
            cyc = [c - 1 for c in cyc]
            if any(not 0 <= c < n for c in cyc) or len(set(cyc)) != len(cyc):
                raise ValueError(f"bad cycle {tuple(c + 1 for c in cyc)} for degree {n}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return Permutation(images)

    @staticmethod
    def parse(text: str, n: int) -> "Permutation":
        """Parse 1-based cycle notation, identity written as "()"."""
        text = text.strip()
        if text in ("", "()"):
            return Permutation.identity(n)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
            raise ValueError(f"cannot parse permutation {text!r}")
        cycles = [
            [int(tok) for tok in re.split(r"[\s,]+", body.strip())]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        return Permutation.from_cycles(n, cycles)

    # -- group operations ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch")
        im = self.images
        return Permutation(im[j] for j in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def conjugate(self, other: "Permutation") -> "Permutation":
        """self |> other = self * other * self^-1."""
        im = self.images
        inv = [0] * len(im)
        for i, j in enumerate(im):
            inv[j] = i
        return Permutation(im[other.images[inv[i]]] for i in range(len(im)))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self.images))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def act_on_signs(self, bits: tuple) -> tuple:
        """(tau.a)_i = a_{tau^-1(i)}."""
        out = [0] * len(bits)
        for j, i in enumerate(self.images):
            out[i] = bits[j]
        return tuple(out)

    # -- structure -------------------------------------------------------

    def cycles(self, include_fixed: bool = False) -> list:
        """Disjoint cycles as 0-based tuples, each starting at its minimum."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        """Sorted tuple of cycle lengths (including fixed points)."""
        return tuple(sorted(len(c) for c in self.cycles(include_fixed=True)))

    def fixed_points(self) -> tuple:
        return tuple(i for i, j in enumerate(self.images) if i == j)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def commutes_with(self, other: "Permutation") -> bool:
        a, b = self.images, other.images
        return all(a[b[i]] == b[a[i]] for i in range(len(a)))

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation.parse({format_cycles(self)!r}, {len(self.images)})"

    def __str__(self) -> str:
        return format_cycles(self)


def format_cycles(perm: Permutation) -> str:
    cycles = perm.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


class SignedPermutation:
    """An element (a, tau) of B_n = Z_2^n x| S_n.

    `sign` is the Z_2^n part as a 0/1 tuple (additive convention),
    `perm` the S_n part.  The paper writes the same element as a*tau.
    """

    __slots__ = ("sign", "perm", "_hash")

    def __init__(self, sign: Iterable[int], perm: Permutation):
        sign = tuple(sign)
        if len(sign) != len(perm.images):
            raise ValueError("sign vector length does not match permutation degree")
        if any(b not in (0, 1) for b in sign):
            raise ValueError(f"sign vector must be 0/1: {sign}")
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "_hash", hash((sign, perm.images)))

    def __setattr__(self, *a):
        raise AttributeError("SignedPermutation is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def identity(n: int) -> "SignedPermutation":
        return SignedPermutation((0,) * n, Permutation.identity(n))

    @staticmethod
    def from_perm(perm: Permutation) -> "SignedPermutation":
        return SignedPermutation((0,) * len(perm.images), perm)

    @staticmethod
    def parse(text: str) -> "SignedPermutation":
        """Parse the canonical text format "11010;(1 2 3)(4 5)"."""
        if ";" not in text:
            raise ValueError(f"expected 'signs;cycles', got {text!r}")
        sign_part, perm_part = text.split(";", 1)
        sign_part = sign_part.strip()
        if not re.fullmatch(r"[01]+", sign_part):
            raise ValueError(f"sign part must be a 0/1 string: {sign_part!r}")
        sign = tuple(int(ch) for ch in sign_part)
        return SignedPermutation(sign, Permutation.parse(perm_part, len(sign)))

    # -- group operations ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.sign)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """(a,tau)(b,mu) = (a + tau.b, tau*mu)."""
        if len(self.sign) != len(other.sign):
            raise ValueError("degree mismatch")
        a, tau = self.sign, self.perm
        b = other.sign
        tb = [0] * len(a)
        for j, i in enumerate(tau.images):
            tb[i] = b[j]
        return SignedPermutation(
            tuple((x + y) & 1 for x, y in zip(a, tb)), tau * other.perm
        )

    def inverse(self) -> "SignedPermutation":
        """(a,tau)^-1 = (tau^-1.a, tau^-1)."""
        pinv = self.perm.inverse()
        return SignedPermutation(pinv.act_on_signs(self.sign), pinv)

    def conjugate(self, other: "SignedPermutation") -> "SignedPermutation":
        """self |> other = self * other * self^-1."""
        if len(self.sign) != len(other.sign):
            raise ValueError("degree mismatch")
        a, tau = self.sign, self.perm
        b, mu = other.sign, other.perm
        newperm = tau.conjugate(mu)
        c = [0] * len(a)
        for j, i in enumerate(tau.images):
            c[i] ^= b[j]
        for j, i in enumerate(newperm.images):
            c[i] ^= a[j]  # (tau mu tau^-1).a contribution
        for i, x in enumerate(a):
            c[i] ^= x
        return SignedPermutation(tuple(c), newperm)

    def __pow__(self, k: int) -> "SignedPermutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = SignedPermutation.identity(len(self.sign))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def order(self) -> int:
        k, x = 1, self
        ident = SignedPermutation.identity(len(self.sign))
        while x != ident:
            x = x * self
            k += 1
        return k

    def commutes_with(self, other: "SignedPermutation") -> bool:
        return self * other == other * self

    def is_identity(self) -> bool:
        return not any(self.sign) and self.perm.is_identity()

    # -- invariants and maps ---------------------------------------------

    def signed_cycle_type(self) -> tuple:
        """Multiset of (length, sign parity over the cycle's support).

        A complete conjugation invariant of B_n; cycles with parity 1 are
        the negative cycles.
        """
        out = []
        for cyc in self.perm.cycles(include_fixed=True):
            out.append((len(cyc), sum(self.sign[i] for i in cyc) & 1))
        return tuple(sorted(out))

    def juxtapose(self, other: "SignedPermutation") -> "SignedPermutation":
        """Block combination x # y of x in B_n and y in B_m, landing in B_{n+m}."""
        n = len(self.sign)
        images = self.perm.images + tuple(i + n for i in other.perm.images)
        return SignedPermutation(self.sign + other.sign, Permutation(images))

    def embed(self) -> "SignedPermutation":
        """phi: B_n -> B_{n+1}, (a, tau) |-> ((a, 0), tau)."""
        return SignedPermutation(
            self.sign + (0,), Permutation(self.perm.images + (len(self.sign),))
        )

    def project(self) -> Permutation:
        """pi: B_n -> S_n, (a, tau) |-> tau."""
        return self.perm

    def is_orthogonal_to(self, other: "SignedPermutation") -> bool:
        """Orthogonal = the two elements share no sign-cycle length."""
        mine = {len(c) for c in self.perm.cycles(include_fixed=True)}
        theirs = {len(c) for c in other.perm.cycles(include_fixed=True)}
        return not (mine & theirs)

    # -- text format -----------------------------------------------------

    def format(self) -> str:
        return "".join(str(b) for b in self.sign) + ";" + format_cycles(self.perm)

    def sort_key(self) -> str:
        return self.format()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedPermutation)
            and self.sign == other.sign
            and self.perm == other.perm
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SignedPermutation.parse({self.format()!r})"

    def __str__(self) -> str:
        return self.format()


def nu_right(x: SignedPermutation, m: int) -> SignedPermutation:
    """nu->: B_n -> B_{n+m}, x |-> x # 1."""
    return x.juxtapose(SignedPermutation.identity(m))


def nu_left(y: SignedPermutation, n: int) -> SignedPermutation:
    """nu<-: B_m -> B_{n+m}, y |-> 1 # y."""
    return SignedPermutation.identity(n).juxtapose(y)


class GroupContext:
    """A concrete ambient group: B_n, or S_n viewed inside B_n with zero signs.

    All higher layers (classes, racks, modules) take elements together with
    one of these contexts; mixed-degree operations fail loudly.
    """

    # Hard enumeration cap: 2^10 * 10! elements.
    MAX_ORDER = (1 << 10) * 3628800

    def __init__(self, n: int, signed: bool):
        if n < 1:
            raise ValueError("degree must be positive")
        self.n = n
        self.signed = signed
        self._elements = None

    @property
    def order(self) -> int:
        fact = 1
        for k in range(2, self.n + 1):
            fact *= k
        return (1 << self.n) * fact if self.signed else fact

    @property
    def identity(self) -> SignedPermutation:
        return SignedPermutation.identity(self.n)

    def generators(self) -> list:
        """Adjacent transpositions, plus the first sign flip in the signed case."""
        n = self.n
        gens = [
            SignedPermutation.from_perm(Permutation.from_cycles(n, [(i, i + 1)]))
            for i in range(1, n)
        ]
        if self.signed:
            gens.append(
                SignedPermutation((1,) + (0,) * (n - 1), Permutation.identity(n))
            )
        return gens

    def elements(self) -> list:
        """The full element list (cached).  Refuses beyond the budget cap."""
        if self._elements is None:
            if self.order > self.MAX_ORDER:
                raise BudgetExceeded(
                    f"group of order {self.order} exceeds the enumeration cap"
                )
            perms = [Permutation(p) for p in itertools.permutations(range(self.n))]
            if self.signed:
                self._elements = [
                    SignedPermutation(s, p)
                    for s in itertools.product((0, 1), repeat=self.n)
                    for p in perms
                ]
            else:
                self._elements = [SignedPermutation.from_perm(p) for p in perms]
        return self._elements

    def __contains__(self, x: SignedPermutation) -> bool:
        if not isinstance(x, SignedPermutation) or x.n != self.n:
            return False
        return self.signed or not any(x.sign)

    def random_element(self, rng) -> SignedPermutation:
        perm = list(range(self.n))
        rng.shuffle(perm)
        sign = (
            tuple(rng.randrange(2) for _ in range(self.n))
            if self.signed
            else (0,) * self.n
        )
        return SignedPermutation(sign, Permutation(perm))

    def parse(self, text: str) -> SignedPermutation:
        x = SignedPermutation.parse(text)
        if x not in self:
            raise ValueError(f"{text!r} is not an element of {self}")
        return x

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupContext)
            and self.n == other.n
            and self.signed == other.signed
        )

    def __hash__(self) -> int:
        return hash((self.n, self.signed))

    def __repr__(self) -> str:
        return f"{'B' if self.signed else 'S'}{self.n}"


def Bn(n: int) -> GroupContext:
    return GroupContext(n, signed=True)


def Sn(n: int) -> GroupContext:
    """S_n realised inside B_n as the zero-sign subgroup."""
    return GroupContext(n, signed=False)


class BudgetExceeded(RuntimeError):
    """An enumeration or search exceeded its configured budget."""
