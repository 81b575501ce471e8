"""The algebra underlying H_n: canonical monomials and sparse elements.

H_n is generated by g, x, y subject to

    g^n = 1,  x^n = y^n = 0,  xg = w*gx,  gy = w*yg,  xy = w*yx,

with w a root of unity of order n.  Monomials are written in the
canonical order y^r x^s g^l with 0 <= r, s, l < n, so the algebra has
dimension n^3.  Products are computed two independent ways:

* a closed formula on monomials (the production path), and
* a letter-by-letter rewriting engine on free words (the oracle),

kept side by side so any slip in the twist exponents is caught by
comparing them; the test suite does so exhaustively for small n.

Moving g right past y^b costs w^b per g, past x^b costs w^-b per g, and
moving x right past y^b costs w^b per x, which gives the single twist
exponent  e = l1*r2 + s1*r2 - l1*s2  for a full monomial product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ContextMismatchError, KernelError
from .scalars import CyclotomicScalar, FieldContext


class Monomial(NamedTuple):
    """Basis word y^r x^s g^l; tuple order (r, s, l) is the sort order."""

    r: int
    s: int
    l: int


def basis(ctx):
    """All n^3 basis monomials in lexicographic (r, s, l) order."""
    n = ctx.n
    return [
        Monomial(r, s, l) for r in range(n) for s in range(n) for l in range(n)
    ]


def _mono_mul_parts(n, a, b):
    """(omega exponent mod n, product monomial), or None when it vanishes."""
    r = a[0] + b[0]
    if r >= n:
        return None
    s = a[1] + b[1]
    if s >= n:
        return None
    e = (a[2] * b[0] + a[1] * b[0] - a[2] * b[1]) % n
    return e, Monomial(r, s, (a[2] + b[2]) % n)


class Element:
    """Sparse linear combination of basis monomials; zero coefficients pruned.

    Values are immutable: every operation returns a fresh Element, and the
    term map must never be mutated after construction.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {m: c for m, c in terms.items() if c}

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {})

    @classmethod
    def monomial(cls, ctx, r, s, l, coeff=None):
        n = ctx.n
        if not (0 <= r < n and 0 <= s < n and 0 <= l < n):
            raise KernelError(f"monomial exponents ({r},{s},{l}) out of [0,{n})")
        if coeff is None:
            coeff = ctx.one
        return cls(ctx, {Monomial(r, s, l): coeff})

    @classmethod
    def one(cls, ctx):
        return cls.monomial(ctx, 0, 0, 0)

    @classmethod
    def from_scalar(cls, ctx, c):
        return cls(ctx, {Monomial(0, 0, 0): c})

    def sorted_terms(self):
        return sorted(self.terms.items())

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        from .parser import format_element

        return f"<{format_element(self)}>"

    def _check(self, other):
        if self.ctx is not other.ctx and (
            self.ctx.n != other.ctx.n or self.ctx.m != other.ctx.m
        ):
            raise ContextMismatchError("elements from different contexts")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            out[m] = c if acc is None else acc + c
        return Element(self.ctx, out)

    def __neg__(self):
        return Element(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return Element.zero(self.ctx)
        return Element(self.ctx, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, CyclotomicScalar)):
            c = other if isinstance(other, CyclotomicScalar) else self.ctx.from_int(other)
            return self.scale(c)
        self._check(other)
        ctx = self.ctx
        n = ctx.n
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                parts = _mono_mul_parts(n, m1, m2)
                if parts is None:
                    continue
                e, mono = parts
                c = c1 * c2
                if e:
                    c = c * ctx.omega_pow(e)
                acc = out.get(mono)
                out[mono] = c if acc is None else acc + c
        return Element(ctx, out)

    def __rmul__(self, other):
        if isinstance(other, (int, CyclotomicScalar)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise KernelError("negative powers of algebra elements")
        acc = Element.one(self.ctx)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def coefficient(self, r, s, l):
        return self.terms.get(Monomial(r, s, l), self.ctx.zero)

    def embed(self, big_ctx):
        """Same element with coefficients in an extended-conductor context."""
        if big_ctx is self.ctx:
            return self
        return Element(
            big_ctx, {m: c.embed(big_ctx) for m, c in self.terms.items()}
        )


def generators(ctx):
    """The generators (g, x, y) as Elements."""
    return (
        Element.monomial(ctx, 0, 0, 1),
        Element.monomial(ctx, 0, 1, 0),
        Element.monomial(ctx, 1, 0, 0),
    )


def monomial_mul(ctx, a, b):
    """Closed-form product of two basis monomials."""
    parts = _mono_mul_parts(ctx.n, a, b)
    if parts is None:
        return Element.zero(ctx)
    e, mono = parts
    return Element(ctx, {mono: ctx.omega_pow(e)})


def element_pow(e, k):
    return e ** k


@dataclass(frozen=True)
class FreeWord:
    """Word over the alphabet {G, X, Y} with an optional scalar coefficient."""

    letters: str
    coefficient: CyclotomicScalar | None = None

    def __post_init__(self):
        bad = set(self.letters.upper()) - set("GXY")
        if bad:
            raise KernelError(f"letters outside alphabet GXY: {sorted(bad)}")


# Weighted inversion swaps for sorting into Y < X < G order:
# GY -> w*YG, GX -> w^-1*XG, XY -> w*YX.
_SWAP_EXP = {("G", "Y"): 1, ("G", "X"): -1, ("X", "Y"): 1}
_RANK = {"Y": 0, "X": 1, "G": 2}


def rewrite_word(ctx, word):
    """Normalize a free word to its canonical Element via term rewriting.

    Independent of the closed-form product: only the defining relations
    drive it.  Each swap removes one inversion relative to Y < X < G, so
    the pass terminates; power relations g^n = 1, x^n = y^n = 0 apply at
    the end.
    """
    if isinstance(word, str):
        word = FreeWord(word)
    letters = list(word.letters.upper())
    exp = 0
    # Insertion sort, accumulating the omega exponent per weighted swap.
    for i in range(1, len(letters)):
        j = i
        while j > 0 and _RANK[letters[j - 1]] > _RANK[letters[j]]:
            exp += _SWAP_EXP[(letters[j - 1], letters[j])]
            letters[j - 1], letters[j] = letters[j], letters[j - 1]
            j -= 1
    n = ctx.n
    r = letters.count("Y")
    s = letters.count("X")
    l = letters.count("G")
    coeff = word.coefficient if word.coefficient is not None else ctx.one
    if r >= n or s >= n:
        return Element.zero(ctx)
    coeff = coeff * ctx.omega_pow(exp % n)
    return Element.monomial(ctx, r, s, l % n, coeff)


def word_of_monomial(mono):
    """Letter expansion of a basis monomial in canonical order."""
    return "Y" * mono.r + "X" * mono.s + "G" * mono.l
