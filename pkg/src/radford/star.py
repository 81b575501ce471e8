"""Star structures on H_n and the axiom verifier.

A star structure is a conjugate-linear map determined by generator
images.  Three kinds are supported:

* ``diag``:     g -> g, x -> alpha*x, y -> beta*y with |alpha| = |beta| = 1
                (valid for every n).
* ``matrix2``:  n = 2 only; g -> g, x -> a11*x + a12*y, y -> a21*x + a22*y
                with conj(A)*A = I2.
* ``raw``:      arbitrary candidate images with no validity promise, so
                that impossibility arguments become executable negative
                tests.

``verify_star_axioms`` checks the five defining conditions on the whole
canonical basis (pairs for the binary law) and reports every failed
check with its first counterexample; failures are data, not errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .algebra import Element, Monomial, _mono_mul_parts, basis
from .coalgebra import (
    TensorElement,
    _delta_mono,
    antipode,
    counit,
    delta,
    tensor_mul,
    triple_delta_sides,
)
from .errors import InvalidStarStructureError


class StarStructure:
    """Generator images defining a candidate or validated star map."""

    __slots__ = ("kind", "ctx", "g_img", "x_img", "y_img", "alpha", "beta",
                 "matrix", "_mono_cache")

    def __init__(self, kind, ctx, g_img, x_img, y_img,
                 alpha=None, beta=None, matrix=None):
        self.kind = kind
        self.ctx = ctx
        self.g_img = g_img
        self.x_img = x_img
        self.y_img = y_img
        self.alpha = alpha
        self.beta = beta
        self.matrix = matrix
        self._mono_cache = {}

    def __eq__(self, other):
        if not isinstance(other, StarStructure):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.g_img == other.g_img
            and self.x_img == other.x_img
            and self.y_img == other.y_img
        )

    def __hash__(self):
        return hash((self.kind, self.g_img, self.x_img, self.y_img))

    def __repr__(self):
        return f"StarStructure(kind={self.kind!r}, n={self.ctx.n}, m={self.ctx.m})"

    def star_of_monomial(self, mono):
        """(g*)^l (x*)^s (y*)^r, cached per structure."""
        hit = self._mono_cache.get(mono)
        if hit is None:
            hit = (self.g_img ** mono.l) * (self.x_img ** mono.s) \
                * (self.y_img ** mono.r)
            self._mono_cache[mono] = hit
        return hit

    def embed(self, big_ctx):
        """The same structure over an extended-conductor context."""
        if big_ctx is self.ctx:
            return self
        return StarStructure(
            self.kind,
            big_ctx,
            self.g_img.embed(big_ctx),
            self.x_img.embed(big_ctx),
            self.y_img.embed(big_ctx),
            alpha=self.alpha.embed(big_ctx) if self.alpha is not None else None,
            beta=self.beta.embed(big_ctx) if self.beta is not None else None,
            matrix=tuple(c.embed(big_ctx) for c in self.matrix)
            if self.matrix is not None
            else None,
        )


def make_star_diag(ctx, alpha, beta):
    """Validated diagonal structure g* = g, x* = alpha x, y* = beta y."""
    if not alpha.is_norm_one():
        raise InvalidStarStructureError("alpha fails the norm-one precondition")
    if not beta.is_norm_one():
        raise InvalidStarStructureError("beta fails the norm-one precondition")
    return StarStructure(
        "diag",
        ctx,
        Element.monomial(ctx, 0, 0, 1),
        Element.monomial(ctx, 0, 1, 0, alpha),
        Element.monomial(ctx, 1, 0, 0, beta),
        alpha=alpha,
        beta=beta,
    )


def make_star_matrix(ctx, entries):
    """Validated n = 2 structure from a 2x2 matrix with conj(A)A = I2.

    ``entries`` is (a11, a12, a21, a22) row-major.
    """
    if ctx.n != 2:
        raise InvalidStarStructureError(
            f"matrix star structures require n = 2, got n = {ctx.n}"
        )
    a11, a12, a21, a22 = entries
    prod = (
        a11.conjugate() * a11 + a12.conjugate() * a21,
        a11.conjugate() * a12 + a12.conjugate() * a22,
        a21.conjugate() * a11 + a22.conjugate() * a21,
        a21.conjugate() * a12 + a22.conjugate() * a22,
    )
    expect = (ctx.one, ctx.zero, ctx.zero, ctx.one)
    for pos, (got, want) in enumerate(zip(prod, expect)):
        if got != want:
            i, j = divmod(pos, 2)
            raise InvalidStarStructureError(
                f"conj(A)A differs from I2 at entry ({i + 1},{j + 1})"
            )
    x_img = Element(
        ctx, {Monomial(0, 1, 0): a11, Monomial(1, 0, 0): a12}
    )
    y_img = Element(
        ctx, {Monomial(0, 1, 0): a21, Monomial(1, 0, 0): a22}
    )
    return StarStructure(
        "matrix2",
        ctx,
        Element.monomial(ctx, 0, 0, 1),
        x_img,
        y_img,
        matrix=tuple(entries),
    )


def make_star_raw(ctx, g_img, x_img, y_img):
    """Unvalidated candidate images, for feeding to the verifier."""
    return StarStructure("raw", ctx, g_img, x_img, y_img)


def apply_star(st, e):
    """Conjugate-linear antimultiplicative extension of the images."""
    if e.ctx is not st.ctx:
        e = e.embed(st.ctx)
    acc = Element.zero(st.ctx)
    for mono, c in e.terms.items():
        acc = acc + st.star_of_monomial(mono).scale(c.conjugate())
    return acc


@dataclass(frozen=True)
class Counterexample:
    """Where a check failed: the basis monomial or pair, and both sides."""

    location: tuple
    lhs: object
    rhs: object


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: Counterexample | None = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def all_passed(self):
        return all(c.passed for c in self.checks)

    def failed_names(self):
        return [c.name for c in self.checks if not c.passed]

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _pair_iter(count, max_pairs, seed):
    if max_pairs is None or count * count <= max_pairs:
        for a in range(count):
            for b in range(count):
                yield a, b
        return
    rng = Random(seed)
    for _ in range(max_pairs):
        yield rng.randrange(count), rng.randrange(count)


def _antimult_check(st, monos, star_el, max_pairs, seed):
    ctx = st.ctx
    n = ctx.n
    single = []
    for b in monos:
        el = star_el[b]
        if len(el.terms) != 1:
            single = None
            break
        (mono, coeff), = el.terms.items()
        single.append((coeff, mono))
    if single is not None and max_pairs is None:
        # Single-term images: compare coefficients and monomials directly.
        pows = [ctx.omega_pow(k) for k in range(n)]
        index = {m: t for t, m in enumerate(monos)}
        for ia, a in enumerate(monos):
            ca, ma = single[ia]
            for ib, b in enumerate(monos):
                cb, mb = single[ib]
                parts = _mono_mul_parts(n, a, b)
                rparts = _mono_mul_parts(n, mb, ma)
                if parts is None or rparts is None:
                    if parts is None and rparts is None:
                        continue
                    ok = False
                else:
                    e, mab = parts
                    cl, ml = single[index[mab]]
                    f, mr = rparts
                    lhs_c = pows[(n - e) % n] * cl if e else cl
                    rhs_c = cb * ca
                    if f:
                        rhs_c = rhs_c * pows[f]
                    ok = ml == mr and lhs_c == rhs_c
                if not ok:
                    ea = Element(ctx, {a: ctx.one})
                    eb = Element(ctx, {b: ctx.one})
                    return Counterexample(
                        ("pair", (a, b)),
                        apply_star(st, ea * eb),
                        star_el[b] * star_el[a],
                    )
        return None
    for ia, ib in _pair_iter(len(monos), max_pairs, seed):
        a, b = monos[ia], monos[ib]
        ea = Element(ctx, {a: ctx.one})
        eb = Element(ctx, {b: ctx.one})
        lhs = apply_star(st, ea * eb)
        rhs = star_el[b] * star_el[a]
        if lhs != rhs:
            return Counterexample(("pair", (a, b)), lhs, rhs)
    return None


def verify_star_axioms(st, max_pairs=None, seed=0):
    """Run the five star-structure axioms over the whole canonical basis.

    Checks: (1) involution, (2) antimultiplicativity over basis pairs,
    (3) coproduct compatibility, (4) S(S(h*)*) = h, (5) counit
    conjugation.  ``max_pairs`` caps the quadratic check (2) by seeded
    sampling; the default is exhaustive.
    """
    ctx = st.ctx
    monos = basis(ctx)
    star_el = {b: apply_star(st, Element(ctx, {b: ctx.one})) for b in monos}
    checks = []

    ce = None
    for b in monos:
        eb = Element(ctx, {b: ctx.one})
        back = apply_star(st, star_el[b])
        if back != eb:
            ce = Counterexample(("monomial", b), back, eb)
            break
    checks.append(CheckResult("involution", ce is None, ce))

    ce = _antimult_check(st, monos, star_el, max_pairs, seed)
    checks.append(CheckResult("antimultiplicative", ce is None, ce))

    ce = None
    for b in monos:
        lhs = delta(star_el[b])
        out = {}
        for (u, v), c in _delta_mono(ctx, b).terms.items():
            cc = c.conjugate()
            for mu, cu in star_el[u].terms.items():
                half = cc * cu
                for mv, cv in star_el[v].terms.items():
                    key = (mu, mv)
                    coeff = half * cv
                    acc = out.get(key)
                    out[key] = coeff if acc is None else acc + coeff
        rhs = TensorElement(ctx, out)
        if lhs != rhs:
            ce = Counterexample(("monomial", b), lhs, rhs)
            break
    checks.append(CheckResult("delta_compatible", ce is None, ce))

    ce = None
    for b in monos:
        eb = Element(ctx, {b: ctx.one})
        res = antipode(apply_star(st, antipode(star_el[b])))
        if res != eb:
            ce = Counterexample(("monomial", b), res, eb)
            break
    checks.append(CheckResult("antipode_compatible", ce is None, ce))

    ce = None
    for b in monos:
        eb = Element(ctx, {b: ctx.one})
        lhs = counit(star_el[b])
        rhs = counit(eb).conjugate()
        if lhs != rhs:
            ce = Counterexample(("monomial", b), Element.from_scalar(ctx, lhs),
                                Element.from_scalar(ctx, rhs))
            break
    checks.append(CheckResult("counit_conjugate", ce is None, ce))

    return VerificationReport(tuple(checks))


def verify_hopf_axioms(ctx, delta_fn=None, max_pairs=None, seed=0):
    """Aggregate Hopf-axiom report over the canonical basis.

    Unary laws (coassociativity, counit, antipode) run on every basis
    monomial.  Binary laws (coproduct and counit multiplicativity) run on
    every basis pair when ``max_pairs`` is None and n <= 4, and on a
    seeded sample otherwise.  ``delta_fn`` swaps in an alternative
    coproduct for negative fixtures.
    """
    d = delta_fn if delta_fn is not None else delta
    monos = basis(ctx)
    checks = []

    ce = None
    for b in monos:
        eb = Element(ctx, {b: ctx.one})
        lhs, rhs = triple_delta_sides(eb, d)
        if lhs != rhs:
            ce = Counterexample(("monomial", b), lhs, rhs)
            break
    checks.append(CheckResult("coassociativity", ce is None, ce))

    ce = None
    for b in monos:
        eb = Element(ctx, {b: ctx.one})
        left = Element.zero(ctx)
        right = Element.zero(ctx)
        for (u, v), c in d(eb).terms.items():
            if u.r == 0 and u.s == 0:
                left = left + Element(ctx, {v: c})
            if v.r == 0 and v.s == 0:
                right = right + Element(ctx, {u: c})
        if left != eb or right != eb:
            ce = Counterexample(("monomial", b), left, right)
            break
    checks.append(CheckResult("counit_law", ce is None, ce))

    ce = None
    for b in monos:
        eb = Element(ctx, {b: ctx.one})
        target = Element.from_scalar(ctx, counit(eb))
        left = Element.zero(ctx)
        right = Element.zero(ctx)
        for (u, v), c in d(eb).terms.items():
            left = left + (antipode(Element(ctx, {u: c})) * Element(ctx, {v: ctx.one}))
            right = right + (Element(ctx, {u: c}) * antipode(Element(ctx, {v: ctx.one})))
        if left != target or right != target:
            ce = Counterexample(("monomial", b), left, right)
            break
    checks.append(CheckResult("antipode_law", ce is None, ce))

    if max_pairs is None and ctx.n > 4:
        max_pairs = 2500
    ce_delta = None
    ce_counit = None
    for ia, ib in _pair_iter(len(monos), max_pairs, seed):
        a, b = monos[ia], monos[ib]
        ea = Element(ctx, {a: ctx.one})
        eb = Element(ctx, {b: ctx.one})
        prod = ea * eb
        if ce_delta is None:
            lhs = d(prod)
            rhs = tensor_mul(d(ea), d(eb))
            if lhs != rhs:
                ce_delta = Counterexample(("pair", (a, b)), lhs, rhs)
        if ce_counit is None:
            lc = counit(prod)
            rc = counit(ea) * counit(eb)
            if lc != rc:
                ce_counit = Counterexample(
                    ("pair", (a, b)),
                    Element.from_scalar(ctx, lc),
                    Element.from_scalar(ctx, rc),
                )
        if ce_delta is not None and ce_counit is not None:
            break
    checks.append(CheckResult("delta_multiplicative", ce_delta is None, ce_delta))
    checks.append(CheckResult("counit_multiplicative", ce_counit is None, ce_counit))

    return VerificationReport(tuple(checks))
