"""Exact linear algebra: nullspaces over Q(zeta_m) and over Q.

Three layers:

* Gaussian elimination over the cyclotomic field with deterministic
  pivoting, used on the sparse operator h -> D(h) - h (x) g^w - 1 (x) h
  to compute skew-primitive spaces exactly;
* a group-likeness predicate D(e) = e (x) e, eps(e) = 1;
* a Q-linearization for conjugate-linear systems: conjugation is not
  field-linear, so each scalar unknown splits into phi(m) rational
  unknowns and conjugation becomes an exact rational matrix, after which
  an ordinary rational nullspace applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Element, Monomial, basis
from .coalgebra import TensorElement, counit, delta, tensor_of
from .errors import KernelError


def _nullspace_from_rows(ctx, ncols, rows):
    """Kernel basis from sparse constraint rows (dicts col -> scalar).

    Rows are consumed in the order given; within a row the pivot is its
    first nonzero column, so the elimination is fully deterministic.
    Returns dense vectors, one per free column in ascending order.
    """
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                inv = row.pop(c).inverse()
                pivots[c] = {j: v * inv for j, v in row.items()}
                break
            coef = row.pop(c)
            for j, v in p.items():
                w = coef * v
                old = row.get(j)
                nv = -w if old is None else old - w
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    # Back-eliminate to reduced echelon form for a canonical kernel basis.
    for c in sorted(pivots, reverse=True):
        prow = pivots[c]
        for c2, prow2 in pivots.items():
            if c2 < c and c in prow2:
                coef = prow2.pop(c)
                for j, v in prow.items():
                    w = coef * v
                    old = prow2.get(j)
                    nv = -w if old is None else old - w
                    if nv:
                        prow2[j] = nv
                    else:
                        prow2.pop(j, None)
    zero = ctx.zero
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = [zero] * ncols
        vec[f] = ctx.one
        for c, prow in pivots.items():
            v = prow.get(f)
            if v is not None:
                vec[c] = -v
        out.append(vec)
    return out


class FieldMatrix:
    """Rectangular matrix of cyclotomic scalars."""

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise KernelError("ragged matrix rows")
        self.ctx = ctx
        self.rows = rows

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def nullspace(self):
        return field_nullspace(self)


def field_nullspace(matrix):
    """Basis of the right nullspace of a FieldMatrix, exactly."""
    nrows, ncols = matrix.shape
    sparse_rows = []
    for r in matrix.rows:
        row = {j: v for j, v in enumerate(r) if v}
        if row:
            sparse_rows.append(row)
    return _nullspace_from_rows(matrix.ctx, ncols, sparse_rows)


def skew_primitive_space(ctx, w):
    """Basis of {h : D(h) = h (x) g^w + 1 (x) h} as Elements.

    Built column by column from the n^3 basis monomials; the constraint
    rows live on the n^6 tensor basis but only nonzero rows are kept.
    """
    n = ctx.n
    if not 0 <= w < n:
        raise KernelError(f"skew parameter w={w} outside [0, {n})")
    monos = basis(ctx)
    one_m = Monomial(0, 0, 0)
    gw = Monomial(0, 0, w)
    rows_by_key = {}
    for col, b in enumerate(monos):
        image = delta(Element(ctx, {b: ctx.one}))
        # Subtract as two tensors: the keys coincide when b = 1 and w = 0.
        image = image - TensorElement(ctx, {(b, gw): ctx.one})
        image = image - TensorElement(ctx, {(one_m, b): ctx.one})
        for pair, c in image.terms.items():
            rows_by_key.setdefault(pair, {})[col] = c
    rows = [rows_by_key[k] for k in sorted(rows_by_key)]
    vectors = _nullspace_from_rows(ctx, len(monos), rows)
    out = []
    for vec in vectors:
        out.append(Element(ctx, {m: c for m, c in zip(monos, vec) if c}))
    return out


def is_grouplike(e):
    """Whether D(e) = e (x) e and eps(e) = 1."""
    if counit(e) != 1:
        return False
    return delta(e) == tensor_of(e, e)


@dataclass(frozen=True)
class ConjTerm:
    """One summand  coeff * u_var  or  coeff * conj(u_var)  of an equation."""

    coeff: object
    var: int
    conjugated: bool = False


@dataclass
class ConjugateLinearSystem:
    """Homogeneous system of conjugate-linear equations in scalar unknowns."""

    ctx: object
    num_vars: int
    equations: list = field(default_factory=list)

    def add_equation(self, terms):
        for t in terms:
            if not 0 <= t.var < self.num_vars:
                raise KernelError(f"unknown index {t.var} out of range")
        self.equations.append(list(terms))


@dataclass
class RationalizedSystem:
    """Q-matrix acting on the stacked rational coordinates of the unknowns."""

    ctx: object
    num_vars: int
    matrix: list


def rationalize(system):
    """Expand scalar unknowns into phi(m) rational unknowns each.

    A coefficient acting on an unknown contributes the coordinates of
    coeff * zeta^j; acting on a conjugated unknown it contributes those
    of coeff * zeta^(-j), the exact matrix of conjugation in the power
    basis.
    """
    ctx = system.ctx
    d = ctx.degree
    width = system.num_vars * d
    matrix = []
    for eq in system.equations:
        block = [[Fraction(0)] * width for _ in range(d)]
        for term in eq:
            for j in range(d):
                z = ctx.zeta(-j) if term.conjugated else ctx.zeta(j)
                col = term.var * d + j
                for i, coord in enumerate((term.coeff * z).coords):
                    if coord:
                        block[i][col] += coord
        matrix.extend(block)
    return RationalizedSystem(ctx, system.num_vars, matrix)


def _rational_kernel(matrix, ncols):
    pivots = {}
    for r in matrix:
        row = {j: v for j, v in enumerate(r) if v}
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                lead = row.pop(c)
                pivots[c] = {j: v / lead for j, v in row.items()}
                break
            coef = row.pop(c)
            for j, v in p.items():
                nv = row.get(j, Fraction(0)) - coef * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    for c in sorted(pivots, reverse=True):
        prow = pivots[c]
        for c2, prow2 in pivots.items():
            if c2 < c and c in prow2:
                coef = prow2.pop(c)
                for j, v in prow.items():
                    nv = prow2.get(j, Fraction(0)) - coef * v
                    if nv:
                        prow2[j] = nv
                    else:
                        prow2.pop(j, None)
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for c, prow in pivots.items():
            vec[c] = -prow.get(f, Fraction(0))
        out.append(vec)
    return out


def rational_nullspace(rsystem):
    """Kernel of a rationalized system as scalar assignments per unknown."""
    ctx = rsystem.ctx
    d = ctx.degree
    ncols = rsystem.num_vars * d
    out = []
    for vec in _rational_kernel(rsystem.matrix, ncols):
        out.append(
            [ctx.from_coords(vec[v * d:(v + 1) * d]) for v in range(rsystem.num_vars)]
        )
    return out


def substitute(system, assignment):
    """Evaluate every equation at an assignment; the residual scalars."""
    out = []
    for eq in system.equations:
        acc = system.ctx.zero
        for term in eq:
            u = assignment[term.var]
            if term.conjugated:
                u = u.conjugate()
            acc = acc + term.coeff * u
        out.append(acc)
    return out
