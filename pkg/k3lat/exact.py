"""
Exact integer/rational linear algebra and binary form arithmetic

Every other module builds on these routines. Matrices are sympy
ImmutableMatrix values with Integer (IntMat) or Rational (RatMat) entries;
the normal form algorithms work on a mutable copy with elementary row and
column operations and record the transforms alongside.
"""

import logging
import re
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from sympy import ImmutableMatrix, Integer, Matrix, Rational, ZZ, eye, zeros
from sympy.polys.matrices import DomainMatrix

from .exceptions import K3LatPreconditionError, K3LatValidationError
from .models.binform import BinForm

logger = logging.getLogger(__name__)

IntMat = ImmutableMatrix
RatMat = ImmutableMatrix

_RATIONAL_PATTERN = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def as_int(value: Any) -> Integer:
    """
    Coerce an exact integer value to a sympy Integer

    Accepts int, sympy Integer, integral Rational/Fraction and decimal digit
    strings. Floats and booleans are rejected.

    Raises:
        K3LatValidationError: If the value is not an exact integer
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise K3LatValidationError(f"Expected an exact integer, got {value!r}")
    if isinstance(value, str):
        value = as_rat(value)
    if isinstance(value, Fraction):
        value = Rational(value.numerator, value.denominator)
    if isinstance(value, int):
        return Integer(value)
    if getattr(value, "is_Rational", False) and value.q == 1:
        return Integer(value.p)
    raise K3LatValidationError(f"Expected an exact integer, got {value!r}")


def as_rat(value: Any) -> Rational:
    """
    Coerce an exact rational value to a sympy Rational

    Example:
        >>> as_rat("3/4")
        3/4
        >>> as_rat(2)
        2
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise K3LatValidationError(f"Expected an exact rational, got {value!r}")
    if isinstance(value, int):
        return Integer(value)
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        if not _RATIONAL_PATTERN.match(value):
            raise K3LatValidationError(f"Malformed rational: {value!r}")
        parts = value.replace(" ", "").split("/")
        if len(parts) == 2 and int(parts[1]) == 0:
            raise K3LatValidationError(f"Zero denominator in {value!r}")
        return Rational(*[int(p) for p in parts])
    if getattr(value, "is_Rational", False):
        return value
    raise K3LatValidationError(f"Expected an exact rational, got {value!r}")


def int_matrix(rows: Any, cols: Optional[int] = None) -> IntMat:
    """
    Build an IntMat from nested lists (or another matrix)

    Args:
        rows: List of integer rows, or a sympy matrix
        cols: Column count, needed only when rows is empty

    Raises:
        K3LatValidationError: On ragged rows or non-integer entries
    """
    if isinstance(rows, (Matrix, ImmutableMatrix)):
        return ImmutableMatrix(rows.rows, rows.cols, [as_int(x) for x in rows])
    if not isinstance(rows, (list, tuple)):
        raise K3LatValidationError("Matrix must be a list of rows")
    if len(rows) == 0:
        return ImmutableMatrix.zeros(0, cols or 0)
    width = len(rows[0]) if isinstance(rows[0], (list, tuple)) else None
    if width is None or any(not isinstance(r, (list, tuple)) or len(r) != width for r in rows):
        raise K3LatValidationError("Matrix rows must be lists of equal length")
    return ImmutableMatrix(len(rows), width, [as_int(x) for r in rows for x in r])


def rat_matrix(rows: Any, cols: Optional[int] = None) -> RatMat:
    """Build a RatMat from nested lists of rationals or "p/q" strings"""
    if isinstance(rows, (Matrix, ImmutableMatrix)):
        return ImmutableMatrix(rows.rows, rows.cols, [as_rat(x) for x in rows])
    if not isinstance(rows, (list, tuple)):
        raise K3LatValidationError("Matrix must be a list of rows")
    if len(rows) == 0:
        return ImmutableMatrix.zeros(0, cols or 0)
    width = len(rows[0]) if isinstance(rows[0], (list, tuple)) else None
    if width is None or any(not isinstance(r, (list, tuple)) or len(r) != width for r in rows):
        raise K3LatValidationError("Matrix rows must be lists of equal length")
    return ImmutableMatrix(len(rows), width, [as_rat(x) for r in rows for x in r])


def block_diag(a: ImmutableMatrix, b: ImmutableMatrix) -> ImmutableMatrix:
    """Block-diagonal matrix [[a, 0], [0, b]], zero-sized blocks allowed"""
    m = zeros(a.rows + b.rows, a.cols + b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            m[i, j] = a[i, j]
    for i in range(b.rows):
        for j in range(b.cols):
            m[a.rows + i, a.cols + j] = b[i, j]
    return ImmutableMatrix(m)


def vstack(a: ImmutableMatrix, b: ImmutableMatrix) -> ImmutableMatrix:
    """Stack rows of a above rows of b"""
    if a.cols != b.cols:
        raise K3LatValidationError(f"Cannot stack {a.cols}- and {b.cols}-column matrices")
    return ImmutableMatrix(a.rows + b.rows, a.cols, list(a) + list(b))


def nonzero_rows(a: ImmutableMatrix) -> ImmutableMatrix:
    """Drop all-zero rows"""
    kept = [list(a.row(i)) for i in range(a.rows) if any(x != 0 for x in a.row(i))]
    if not kept:
        return ImmutableMatrix.zeros(0, a.cols)
    return ImmutableMatrix(kept)


def _least_in_column(m: Matrix, col: int, start: int) -> Optional[int]:
    """Row index (>= start) of the smallest nonzero |entry| in col, ties to lowest index"""
    best = None
    for i in range(start, m.rows):
        if m[i, col] != 0 and (best is None or abs(m[i, col]) < abs(m[best, col])):
            best = i
    return best


def hnf(a: IntMat) -> Tuple[IntMat, IntMat]:
    """
    Row Hermite normal form

    Args:
        a: Integer matrix

    Returns:
        (H, U) with U unimodular and U*a = H; H has positive pivots and the
        entries above each pivot reduced into [0, pivot)

    Example:
        >>> h, u = hnf(int_matrix([[2, 4], [6, 8]]))
        >>> h.tolist()
        [[2, 0], [0, 4]]
    """
    h = Matrix(int_matrix(a))
    u = eye(h.rows)
    r = 0
    for c in range(h.cols):
        if r >= h.rows:
            break
        if _least_in_column(h, c, r) is None:
            continue
        while True:
            piv = _least_in_column(h, c, r)
            if piv != r:
                h.row_swap(r, piv)
                u.row_swap(r, piv)
            cleared = True
            for i in range(r + 1, h.rows):
                if h[i, c] != 0:
                    q = h[i, c] // h[r, c]
                    h.row_op(i, lambda val, j: val - q * h[r, j])
                    u.row_op(i, lambda val, j: val - q * u[r, j])
                    if h[i, c] != 0:
                        cleared = False
            if cleared:
                break
        if h[r, c] < 0:
            h.row_op(r, lambda val, j: -val)
            u.row_op(r, lambda val, j: -val)
        for i in range(r):
            q = h[i, c] // h[r, c]
            if q != 0:
                h.row_op(i, lambda val, j: val - q * h[r, j])
                u.row_op(i, lambda val, j: val - q * u[r, j])
        r += 1
    return ImmutableMatrix(h), ImmutableMatrix(u)


def _least_in_block(m: Matrix, t: int) -> Optional[Tuple[int, int]]:
    best = None
    for i in range(t, m.rows):
        for j in range(t, m.cols):
            if m[i, j] != 0 and (best is None or abs(m[i, j]) < abs(m[best])):
                best = (i, j)
    return best


def _least_on_edge(m: Matrix, t: int) -> Optional[Tuple[int, int]]:
    """Smallest nonzero entry left in column t below, or row t right of, the pivot"""
    best = None
    for i in range(t + 1, m.rows):
        if m[i, t] != 0 and (best is None or abs(m[i, t]) < abs(m[best])):
            best = (i, t)
    for j in range(t + 1, m.cols):
        if m[t, j] != 0 and (best is None or abs(m[t, j]) < abs(m[best])):
            best = (t, j)
    return best


def snf(a: IntMat) -> Tuple[IntMat, IntMat, IntMat]:
    """
    Smith normal form

    Returns:
        (S, U, V) with U*a*V = S diagonal, d_1 | d_2 | ..., d_i >= 0 and
        U, V unimodular

    Example:
        >>> s, u, v = snf(int_matrix([[2, 3], [3, 0]]))
        >>> [s[0, 0], s[1, 1]]
        [1, 9]
    """
    s = Matrix(int_matrix(a))
    u = eye(s.rows)
    v = eye(s.cols)

    def move_to_pivot(pos: Tuple[int, int], t: int) -> None:
        i, j = pos
        if i != t:
            s.row_swap(t, i)
            u.row_swap(t, i)
        if j != t:
            s.col_swap(t, j)
            v.col_swap(t, j)

    for t in range(min(s.rows, s.cols)):
        pos = _least_in_block(s, t)
        if pos is None:
            break
        move_to_pivot(pos, t)
        while True:
            for i in range(t + 1, s.rows):
                if s[i, t] != 0:
                    q = s[i, t] // s[t, t]
                    s.row_op(i, lambda val, j: val - q * s[t, j])
                    u.row_op(i, lambda val, j: val - q * u[t, j])
            for j in range(t + 1, s.cols):
                if s[t, j] != 0:
                    q = s[t, j] // s[t, t]
                    s.col_op(j, lambda val, i: val - q * s[i, t])
                    v.col_op(j, lambda val, i: val - q * v[i, t])
            pos = _least_on_edge(s, t)
            if pos is not None:
                move_to_pivot(pos, t)
                continue
            # Pivot must divide the remaining block
            bad = next(
                (
                    i
                    for i in range(t + 1, s.rows)
                    for j in range(t + 1, s.cols)
                    if s[i, j] % s[t, t] != 0
                ),
                None,
            )
            if bad is None:
                break
            s.row_op(t, lambda val, j: val + s[bad, j])
            u.row_op(t, lambda val, j: val + u[bad, j])
        if s[t, t] < 0:
            s.row_op(t, lambda val, j: -val)
            u.row_op(t, lambda val, j: -val)
    return ImmutableMatrix(s), ImmutableMatrix(u), ImmutableMatrix(v)


def invariant_factors(a: IntMat) -> List[int]:
    """Nonzero diagonal entries of snf(a)"""
    s, _, _ = snf(a)
    return [int(s[i, i]) for i in range(min(s.rows, s.cols)) if s[i, i] != 0]


def det(a: IntMat) -> int:
    """
    Exact determinant via fraction-free elimination over ZZ

    Raises:
        K3LatValidationError: If a is not square

    Example:
        >>> det(int_matrix([[2, 3], [3, 0]]))
        -9
    """
    a = int_matrix(a)
    if a.rows != a.cols:
        raise K3LatValidationError(f"det needs a square matrix, got {a.rows}x{a.cols}")
    if a.rows == 0:
        return 1
    return int(DomainMatrix.from_Matrix(Matrix(a)).convert_to(ZZ).det())


def congruence_diagonalize(g: RatMat) -> Tuple[RatMat, RatMat, Tuple[int, int]]:
    """
    Diagonalize a symmetric form by rational congruence

    Zero diagonals are handled by swapping in a nonzero diagonal entry, or,
    when none is left, by replacing e_k with e_k + e_j (the x+y / x-y split).

    Returns:
        (D, P, (p, q)) with P^T*G*P = D diagonal, p and q counting the
        positive and negative entries of D
    """
    g = rat_matrix(g)
    if g.rows != g.cols or g != g.T:
        raise K3LatValidationError("congruence_diagonalize needs a symmetric matrix")
    n = g.rows
    a = Matrix(g)
    p = eye(n)
    for k in range(n):
        if a[k, k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j, j] != 0), None)
            if swap is not None:
                a.row_swap(k, swap)
                a.col_swap(k, swap)
                p.col_swap(k, swap)
            else:
                partner = next((j for j in range(k + 1, n) if a[k, j] != 0), None)
                if partner is None:
                    continue
                a.row_op(k, lambda val, c: val + a[partner, c])
                a.col_op(k, lambda val, r: val + a[r, partner])
                p.col_op(k, lambda val, r: val + p[r, partner])
        pivot = a[k, k]
        for j in range(k + 1, n):
            if a[j, k] != 0:
                c = a[j, k] / pivot
                a.row_op(j, lambda val, col: val - c * a[k, col])
                a.col_op(j, lambda val, row: val - c * a[row, k])
                p.col_op(j, lambda val, row: val - c * p[row, k])
    p = ImmutableMatrix(p)
    d = ImmutableMatrix(p.T * g * p)
    positive = sum(1 for i in range(n) if d[i, i] > 0)
    negative = sum(1 for i in range(n) if d[i, i] < 0)
    logger.debug("Diagonalized form", extra={"rank": n, "signature": (positive, negative)})
    return d, p, (positive, negative)


def integer_kernel(a: IntMat, cols: Optional[int] = None) -> IntMat:
    """
    Primitive basis of {v in Z^n : a*v = 0}, rows in HNF

    Args:
        a: m x n integer matrix
        cols: n, needed only when a has no rows and lost its width
    """
    a = int_matrix(a, cols)
    n = a.cols
    h, u = hnf(a.T)
    rows = [list(u.row(i)) for i in range(n) if all(x == 0 for x in h.row(i))]
    if not rows:
        return ImmutableMatrix.zeros(0, n)
    basis, _ = hnf(ImmutableMatrix(rows))
    return nonzero_rows(basis)


def solve_left(basis: IntMat, vectors: ImmutableMatrix) -> RatMat:
    """
    Rational coordinates C with C*basis = vectors

    Args:
        basis: k x n integer matrix of full row rank
        vectors: m x n matrix of ambient vectors

    Raises:
        K3LatPreconditionError: If the basis rows are dependent or some vector
            is outside the rational span
    """
    basis = int_matrix(basis)
    vectors = rat_matrix(vectors, basis.cols)
    if vectors.cols != basis.cols:
        raise K3LatValidationError(
            f"Vectors have {vectors.cols} coordinates, basis has {basis.cols}"
        )
    k = basis.rows
    s, u, v = snf(basis)
    if k > basis.cols or any(s[j, j] == 0 for j in range(k)):
        raise K3LatPreconditionError(
            "Basis rows are linearly dependent", operation="coordinates"
        )
    xv = vectors * v
    for i in range(xv.rows):
        for j in range(k, xv.cols):
            if xv[i, j] != 0:
                raise K3LatPreconditionError(
                    "Vector is not in the rational span of the basis", operation="coordinates"
                )
    y = zeros(vectors.rows, k)
    for i in range(vectors.rows):
        for j in range(k):
            y[i, j] = xv[i, j] / s[j, j]
    return ImmutableMatrix(y * u)


def _homogenized(poly: Any, extra_s: int = 0) -> BinForm:
    """Homogenize a nonzero univariate poly and multiply by s^extra_s"""
    own = poly.degree()
    return BinForm.from_poly(poly, own + extra_s)


def poly_gcd(f: BinForm, g: BinForm) -> BinForm:
    """
    Monic gcd of two binary forms

    Roots at infinity are handled by the s-power: the gcd carries
    s^min(v_inf(f), v_inf(g)).

    Raises:
        K3LatPreconditionError: If both forms are zero

    Example:
        >>> poly_gcd(BinForm(2, [1, 0, -1]), BinForm(1, [1, -1])).coeffs
        (1, -1)
    """
    if f.is_zero() and g.is_zero():
        raise K3LatPreconditionError("gcd of two zero forms is undefined", operation="poly_gcd")
    if g.is_zero():
        return f.normalize()
    if f.is_zero():
        return g.normalize()
    common = f.as_poly().gcd(g.as_poly()).monic()
    v_inf = min(f.valuation_at_infinity(), g.valuation_at_infinity())
    return _homogenized(common, v_inf).normalize()


def squarefree_decomposition(f: BinForm) -> List[Tuple[BinForm, int]]:
    """
    Square-free decomposition of a nonzero binary form

    The factor s (one factor s^k) records vanishing at infinity.

    Returns:
        List of (factor, multiplicity), factors monic, squarefree and pairwise
        coprime, sorted by multiplicity then coefficients

    Raises:
        K3LatPreconditionError: If f is zero
    """
    if f.is_zero():
        raise K3LatPreconditionError(
            "Square-free decomposition of the zero form", operation="squarefree_decomposition"
        )
    _, factors = f.as_poly().sqf_list()
    result = [(_homogenized(p.monic()).normalize(), int(m)) for p, m in factors if p.degree() > 0]
    v_inf = f.valuation_at_infinity()
    if v_inf > 0:
        result.append((BinForm(1, [0, 1]), v_inf))
    result.sort(key=lambda item: (item[1], [str(c) for c in item[0].coeffs]))
    return result


def multiplicity_part(f: BinForm, min_multiplicity: int) -> BinForm:
    """
    Product of the square-free factors of f with multiplicity >= min_multiplicity

    The zero form vanishes to every order, so its part is the zero form.
    """
    if f.is_zero():
        return f
    part = BinForm.one()
    for factor, mult in squarefree_decomposition(f):
        if mult >= min_multiplicity:
            part = part * factor
    return part


def is_squarefree(f: BinForm) -> bool:
    """True iff gcd(f, df/dt, df/ds) is constant (f nonzero)"""
    if f.is_zero():
        raise K3LatPreconditionError("The zero form is not squarefree", operation="is_squarefree")
    g = poly_gcd(f, f.derivative_t())
    g = poly_gcd(g, f.derivative_s())
    return g.degree == 0


def is_unimodular(m: IntMat) -> bool:
    """|det m| == 1"""
    return abs(det(m)) == 1


def as_int_vector(values: Sequence[Any]) -> Tuple[Integer, ...]:
    return tuple(as_int(x) for x in values)


def as_rat_vector(values: Sequence[Any]) -> Tuple[Rational, ...]:
    return tuple(as_rat(x) for x in values)
