"""
Rational Hodge isometries: the rank-one extension construction, block
assembly, period transport and the kernel-isometry check
"""

import logging
from math import isqrt
from typing import Optional

from sympy import ImmutableMatrix, Rational

from .exact import block_diag, rat_matrix
from .exceptions import K3LatConsistencyError, K3LatPreconditionError, K3LatValidationError
from .lattice import coordinates, direct_sum, rank1
from .models.hodge import NormedVector, PeriodPoint, RationalIsometry
from .models.lattice import Embedding, Lattice
from .utils.validators import ensure_valid

logger = logging.getLogger(__name__)


def is_isometry(m, source: Lattice, target: Lattice) -> bool:
    """
    True iff m^T * G_target * m = G_source exactly

    Raises:
        K3LatValidationError: If m is not rank(target) x rank(source)
    """
    m = rat_matrix(m, source.rank)
    if m.shape != (target.rank, source.rank):
        raise K3LatValidationError(
            f"Matrix shape {m.shape} does not map rank {source.rank} to rank {target.rank}"
        )
    return m.T * target.gram * m == source.gram


def identity(lattice: Lattice) -> RationalIsometry:
    return RationalIsometry(lattice, lattice, ImmutableMatrix.eye(lattice.rank))


def rank1_extension_coefficient(e_norm: int, r_norm: int) -> Rational:
    """
    Coefficient c = 1/lambda of the e (x) r summand, lambda^2 = <e,e><r,r>

    Args:
        e_norm: <e, e>, nonzero
        r_norm: <r, r>, nonzero

    Returns:
        Positive rational c

    Raises:
        K3LatPreconditionError: If e_norm * r_norm is not a positive perfect square

    Example:
        >>> rank1_extension_coefficient(-2, -72)
        1/12
    """
    e_norm, r_norm = int(e_norm), int(r_norm)
    if e_norm == 0 or r_norm == 0:
        raise K3LatPreconditionError("Norms must be nonzero", operation="rank1_extension_coefficient")
    product = e_norm * r_norm
    lam = isqrt(product) if product > 0 else 0
    if product <= 0 or lam * lam != product:
        raise K3LatPreconditionError(
            f"{e_norm} * {r_norm} = {product} is not a positive perfect square; "
            "no rational extension exists",
            operation="rank1_extension_coefficient",
        )
    return Rational(1, lam)


def _check_orthogonal(v: NormedVector, span: Optional[Embedding], what: str) -> None:
    if span is None:
        return
    if span.ambient != v.ambient:
        raise K3LatValidationError(f"{what} and its span live in different lattices")
    for i in range(span.rank):
        if v.ambient.pair(v.coords, list(span.basis.row(i))) != 0:
            raise K3LatPreconditionError(
                f"{what} is not orthogonal to the partial isometry's domain",
                operation="extend_isometry",
            )


def _check_span_gram(span: Optional[Embedding], expected: Lattice, what: str) -> None:
    if span is None:
        return
    if span.gram != expected.gram:
        raise K3LatPreconditionError(
            f"{what} has Gram matrix {span.gram.tolist()}, "
            f"expected {expected.gram.tolist()} from the partial isometry",
            operation="extend_isometry",
        )


def extend_isometry(
    partial: RationalIsometry,
    e: NormedVector,
    r: NormedVector,
    source_span: Optional[Embedding] = None,
    target_span: Optional[Embedding] = None,
) -> RationalIsometry:
    """
    Extend V' -> W' to V' + Qe -> W' + Qr

    The new summand acts by v -> sign(<e,e>) * c * <v,e> * r with
    c = rank1_extension_coefficient(<e,e>, <r,r>), so e maps to the
    positive multiple (|<e,e>| / lambda) * r and keeps its norm.

    Args:
        partial: Isometry on the orthogonal parts
        e: Source vector with its lattice
        r: Target vector with its lattice
        source_span: Optional sublattice V' of e's lattice, checked orthogonal to e
        target_span: Optional sublattice W' of r's lattice, checked orthogonal to r

    Raises:
        K3LatPreconditionError: If the coefficient is undefined, e or r is not
            orthogonal to its span, or a span does not carry the Gram matrix of
            the partial isometry's source or target
    """
    _check_span_gram(source_span, partial.source, "source_span")
    _check_span_gram(target_span, partial.target, "target_span")
    _check_orthogonal(e, source_span, "e")
    _check_orthogonal(r, target_span, "r")
    c = rank1_extension_coefficient(e.norm, r.norm)
    multiple = abs(e.norm) * c
    logger.debug(
        "Extending isometry",
        extra={"e_norm": e.norm, "r_norm": r.norm, "coefficient": str(c)},
    )
    return RationalIsometry(
        direct_sum(partial.source, rank1(e.norm)),
        direct_sum(partial.target, rank1(r.norm)),
        block_diag(partial.matrix, ImmutableMatrix([[multiple]])),
    )


def rank1_isometry(e_norm: int, r_norm: int) -> RationalIsometry:
    """Isometry <e_norm> -> <r_norm> sending the generator to a multiple of the generator"""
    empty = identity(Lattice(ImmutableMatrix.zeros(0, 0)))
    return extend_isometry(
        empty, NormedVector(rank1(e_norm), (1,)), NormedVector(rank1(r_norm), (1,))
    )


def block_sum(a: RationalIsometry, b: RationalIsometry) -> RationalIsometry:
    """Block-diagonal isometry a + b on the direct sums"""
    return RationalIsometry(
        direct_sum(a.source, b.source),
        direct_sum(a.target, b.target),
        block_diag(a.matrix, b.matrix),
    )


def compose(a: RationalIsometry, b: RationalIsometry) -> RationalIsometry:
    """a after b"""
    if b.target != a.source:
        raise K3LatValidationError("compose needs b.target == a.source")
    return RationalIsometry(b.source, a.target, a.matrix * b.matrix)


def inverse(a: RationalIsometry) -> RationalIsometry:
    """
    Inverse of a square isometry

    Raises:
        K3LatPreconditionError: If the matrix is not invertible
    """
    if a.source.rank != a.target.rank or a.matrix.det() == 0:
        raise K3LatPreconditionError("Isometry is not invertible", operation="inverse")
    return RationalIsometry(a.target, a.source, a.matrix.inv())


def is_period_point(p: PeriodPoint) -> bool:
    """
    True iff <x,x> = <y,y>, <x,y> = 0 and <x,x> + <y,y> > 0

    Raises:
        K3LatValidationError: If a vector length does not match the lattice
    """
    ensure_valid(p)
    xx = p.lattice.norm(p.re)
    yy = p.lattice.norm(p.im)
    xy = p.lattice.pair(p.re, p.im)
    return bool(xx == yy and xy == 0 and xx + yy > 0)


def transport_period(iso: RationalIsometry, p: PeriodPoint) -> PeriodPoint:
    """
    Push a period forward along an isometry

    Raises:
        K3LatValidationError: If p does not live on iso.source
        K3LatPreconditionError: If p is not a valid period
    """
    if p.lattice != iso.source:
        raise K3LatValidationError("Period lattice does not match the isometry source")
    if not is_period_point(p):
        raise K3LatPreconditionError("Input is not a valid period point", operation="transport_period")
    image = PeriodPoint(iso.target, iso.apply(p.re), iso.apply(p.im))
    if not is_period_point(image):
        raise K3LatConsistencyError("Transported period is invalid", expected=True, computed=False)
    return image


def caldararu_kernel_check(ker_a: Embedding, ker_b: Embedding, iso: RationalIsometry) -> bool:
    """
    Whether iso restricts to an integral Hodge isometry ker_a -> ker_b

    The images of ker_a's basis must have integral coordinates in ker_b's
    basis, and the induced Gram matrices must agree.

    Raises:
        K3LatValidationError: If the lattices do not match the isometry
        K3LatPreconditionError: If an image leaves the rational span of ker_b
    """
    if ker_a.ambient != iso.source or ker_b.ambient != iso.target:
        raise K3LatValidationError("Kernel ambients do not match the isometry")
    if ker_a.rank == 0:
        return ker_b.rank == 0
    images = ImmutableMatrix([list(iso.apply(list(ker_a.basis.row(i)))) for i in range(ker_a.rank)])
    coords = coordinates(ker_b, images)
    integral = all(x.q == 1 for x in coords)
    preserved = coords * ker_b.gram * coords.T == ker_a.gram
    logger.debug("Kernel check", extra={"integral": integral, "preserved": preserved})
    return integral and preserved
