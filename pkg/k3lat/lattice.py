"""
Integral lattices: standard constructors, sublattices, complements,
discriminant groups and Brauer-type characters

Sublattices are stored as coordinate rows in a fixed ambient basis and
compared through their row HNF.
"""

import logging
from math import isqrt
from typing import List, Tuple

from sympy import ImmutableMatrix, zeros

from . import constants
from .exact import (
    block_diag,
    congruence_diagonalize,
    det,
    hnf,
    int_matrix,
    integer_kernel,
    invariant_factors,
    nonzero_rows,
    solve_left,
    vstack,
)
from .exceptions import K3LatPreconditionError, K3LatValidationError
from .models.lattice import Character, Embedding, Lattice

logger = logging.getLogger(__name__)


def _e8neg_gram() -> ImmutableMatrix:
    g = zeros(constants.E8_RANK, constants.E8_RANK)
    for i in range(constants.E8_RANK):
        g[i, i] = -2
    for i, j in constants.E8_EDGES:
        g[i, j] = 1
        g[j, i] = 1
    return ImmutableMatrix(g)


def rank1(d: int) -> Lattice:
    """The rank-one lattice <d>"""
    if int(d) == 0:
        raise K3LatValidationError("rank1 needs a nonzero integer")
    return Lattice([[d]], label=f"{constants.LATTICE_RANK1_PREFIX}{d}")


def standard(name: str) -> Lattice:
    """
    Build a standard lattice by name

    Args:
        name: "E8neg", "U", "K3", or "rank1:d" (also "rank1(d)")

    Returns:
        Lattice with the conventional Gram matrix; E8neg is the Bourbaki
        Cartan matrix of E8 negated and K3 = -E8 + -E8 + U + U + U

    Raises:
        K3LatValidationError: If the name is unknown

    Example:
        >>> standard("U").gram.tolist()
        [[0, 1], [1, 0]]
        >>> standard("K3").rank
        22
    """
    if name == constants.LATTICE_E8NEG:
        return Lattice(_e8neg_gram(), label=name)
    if name == constants.LATTICE_U:
        return Lattice([[0, 1], [1, 0]], label=name)
    if name == constants.LATTICE_K3:
        e8 = standard(constants.LATTICE_E8NEG)
        u = standard(constants.LATTICE_U)
        k3 = direct_sum(direct_sum(direct_sum(direct_sum(e8, e8), u), u), u)
        return Lattice(k3.gram, label=name)
    param = None
    if isinstance(name, str) and name.startswith(constants.LATTICE_RANK1_PREFIX):
        param = name[len(constants.LATTICE_RANK1_PREFIX):]
    elif isinstance(name, str) and name.startswith("rank1(") and name.endswith(")"):
        param = name[len("rank1("):-1]
    if param is not None:
        try:
            return rank1(int(param))
        except ValueError:
            raise K3LatValidationError(f"Bad rank1 parameter in {name!r}")
    raise K3LatValidationError(
        f"Unknown lattice name: {name!r}",
        errors={"accepted": ["E8neg", "U", "K3", "rank1:d"]},
    )


def direct_sum(a: Lattice, b: Lattice) -> Lattice:
    """Orthogonal direct sum (block-diagonal Gram)"""
    return Lattice(block_diag(a.gram, b.gram))


def discriminant(lattice: Lattice) -> int:
    """Signed determinant of the Gram matrix (1 for rank 0)"""
    return det(lattice.gram)


def discriminant_group(lattice: Lattice) -> List[int]:
    """
    Nontrivial invariant factors of the discriminant group L^dual / L

    Raises:
        K3LatPreconditionError: If the Gram matrix is singular
    """
    if discriminant(lattice) == 0:
        raise K3LatPreconditionError(
            "Discriminant group of a degenerate lattice", operation="discriminant_group"
        )
    return [d for d in invariant_factors(lattice.gram) if d != 1]


def signature(lattice: Lattice) -> Tuple[int, int]:
    """(positive, negative) counts of a rational diagonalization of the Gram matrix"""
    return congruence_diagonalize(lattice.gram)[2]


def full_embedding(lattice: Lattice) -> Embedding:
    """The lattice as a sublattice of itself (identity basis)"""
    return Embedding(lattice, ImmutableMatrix.eye(lattice.rank))


def span(lattice: Lattice, rows) -> Embedding:
    return Embedding(lattice, int_matrix(rows, lattice.rank))


def orthogonal_complement(e: Embedding) -> Embedding:
    """
    Primitive sublattice {v : <v, w> = 0 for all w in image(e)}

    Example:
        >>> pic = Lattice([[2, 3], [3, 0]])
        >>> orthogonal_complement(span(pic, [[1, 1]])).basis.tolist()
        [[3, -5]]
    """
    ambient = e.ambient
    if e.rank == 0:
        return full_embedding(ambient)
    kernel = integer_kernel(e.basis * ambient.gram, ambient.rank)
    logger.debug(
        "Computed orthogonal complement",
        extra={"ambient_rank": ambient.rank, "sub_rank": e.rank, "complement_rank": kernel.rows},
    )
    return Embedding(ambient, kernel)


def saturation(e: Embedding) -> Tuple[Embedding, int]:
    """
    Smallest primitive sublattice containing image(e), with the index

    Returns:
        (primitive, [primitive : image(e)])
    """
    n = e.ambient.rank
    if e.rank == 0:
        return e, 1
    closure = integer_kernel(integer_kernel(e.basis, n), n)
    index = 1
    for d in invariant_factors(e.basis):
        index *= d
    return Embedding(e.ambient, closure), index


def sublattice_index(e: Embedding) -> int:
    """
    Index of a full-rank sublattice, |det(basis)|

    Raises:
        K3LatValidationError: If rank(e) != rank(ambient)
    """
    if e.rank != e.ambient.rank:
        raise K3LatValidationError(
            f"sublattice_index needs a full-rank sublattice, got rank {e.rank} "
            f"in rank {e.ambient.rank}"
        )
    return abs(det(e.basis))


def index_from_discriminants(disc_sub: int, disc_super: int) -> int:
    """
    Index of a full-rank inclusion from discriminants: index^2 = |disc_sub| / |disc_super|

    Raises:
        K3LatPreconditionError: If the quotient is not a perfect square integer

    Example:
        >>> index_from_discriminants(648, 8)
        9
    """
    sub, sup = abs(int(disc_sub)), abs(int(disc_super))
    if sub == 0 or sup == 0:
        raise K3LatPreconditionError("Discriminants must be nonzero", operation="index_from_discriminants")
    if sub % sup != 0:
        raise K3LatPreconditionError(
            f"|disc| {sub} is not divisible by {sup}", operation="index_from_discriminants"
        )
    quotient = sub // sup
    root = isqrt(quotient)
    if root * root != quotient:
        raise K3LatPreconditionError(
            f"Discriminant quotient {quotient} is not a perfect square",
            operation="index_from_discriminants",
        )
    return root


def character_kernel(c: Character) -> Embedding:
    """
    Kernel {v : c(v) = 0 mod n} as a sublattice of the domain

    Its index in the domain equals the exact order of c.
    """
    row = int_matrix([list(c.values) + [c.modulus]])
    kernel = integer_kernel(row)
    # Drop the multiple-of-n coordinate; the projection is injective
    projected = kernel[:, : c.domain.rank]
    basis = nonzero_rows(hnf(projected)[0])
    return Embedding(c.domain, basis)


def restrict_character(c: Character, e: Embedding) -> Character:
    """
    Restriction of c to a sublattice of its domain, reduced to its exact order

    Raises:
        K3LatValidationError: If e does not live in c's domain
    """
    if e.ambient != c.domain:
        raise K3LatValidationError("Embedding is not inside the character's domain")
    values = [c.evaluate(list(e.basis.row(i))) for i in range(e.rank)]
    return Character(e.sublattice(), c.modulus, tuple(values)).reduced()


def intersect(e1: Embedding, e2: Embedding) -> Embedding:
    """
    Intersection of two sublattices of the same ambient

    Solves a*B1 = b*B2 over the integers through the left kernel of the
    stacked system [B1; -B2].

    Raises:
        K3LatValidationError: If the ambients differ
    """
    if e1.ambient != e2.ambient:
        raise K3LatValidationError("intersect needs sublattices of the same ambient")
    n = e1.ambient.rank
    if e1.rank == 0 or e2.rank == 0:
        return Embedding(e1.ambient, ImmutableMatrix.zeros(0, n))
    stacked = vstack(e1.basis, -e2.basis)
    relations = integer_kernel(stacked.T, stacked.rows)
    if relations.rows == 0:
        return Embedding(e1.ambient, ImmutableMatrix.zeros(0, n))
    coeffs = relations[:, : e1.rank]
    images = coeffs * e1.basis
    return Embedding(e1.ambient, nonzero_rows(hnf(images)[0]))


def brauer_element_count(t: Lattice, n: int) -> int:
    """Number of elements of order dividing n in T^dual tensor Q/Z, n^rank"""
    if int(n) < 1:
        raise K3LatValidationError(f"n must be >= 1, got {n}")
    return int(n) ** t.rank


def coordinates(e: Embedding, vectors) -> ImmutableMatrix:
    """
    Rational coordinates of ambient vectors in the basis of e

    Raises:
        K3LatPreconditionError: If a vector lies outside the rational span
    """
    return solve_left(e.basis, vectors)


def pushforward(inner: Embedding, outer: Embedding) -> Embedding:
    """Compose inner (a sublattice of outer's lattice) with outer's embedding"""
    if inner.ambient != outer.sublattice():
        raise K3LatValidationError("Inner embedding does not live in the outer sublattice")
    return Embedding(outer.ambient, inner.basis * outer.basis)


def lattice_info(lattice: Lattice) -> dict:
    """Summary used by the CLI: rank, signature, disc, disc group, evenness"""
    disc = discriminant(lattice)
    return {
        "rank": lattice.rank,
        "signature": list(signature(lattice)),
        "disc": disc,
        "disc_group": discriminant_group(lattice) if disc != 0 else None,
        "even": lattice.is_even,
    }

