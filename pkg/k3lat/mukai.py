"""
Extended Mukai lattice arithmetic, fineness of moduli, splitting types
on P^1 and the middle-degree Schubert pairing of Gr(2, 4)
"""

import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy import ImmutableMatrix, igcd, zeros

from . import constants
from .exceptions import K3LatPreconditionError, K3LatValidationError
from .lattice import orthogonal_complement, span
from .models.lattice import Embedding, Lattice
from .models.mukai import MukaiVector, NSContext
from .utils.validators import ensure_valid, validate_partition

logger = logging.getLogger(__name__)


def _check_dimension(v: MukaiVector, ctx: NSContext) -> None:
    if len(v.c1) != ctx.ns.rank:
        raise K3LatValidationError(
            f"c1 has {len(v.c1)} coordinates but NS has rank {ctx.ns.rank}"
        )


def mukai_pairing(v: MukaiVector, w: MukaiVector, ctx: NSContext) -> int:
    """
    <v, w> = <c1_v, c1_w> - r_v * s_w - s_v * r_w

    Example:
        >>> ctx = NSContext(Lattice([[8]]))
        >>> mukai_pairing(MukaiVector(2, (1,), 2), MukaiVector(2, (1,), 2), ctx)
        0
    """
    _check_dimension(v, ctx)
    _check_dimension(w, ctx)
    return int(ctx.ns.pair(v.c1, w.c1)) - v.r * w.s - v.s * w.r


def from_chern(r: int, c1: Sequence[int], c2: int, ctx: NSContext) -> MukaiVector:
    """
    Mukai vector of a sheaf with rank r and Chern classes c1, c2 on a K3

    Uses sqrt(td) = (1, 0, 1), so s = r + (c1^2 - 2*c2) / 2.

    Raises:
        K3LatPreconditionError: If c1^2 is odd (the Gram is not a K3 NS lattice)
    """
    c1 = tuple(int(x) for x in c1)
    if len(c1) != ctx.ns.rank:
        raise K3LatValidationError(f"c1 has {len(c1)} coordinates but NS has rank {ctx.ns.rank}")
    square = int(ctx.ns.norm(c1))
    if square % 2 != 0:
        raise K3LatPreconditionError(
            f"c1^2 = {square} is odd; not a K3 Neron-Severi class", operation="from_chern"
        )
    return MukaiVector(int(r), c1, int(r) + (square - 2 * int(c2)) // 2)


def is_isotropic(v: MukaiVector, ctx: NSContext) -> bool:
    return mukai_pairing(v, v, ctx) == 0


def is_primitive(v: MukaiVector) -> bool:
    """gcd of all coordinates is 1 (the zero vector is not primitive)"""
    g = 0
    for x in v.coordinates():
        g = igcd(g, x)
    return g == 1


def fineness_index(v: MukaiVector, ctx: NSContext) -> int:
    """
    n = gcd of <omega, v> over all integral algebraic Mukai vectors omega

    Letting omega run over (1, 0, 0), (0, b_i, 0), (0, 0, 1) gives the closed
    form gcd(r, s, <c1, b_i>). The moduli space is fine iff n = 1.

    Raises:
        K3LatPreconditionError: If v is zero or pairs to zero with everything

    Example:
        >>> fineness_index(MukaiVector(2, (1,), 2), NSContext(Lattice([[8]])))
        2
    """
    _check_dimension(v, ctx)
    if v.is_zero():
        raise K3LatPreconditionError("Fineness of the zero vector", operation="fineness_index")
    g = igcd(v.r, v.s)
    products = ctx.ns.gram * ImmutableMatrix(list(v.c1)) if ctx.ns.rank else []
    for x in products:
        g = igcd(g, int(x))
    if g == 0:
        raise K3LatPreconditionError(
            "v pairs to zero with every algebraic class", operation="fineness_index"
        )
    logger.debug("Fineness index", extra={"v": v.coordinates(), "n": int(g)})
    return int(g)


def obstruction_residue(
    u: MukaiVector, v: MukaiVector, ctx: NSContext, modulus: Optional[int] = None
) -> int:
    """
    <u, v> mod n, n = fineness_index(v) unless an explicit modulus is given

    A residue of 1 identifies u as a representative of the obstruction class.
    The explicit modulus reads the pairing against the fineness index of a
    more generic member of the family.
    """
    n = fineness_index(v, ctx) if modulus is None else int(modulus)
    if n < 1:
        raise K3LatValidationError(f"modulus must be >= 1, got {n}")
    return mukai_pairing(u, v, ctx) % n


def quasi_universal_rank(v: MukaiVector, ctx: NSContext) -> int:
    """Rank n * r of a quasi-universal sheaf for moduli with Mukai vector v"""
    return fineness_index(v, ctx) * v.r


def mukai_lattice(ctx: NSContext) -> Lattice:
    """
    Algebraic part of the extended Mukai lattice in the basis (H^0, NS, H^4)

    Its form agrees with mukai_pairing on coordinate vectors.
    """
    ensure_valid(ctx)
    n = ctx.ns.rank + 2
    g = zeros(n, n)
    for i in range(ctx.ns.rank):
        for j in range(ctx.ns.rank):
            g[i + 1, j + 1] = ctx.ns.gram[i, j]
    g[0, n - 1] = -1
    g[n - 1, 0] = -1
    return Lattice(g, label="mukai")


def mukai_orthogonal(v: MukaiVector, ctx: NSContext) -> Embedding:
    """v-perp inside the algebraic Mukai lattice"""
    _check_dimension(v, ctx)
    if v.is_zero():
        raise K3LatPreconditionError("Orthogonal of the zero vector", operation="mukai_orthogonal")
    return orthogonal_complement(span(mukai_lattice(ctx), [list(v.coordinates())]))


def _non_increasing(rank: int, total: int, hi: int, lo: int) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of given length and sum with entries in [lo, hi]"""
    if rank == 0:
        if total == 0:
            yield ()
        return
    for a in range(hi, lo - 1, -1):
        rest = total - a
        if rest > (rank - 1) * a or rest < (rank - 1) * lo:
            continue
        for tail in _non_increasing(rank - 1, rest, a, lo):
            yield (a,) + tail


def split_h0(types: Sequence[int]) -> int:
    """h^0 of O(a_1) + ... + O(a_k) on P^1"""
    return sum(max(a + 1, 0) for a in types)


def p1_splitting_types(rank: int, degree: int, h0: int) -> List[Tuple[int, ...]]:
    """
    Splitting types O(a_1) + ... + O(a_rank) on P^1 with given degree and h^0

    Each a_i is at most h0 - 1 (a summand O(a) with a >= 0 contributes a + 1
    sections), which bounds the search.

    Returns:
        Non-increasing tuples in descending lexicographic order

    Example:
        >>> p1_splitting_types(2, -2, 0)
        [(-1, -1)]
    """
    if int(rank) < 1:
        raise K3LatValidationError(f"rank must be >= 1, got {rank}")
    if int(h0) < 0:
        raise K3LatValidationError(f"h0 must be >= 0, got {h0}")
    hi = h0 - 1
    lo = degree - (rank - 1) * hi
    return [t for t in _non_increasing(rank, degree, hi, lo) if split_h0(t) == h0]


def schubert_pairing(lam: Sequence[int], mu: Sequence[int]) -> int:
    """
    Poincare pairing of middle-degree Schubert classes on Gr(2, 4)

    sigma(p) is the partition (2), sigma(h) is (1, 1); two classes pair to 1
    exactly when one is the complement of the other in the 2x2 box.

    Raises:
        K3LatValidationError: If a partition is outside the box or not of size 2
    """
    try:
        a = validate_partition(lam)
        b = validate_partition(mu)
    except ValueError as e:
        raise K3LatValidationError(str(e))
    box = constants.SCHUBERT_BOX
    if sum(a) != box or sum(b) != box:
        raise K3LatValidationError("Schubert pairing is only defined in middle degree (|lambda| = 2)")
    complement = [box - a[1], box - a[0]]
    return 1 if b == complement else 0
