"""
Genus-one fibration invariants: fibration index, Weierstrass validity,
nodal fibers, j-map degree and the Jacobian kernel sequence
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import igcd

from .config import Config
from .exact import multiplicity_part, poly_gcd, squarefree_decomposition
from .exceptions import K3LatPreconditionError, K3LatValidationError
from .lattice import character_kernel
from .models.binform import BinForm
from .models.fibration import FibrationData, WeierstrassModel
from .models.lattice import Character, Embedding, Lattice
from .utils.validators import ensure_valid

logger = logging.getLogger(__name__)

DISCRIMINANT_DEGREE = 24


def fibration_index(d: FibrationData) -> int:
    """
    Smallest positive fibre degree: gcd over the NS basis of |<b_i, f>|

    Raises:
        K3LatPreconditionError: If f is zero, not isotropic, or orthogonal to all of NS

    Example:
        >>> fibration_index(FibrationData(Lattice([[2, 3], [3, 0]]), (0, 1)))
        3
    """
    ensure_valid(d)
    if all(x == 0 for x in d.fiber):
        raise K3LatPreconditionError("Fiber class is zero", operation="fibration_index")
    if d.ns.norm(d.fiber) != 0:
        raise K3LatPreconditionError("Fiber class is not isotropic", operation="fibration_index")
    g = 0
    for i in range(d.ns.rank):
        basis_vector = [1 if j == i else 0 for j in range(d.ns.rank)]
        g = igcd(g, int(d.ns.pair(basis_vector, d.fiber)))
    if g == 0:
        raise K3LatPreconditionError(
            "Fibre degree form vanishes on NS", operation="fibration_index"
        )
    return int(g)


def discriminant_form(w: WeierstrassModel) -> BinForm:
    """Delta = g2^3 - 27 * g3^2, a degree-24 form"""
    ensure_valid(w)
    return w.g2 ** 3 - (w.g3 ** 2).scale(27)


def is_valid(w: WeierstrassModel) -> bool:
    """
    Whether (g2, g3) defines a K3 Weierstrass model

    Requires Delta != 0 and no point of P^1 (infinity included) with
    v_p(g2) >= 4 and v_p(g3) >= 6, detected as a non-constant gcd of the
    multiplicity >= 4 part of g2 and the multiplicity >= 6 part of g3.
    """
    delta = discriminant_form(w)
    if delta.is_zero():
        return False
    high_g2 = multiplicity_part(w.g2, 4)
    high_g3 = multiplicity_part(w.g3, 6)
    common = poly_gcd(high_g2, high_g3)
    return common.degree == 0


def _require_nonzero_delta(w: WeierstrassModel, operation: str) -> BinForm:
    delta = discriminant_form(w)
    if delta.is_zero():
        raise K3LatPreconditionError("Discriminant vanishes identically", operation=operation)
    return delta


def nodal_fiber_count(w: WeierstrassModel) -> int:
    """Number of simple roots of Delta on P^1"""
    delta = _require_nonzero_delta(w, "nodal_fiber_count")
    return sum(factor.degree for factor, mult in squarefree_decomposition(delta) if mult == 1)


def j_degree(w: WeierstrassModel) -> int:
    """Degree of [g2^3 : Delta] : P^1 -> P^1, 24 - deg gcd(g2^3, Delta)"""
    delta = _require_nonzero_delta(w, "j_degree")
    return DISCRIMINANT_DEGREE - poly_gcd(w.g2 ** 3, delta).degree


def jacobian_kernel(t_j: Lattice, alpha: Character) -> Tuple[Embedding, int]:
    """
    T_X as the kernel of alpha: T_J -> Z/n, with index [T_J : T_X]

    Raises:
        K3LatValidationError: If alpha is not defined on t_j
    """
    if alpha.domain != t_j:
        raise K3LatValidationError("Character is not defined on the given lattice")
    return character_kernel(alpha), alpha.order


def weierstrass_summary(w: WeierstrassModel) -> Dict[str, Any]:
    """
    {valid, delta_nonzero, nodal_count, j_degree}; counts are None when Delta = 0
    """
    delta = discriminant_form(w)
    nonzero = not delta.is_zero()
    summary = {
        "valid": is_valid(w),
        "delta_nonzero": nonzero,
        "nodal_count": nodal_fiber_count(w) if nonzero else None,
        "j_degree": j_degree(w) if nonzero else None,
    }
    logger.debug("Weierstrass summary", extra=summary)
    return summary


def scan_models(
    models: Sequence[WeierstrassModel], threads: Optional[int] = None
) -> List[Dict[str, Any]]:
    """
    Summaries for many models, computed in parallel, returned in input order
    """
    workers = threads if threads is not None else Config.get_threads()
    if workers <= 1 or len(models) <= 1:
        return [weierstrass_summary(w) for w in models]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(weierstrass_summary, models))
