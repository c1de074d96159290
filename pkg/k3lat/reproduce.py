"""
Machine-checked claim suite

Every claim recomputes a numeric statement from the library and compares it
with its expected value exactly. Claims are grouped (lattice, hodge, mukai,
fibration, families) and run with no network and no clock dependence.
"""

import logging
from math import isqrt
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import constants
from .exceptions import K3LatError, K3LatValidationError
from .families import (
    builtin,
    correspondence_lambda,
    enumerate_pairs,
    index_chain,
    solve_partner,
)
from .fibration import fibration_index, is_valid, jacobian_kernel, weierstrass_summary
from .hodge import block_sum, is_isometry, rank1_extension_coefficient, rank1_isometry
from .lattice import (
    discriminant,
    discriminant_group,
    orthogonal_complement,
    signature,
    span,
    standard,
    sublattice_index,
)
from .models.binform import BinForm
from .models.fibration import FibrationData, WeierstrassModel
from .models.lattice import Character, Lattice
from .models.mukai import MukaiVector, NSContext
from .models.report import ReportEntry
from .mukai import (
    fineness_index,
    from_chern,
    mukai_pairing,
    obstruction_residue,
    p1_splitting_types,
    quasi_universal_rank,
    schubert_pairing,
    split_h0,
)
from .utils.serialization import load_json_file, to_jsonable

logger = logging.getLogger(__name__)

ClaimFn = Callable[[], Tuple[Any, Any]]

_DATA_DIR = Path(__file__).parent / "data"


def load_sample_weierstrass() -> WeierstrassModel:
    """The shipped sample g2 = t^8 + s^8, g3 = s^12"""
    from .utils.serialization import parse_weierstrass

    return parse_weierstrass(load_json_file(_DATA_DIR / constants.SAMPLE_WEIERSTRASS_FILE))


# Lattice claims


def _k3_lattice() -> Tuple[Any, Any]:
    k3 = standard(constants.LATTICE_K3)
    computed = {
        "rank": k3.rank,
        "disc": discriminant(k3),
        "signature": list(signature(k3)),
        "even": k3.is_even,
    }
    return {"rank": 22, "disc": -1, "signature": [3, 19], "even": True}, computed


def _m_beta_discriminant_group() -> Tuple[Any, Any]:
    return [9], discriminant_group(builtin("M_beta").ns)


def _m_alpha_discriminant_group() -> Tuple[Any, Any]:
    return [2, 2], discriminant_group(builtin("M_alpha").ns)


def _m_beta_complement() -> Tuple[Any, Any]:
    m_beta = builtin("M_beta")
    r = orthogonal_complement(span(m_beta.ns, [list(m_beta.polarization)]))
    vector = list(r.basis.row(0))
    return {"r": [3, -5], "norm": -72}, {"r": vector, "norm": m_beta.ns.norm(vector)}


def _index_chain(chain: str) -> ClaimFn:
    def claim() -> Tuple[Any, Any]:
        report = index_chain(chain)
        expected = {"discriminant_index": report.expected, "explicit_index": report.expected}
        computed = {
            "discriminant_index": report.discriminant_index,
            "explicit_index": report.explicit_index,
        }
        return expected, computed

    return claim


# Hodge claims


def _coefficient(e_norm: int, r_norm: int, expected: str) -> ClaimFn:
    def claim() -> Tuple[Any, Any]:
        return expected, to_jsonable(rank1_extension_coefficient(e_norm, r_norm))

    return claim


def _assembled_isometry() -> Tuple[Any, Any]:
    z = block_sum(rank1_isometry(2, 8), rank1_isometry(-2, -72))
    computed = {
        "matrix": to_jsonable(z.matrix),
        "is_isometry": is_isometry(z.matrix, z.source, z.target),
    }
    return {"matrix": [["1/2", 0], [0, "1/6"]], "is_isometry": True}, computed


# Mukai claims

_V = MukaiVector(2, (1,), 2)


def _isotropic_v() -> Tuple[Any, Any]:
    return 0, mukai_pairing(_V, _V, NSContext(Lattice(constants.Y_GRAM)))


def _fineness_degree8() -> Tuple[Any, Any]:
    ctx = NSContext(Lattice(constants.Y_GRAM))
    return {"n": 2, "quasi_universal_rank": 4}, {
        "n": fineness_index(_V, ctx),
        "quasi_universal_rank": quasi_universal_rank(_V, ctx),
    }


def _fineness_with_line() -> Tuple[Any, Any]:
    ctx = NSContext(Lattice(constants.Y_LINE_GRAM))
    v = MukaiVector(2, (1, 0), 2)
    u = MukaiVector(0, (0, 1), 0)
    return {"pairing": 1, "n": 1, "residue": 0}, {
        "pairing": mukai_pairing(u, v, ctx),
        "n": fineness_index(v, ctx),
        "residue": obstruction_residue(u, v, ctx),
    }


def _m_beta_h_f_context() -> NSContext:
    """NS of M_beta in the basis (H, F), H = D + F"""
    m_beta = builtin("M_beta")
    basis = [list(m_beta.polarization), list(m_beta.fiber)]
    return NSContext(Lattice([[m_beta.ns.pair(x, y) for y in basis] for x in basis]))


def _fineness_m_beta() -> Tuple[Any, Any]:
    ctx = _m_beta_h_f_context()
    v = MukaiVector(2, (1, 0), 2)
    u = MukaiVector(0, (0, 1), 0)
    return {"pairing": 3, "n": 1, "residue_mod_2": 1}, {
        "pairing": mukai_pairing(u, v, ctx),
        "n": fineness_index(v, ctx),
        "residue_mod_2": obstruction_residue(u, v, ctx, modulus=2),
    }


def _double_cover_parity() -> Tuple[Any, Any]:
    ctx = NSContext(standard("rank1:2"))
    return [2, 2, 2], [fineness_index(MukaiVector(2, (1,), 2 * m), ctx) for m in (1, 2, 3)]


def _from_chern() -> Tuple[Any, Any]:
    v = from_chern(2, (1,), 4, NSContext(Lattice(constants.Y_GRAM)))
    return {"r": 2, "c1": [1], "s": 2}, v.to_dict()


def _splitting_type() -> Tuple[Any, Any]:
    solved = p1_splitting_types(2, -2, 0)
    brute = [
        (a, -2 - a) for a in range(-2, 1) if a >= -2 - a and split_h0((a, -2 - a)) == 0
    ]
    return {"types": [[-1, -1]], "brute_force": [[-1, -1]]}, {
        "types": [list(t) for t in solved],
        "brute_force": [list(t) for t in sorted(brute, reverse=True)],
    }


def _schubert_table() -> Tuple[Any, Any]:
    p, h = constants.SCHUBERT_POINT_CLASS, constants.SCHUBERT_PLANE_CLASS
    return [1, 0, 1], [schubert_pairing(p, p), schubert_pairing(p, h), schubert_pairing(h, h)]


# Fibration claims


def _family_index(name: str, expected: int) -> ClaimFn:
    def claim() -> Tuple[Any, Any]:
        spec = builtin(name)
        return expected, fibration_index(FibrationData(spec.ns, spec.fiber, label=name))

    return claim


def _sample_weierstrass() -> Tuple[Any, Any]:
    summary = weierstrass_summary(load_sample_weierstrass())
    return {"valid": True, "delta_nonzero": True, "nodal_count": 24, "j_degree": 24}, summary


def _invalid_weierstrass() -> Tuple[Any, Any]:
    w = WeierstrassModel(BinForm.monomial(8, 4), BinForm.monomial(12, 6))
    return False, is_valid(w)


def _jacobian_indices() -> Tuple[Any, Any]:
    t_j = Lattice([[2, 1], [1, 2]])
    computed = []
    for n in (2, 3):
        kernel, order = jacobian_kernel(t_j, Character(t_j, n, (1, 0)))
        computed.append({"order": order, "index": sublattice_index(kernel)})
    return [{"order": 2, "index": 2}, {"order": 3, "index": 3}], computed


# Families claims


def _partner() -> Tuple[Any, Any]:
    l = solve_partner(1, 1)  # noqa: E741
    return {"l": 6, "lambda": 12}, {"l": l, "lambda": correspondence_lambda(4, 6 * l)}


def _brute_pairs(s1_degree: Callable[[int], int], s2_degree: Callable[[int], int],
                 k_max: int, l_max: int) -> List[List[int]]:
    found = []
    for k in range(1, k_max + 1):
        for l in range(1, l_max + 1):  # noqa: E741
            product = s1_degree(k) * s2_degree(l)
            root = isqrt(product)
            if root * root == product:
                found.append([k, l, root])
    return found


def _x3k_x3k1_scan() -> Tuple[Any, Any]:
    brute = _brute_pairs(lambda k: 6 * k - 2, lambda p: 6 * p, 50, 500)
    pairs = enumerate_pairs(constants.SERIES_X3K, constants.SERIES_X3K1, 50, 500)
    return brute, [[p.k, p.l, p.lam] for p in pairs]


def _x3k_x3k2_empty() -> Tuple[Any, Any]:
    return [], [p.to_dict() for p in enumerate_pairs(constants.SERIES_X3K, constants.SERIES_X3K2, 50, 500)]


def _x3k_y4m5() -> Tuple[Any, Any]:
    pairs = enumerate_pairs(constants.SERIES_X3K, constants.SERIES_Y4M5, 1, 9)
    return True, any(p.k == 1 and p.l == 1 and p.lam == 8 for p in pairs)


def _m_beta_degree() -> Tuple[Any, Any]:
    spec = builtin("M_beta")
    return {"degree": 8, "ambient_dim": 5}, {"degree": spec.degree, "ambient_dim": spec.ambient_dim}


CLAIMS: List[Tuple[str, str, ClaimFn]] = [
    ("lattice.k3_lattice", "The K3 lattice is even, unimodular, of rank 22 and signature (3,19)", _k3_lattice),
    ("lattice.m_beta_discriminant_group", "Pic(M_beta) has discriminant group Z/9", _m_beta_discriminant_group),
    ("lattice.m_alpha_discriminant_group", "Pic(M_alpha) has discriminant group (Z/2)^2", _m_alpha_discriminant_group),
    ("lattice.m_beta_complement", "H-perp in Pic(M_beta) is spanned by r = 3D - 5F = 3H - 8F with <r,r> = -72", _m_beta_complement),
    ("lattice.index_two_embedding", "T_{M_alpha} + Ze has index 2 in T_M", _index_chain("M_alpha->M")),
    ("lattice.index_nine_embedding", "T_{M_beta} + Zr has index 9 in T_Y", _index_chain("M_beta->Y")),
    ("hodge.coefficient_e_r", "The e (x) r summand has coefficient 1/12 for norms (-2, -72)", _coefficient(-2, -72, "1/12")),
    ("hodge.coefficient_d_h", "The D (x) H summand has coefficient 1/4 for norms (2, 8)", _coefficient(2, 8, "1/4")),
    ("hodge.assembled_isometry", "D -> H/2 and e -> r/6 assemble to an exact isometry", _assembled_isometry),
    ("mukai.isotropic_v", "v = (2,H,2) on <8> is isotropic: 8 - 8 = 0", _isotropic_v),
    ("mukai.fineness_degree8", "Fineness index of (2,H,2) on <8> is 2; quasi-universal rank 4", _fineness_degree8),
    ("mukai.fineness_with_line", "A line L with <(0,L,0), v> = 1 makes the moduli fine", _fineness_with_line),
    ("mukai.fineness_m_beta", "On M_beta, <(0,F,0), v> = 3 = 1 mod 2 and the moduli are fine", _fineness_m_beta),
    ("mukai.double_cover_parity", "On NS = <2>, (2, D, 2m) has even fineness index", _double_cover_parity),
    ("mukai.from_chern", "Rank 2, c1 = H, c2 = 4 gives the Mukai vector (2,H,2)", _from_chern),
    ("mukai.splitting_type", "A rank-2 degree -2 bundle on P^1 without sections is O(-1) + O(-1)", _splitting_type),
    ("mukai.schubert_table", "Middle Schubert pairings on Gr(2,4): (p,p)=1, (p,h)=0, (h,h)=1", _schubert_table),
    ("fibration.index_m_alpha", "The fibration D - e on M_alpha has index 2", _family_index("M_alpha", 2)),
    ("fibration.index_m_beta", "The fibration F on M_beta has index 3", _family_index("M_beta", 3)),
    ("fibration.sample_weierstrass", "t^8 + s^8, s^12 is valid with 24 nodal fibers and j of degree 24", _sample_weierstrass),
    ("fibration.invalid_weierstrass", "t^4 s^4, t^6 s^6 violates the multiplicity condition", _invalid_weierstrass),
    ("fibration.jacobian_kernel", "Surjective characters of order 2 and 3 cut out kernels of index 2 and 3", _jacobian_indices),
    ("families.partner", "l = 3 rho d^2 gives l = 6 and lambda = 12 for k = d = 1", _partner),
    ("families.x3k_x3k1_scan", "X3k x X3k1 pairs agree with a brute-force scan over k <= 50, l <= 500", _x3k_x3k1_scan),
    ("families.x3k_x3k2_empty", "X3k x X3k2 has no correspondence pairs", _x3k_x3k2_empty),
    ("families.x3k_y4m5", "X3 x Y9 has a correspondence with lambda = 8", _x3k_y4m5),
    ("families.m_beta_degree", "M_beta embeds in P^5 with degree 8", _m_beta_degree),
]


def run_claim(claim_id: str, statement: str, fn: ClaimFn) -> ReportEntry:
    """Run one claim; library errors become failed entries"""
    try:
        expected, computed = fn()
        expected, computed = to_jsonable(expected), to_jsonable(computed)
    except K3LatError as e:
        logger.warning("Claim raised", extra={"claim_id": claim_id, "error": str(e)})
        return ReportEntry(claim_id, statement, None, f"error: {e}", False)
    passed = expected == computed
    if passed:
        logger.info("Claim passed", extra={"claim_id": claim_id})
    else:
        logger.warning("Claim failed", extra={"claim_id": claim_id})
    return ReportEntry(claim_id, statement, expected, computed, passed)


def run_claims(groups: Optional[Sequence[str]] = None) -> List[ReportEntry]:
    """
    Run the claim suite, optionally restricted to some groups

    Raises:
        K3LatValidationError: If a group name is unknown
    """
    if groups:
        unknown = [g for g in groups if g not in constants.CLAIM_GROUPS]
        if unknown:
            raise K3LatValidationError(
                f"Unknown claim group(s): {unknown}", errors={"accepted": constants.CLAIM_GROUPS}
            )
    return [
        run_claim(claim_id, statement, fn)
        for claim_id, statement, fn in CLAIMS
        if not groups or claim_id.split(".", 1)[0] in groups
    ]


def summarize(entries: Sequence[ReportEntry]) -> Dict[str, Any]:
    passed = sum(1 for e in entries if e.passed)
    return {"total": len(entries), "passed": passed, "failed": len(entries) - passed}
