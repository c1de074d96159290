"""
Constants for k3lat
Centralized constants to avoid magic values and keep catalog data in one place
"""

# CLI exit codes
EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_USAGE_ERROR = 2

# Integers at or above this magnitude are emitted as JSON strings
JSON_SAFE_INT_LIMIT = 2**53

# Standard lattice names
LATTICE_E8NEG = "E8neg"
LATTICE_U = "U"
LATTICE_K3 = "K3"
LATTICE_RANK1_PREFIX = "rank1:"

# E8 Dynkin diagram, Bourbaki node order 1..8 written 0-based
E8_EDGES = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
E8_RANK = 8

# K3 lattice layout: -E8 + -E8 + U + U + U
K3_RANK = 22
K3_HYPERBOLIC_OFFSET = 16  # u1, v1, u2, v2, u3, v3 occupy coordinates 16..21

# Family catalog (Picard data per family)
M_GRAM = [[2]]
M_POLARIZATION = [1]
M_AMBIENT_DIM = 2

M_ALPHA_GRAM = [[2, 0], [0, -2]]  # basis (D, e)
M_ALPHA_POLARIZATION = [1, 0]
M_ALPHA_FIBER = [1, -1]
M_ALPHA_AMBIENT_DIM = 2

M_BETA_GRAM = [[2, 3], [3, 0]]  # basis (D, F)
M_BETA_POLARIZATION = [1, 1]  # H = D + F
M_BETA_FIBER = [0, 1]
M_BETA_AMBIENT_DIM = 5

Y_GRAM = [[8]]
Y_POLARIZATION = [1]
Y_AMBIENT_DIM = 5
Y_LINE_GRAM = [[8, 1], [1, -2]]  # degree-8 H containing a line L

J0_GRAM = [[4, 1], [1, -2]]  # quartic hyperplane class H, line L
J0_POLARIZATION = [1, 0]
J0_AMBIENT_DIM = 3

J3_GRAM = [[0, 2], [2, 0]]  # pullbacks of the two rulings of P1 x P1
J3_POLARIZATION = [1, 1]
J3_FIBER = [1, 0]
J3_AMBIENT_DIM = 3

FAMILY_NAMES = ["M", "M_alpha", "M_beta", "Y", "J0", "J3"]

# Projective series
SERIES_X3K = "X3k"
SERIES_X3K1 = "X3k1"
SERIES_X3K2 = "X3k2"
SERIES_Y4M5 = "Y4m5"
SERIES_NAMES = [SERIES_X3K, SERIES_X3K1, SERIES_X3K2, SERIES_Y4M5]

# Middle-degree Schubert classes of Gr(2, 4) as partitions in the 2x2 box
SCHUBERT_BOX = 2
SCHUBERT_POINT_CLASS = (2,)
SCHUBERT_PLANE_CLASS = (1, 1)

# Claim groups for `reproduce --filter`
CLAIM_GROUPS = ["lattice", "hodge", "mukai", "fibration", "families"]

# Shipped sample data
SAMPLE_WEIERSTRASS_FILE = "sample_weierstrass.json"
