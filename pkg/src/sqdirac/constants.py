"""Default tolerances, collected in one table.

Every numerical routine takes its tolerance as a keyword argument whose
default comes from here, so a caller can tighten or loosen a check
without touching the algorithm.
"""

# algebra
RANK_TAU = 1e-9
ROOT_RESIDUAL_REL = 1e-12
ROOT_MAX_ITER = 500
ROOT_STEP_TOL = 1e-15
CLUSTER_RADIUS = 1e-5

# representations
CLIFFORD_TOL = 1e-12
DISPLAY_TOL = 1e-14

# solutions
RESIDUAL_TOL = 1e-10
IDENTITY_TOL = 1e-12
FD_STEP = 1e-5
FD_AGREEMENT = 1e-6

# basis maps
EXPANSION_TOL = 1e-10
SINGULAR_DET = 1e-12

# boundary quantization
UNIT_CIRCLE_TOL = 1e-8
CANDIDATE_CIRCLE_TOL = 1e-6
ROOT_MATCH_TOL = 1e-8
DET_RESIDUAL_TOL = 1e-8
GRID_PHASE_STEP = 0.5  # bound on 2*a*dk, kept below pi/4
BISECT_MAX_ITER = 200
DUPLICATE_K_TOL = 1e-9
CURRENT_TOL = 1e-10

# evaluation point used when a matrix of solutions must be sampled
GENERIC_POINT = (0.0, 0.0, 0.0, 0.37)
