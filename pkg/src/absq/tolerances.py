"""Central tolerance table.

Library code and the test suite both import these constants so that a
validation threshold is never duplicated with a different value.
"""

# Hermiticity: max entrywise |M - M^dagger| accepted as Hermitian.
HERMITICITY_TOL = 1e-10

# Positive semidefiniteness: smallest eigenvalue a density matrix may have.
PSD_FLOOR = -1e-9

# Unit-trace check for density matrices.
TRACE_TOL = 1e-10

# Spectral decomposition: reconstruction V diag(w) V^dagger must match the
# input to this accuracy.
RECONSTRUCTION_TOL = 1e-8

# Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
JACOBI_OFFDIAG_TOL = 1e-12

# Eigenvalues in [EIG_CLAMP_FLOOR, 0) are treated as exact zeros inside
# entropy functionals; anything below PSD_FLOOR is a validation failure.
EIG_CLAMP_FLOOR = -1e-9

# Guard band for inclusive class-membership comparisons (lambda_max <= 1/d
# and friends); boundary states classify as members.
CLASS_MARGIN = 1e-12

# Default bisection width for boundary finding.
BISECTION_TOL = 1e-7

# Measurement outcomes below this probability carry no conditional state.
PROB_FLOOR = 1e-12
