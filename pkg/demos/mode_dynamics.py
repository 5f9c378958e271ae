"""One mode two ways: the L1 scheme against the closed form.

Each mode amplitude solves ``D^alpha X + lambda x^beta X = 0, X(0) = 1``.
The closed form is a Kilbas-Saigo function; the L1 scheme discretizes the
Caputo derivative on a graded mesh ``x_j = (j / M)^r``. For ``beta >= 0`` the
two agree to 1e-3 at ``M = 4096``. For ``beta < 0`` the solution has an
``x^(alpha + beta)`` layer at the origin, the scheme converges below first
order there, and larger ``lambda`` steepen the layer.
"""

from __future__ import annotations

import math

import numpy as np

from degenfrac.fode import XGrid, caputo_l1_solve, ks_solution

print(f"{'lambda':>8} {'alpha':>6} {'beta':>6} {'max error':>10}")
for lam in (1.0, math.pi**2, 50.0):
    for alpha in (0.3, 0.5, 0.9):
        for beta in (-alpha / 2, 0.0, 1.0):
            grid = XGrid.graded(4096, 2.0 / alpha)
            X = caputo_l1_solve(lam, alpha, beta, grid, 1.0).values
            err = np.max(np.abs(X - ks_solution(1.0, lam, alpha, beta, grid.nodes)))
            flag = "" if err <= 1e-3 else "  <- above 1e-3"
            print(f"{lam:8.4g} {alpha:6.2f} {beta:6.3f} {err:10.2e}{flag}")

# {{{ convergence in the layer

lam, alpha = 50.0, 0.9
beta = -alpha / 2
print(f"\nrefinement at lambda={lam}, alpha={alpha}, beta={beta}:")
prev = None
for M in (1024, 2048, 4096, 8192):
    grid = XGrid.graded(M, 2.0 / alpha)
    X = caputo_l1_solve(lam, alpha, beta, grid, 1.0).values
    err = np.max(np.abs(X - ks_solution(1.0, lam, alpha, beta, grid.nodes)))
    rate = "" if prev is None else f"  observed order {math.log2(prev / err):.2f}"
    print(f"  M={M:5d}  error {err:.2e}{rate}")
    prev = err

# }}}
