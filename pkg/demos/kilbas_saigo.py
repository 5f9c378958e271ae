"""The Kilbas-Saigo function on the negative real axis.

The mode amplitudes of the series solution are values of
``E_{alpha, 1 + beta/alpha, beta/alpha}(-lambda x^(alpha + beta))``. The
series behind it cancels catastrophically for large arguments, so the
evaluator picks a route per point: plain doubles, an exact fixed-point sum
with enough digits, or a table from the fractional ODE the function solves.
This script checks the known reductions and shows where each route applies.
"""

from __future__ import annotations

import time

import numpy as np
from scipy.special import erfcx

from degenfrac.specfn import KSParams, kilbas_saigo, mittag_leffler

# {{{ reductions

z = np.linspace(-20.0, 0.0, 201)
err = np.max(np.abs(kilbas_saigo(KSParams(1.0, 2.0, 1.0), z) - np.exp(z / 2)))
print(f"E_(1,2,1)(z) vs exp(z/2) on [-20, 0]:      {err:.1e}")

for alpha in (0.3, 0.5, 0.9):
    err = np.max(np.abs(kilbas_saigo(KSParams(alpha, 1.0, 0.0), z) - mittag_leffler(alpha, z)))
    print(f"E_({alpha},1,0)(z) vs E_{alpha}(z) on [-20, 0]:   {err:.1e}")

# E_{1/2}(-t) = erfcx(t), available in closed form to any depth
t = np.array([1.0, 10.0, 25.0, 100.0, 1000.0])
print("E_1/2(-t) - erfcx(t):", ", ".join(f"{e:.1e}" for e in mittag_leffler(0.5, -t) - erfcx(t)))

# }}}

# {{{ routes

params = KSParams.from_mode_problem(0.5, 0.5)
print(f"\nmode family alpha=0.5 beta=0.5: m={params.m}, l={params.l}")
for t in (1.0, 10.0, 20.0, 40.0, 400.0):
    start = time.perf_counter()
    # past |z| = 20 the extended-precision sum gets slow; auto hands those points to the ODE table
    series = kilbas_saigo(params, -t, method="series") if t <= 20 else float("nan")
    ode = kilbas_saigo(params, -t, method="ode")
    auto = kilbas_saigo(params, -t)
    ms = 1e3 * (time.perf_counter() - start)
    print(f"t={t:6g}  series {series:.10f}  ode {ode:.10f}  auto {auto:.10f}  ({ms:.0f} ms)")

# }}}

# {{{ boundedness

# every mode family stays in (0, 1] and never increases
for alpha in (0.3, 0.5, 0.9):
    for beta in (-alpha / 2, 0.0, 0.5, 1.0):
        v = np.asarray(kilbas_saigo(KSParams.from_mode_problem(alpha, beta), -np.linspace(0.0, 200.0, 401)))
        rise = float(np.max(np.diff(v)))
        print(f"alpha={alpha} beta={beta:+.2f}: range [{v.min():.3e}, {v.max():.3f}], largest rise {rise:.1e}")

# }}}
