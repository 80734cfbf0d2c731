import math
import time
from fractions import Fraction

import numpy as np

from birot4.numeric import (
    IntegrationParams, NumericError, ProfileState, biharmonic_residual,
    catenoid_state, catenoid_surface, cylinder_state, cylinder_surface,
    integrate_profile, residual_profile, stencil_second_derivative,
    surface_laplacian_gap, sweep_nonminimal, trajectory_table,
)

t0 = time.time()

# catenoid: arc defect < 1e-8, biharmonic residual < 1e-6
state, params = catenoid_state()
traj = integrate_profile(state, params, 2.0)
rep = biharmonic_residual(traj)
print("catenoid n:", len(traj), "r_end:", traj.states[-1].r, "vs cosh(2):", math.cosh(2.0))
print("catenoid arc:", rep.arc_defect, "compat:", rep.compatibility, "biharm:", rep.biharmonic)

# cylinder: c stays -1; c-equation residual = 1
state, params = cylinder_state()
cyl = integrate_profile(state, params, 2.0)
cs = cyl.column("c")
print("cylinder c range:", cs.min(), cs.max(), "r drift:", abs(cyl.column("r") - 1).max())
rep = biharmonic_residual(cyl)
print("cylinder biharm (expect 1):", rep.biharmonic, "arc:", rep.arc_defect)

# zero-length integration
single = integrate_profile(state, params, 0.0)
print("zero-length returns initial:", len(single) == 1 and single.states[0] == state)

# exponential curvature trajectory: biharmonic residual < 1e-8
init = ProfileState(tau=0.0, x=0.0, x_dot=1.0, y=0.0, y_dot=0.0,
                    r=1.0, r_dot=0.0, c=0.3, c_dot=-0.1)
exp_traj = integrate_profile(init, IntegrationParams(), 2.0)
rep = biharmonic_residual(exp_traj)
print("exp-c biharm:", rep.biharmonic, "(want < 1e-8)")
cplus, cminus = (0.3 + -0.1) / 2, (0.3 - -0.1) / 2
c_exact = cplus * np.exp(exp_traj.column("tau")) + cminus * np.exp(-exp_traj.column("tau"))
print("c matches exponential combo:", np.abs(exp_traj.column("c") - c_exact).max())

# stencil on analytic exponential samples
taus = np.arange(0, 2.0001, 1e-2)
samples = 0.2 * np.exp(taus) + 0.5 * np.exp(-taus)
gap = np.abs(stencil_second_derivative(samples, 1e-2) - samples[2:-2]).max()
print("analytic stencil c''-c:", gap, "(want < 1e-8)")

# r-floor truncation: shrinking radius with strong negative curvature
shrink = ProfileState(tau=0.0, x=0.0, x_dot=1.0, y=0.0, y_dot=0.0,
                      r=0.05, r_dot=-0.5, c=-30.0, c_dot=0.0)
tr = integrate_profile(shrink, IntegrationParams(freeze_curvature=True), 2.0)
print("floor truncation:", tr.truncated, tr.flag, "kept", len(tr))

# surface Laplacian: cylinder close to exact, catenoid Richardson ratio ~4
gap_cyl = surface_laplacian_gap(cylinder_surface(), (-1.0, 1.0), (41, 64))
print("cylinder laplacian gap:", gap_cyl)
g1 = surface_laplacian_gap(catenoid_surface(), (-1.0, 1.0), (41, 64))
g2 = surface_laplacian_gap(catenoid_surface(), (-1.0, 1.0), (81, 128))
print("catenoid gaps:", g1, g2, "ratio:", g1 / g2)

# degenerate grids rejected
for bad in (((2, 64), (-1, 1)), ((41, 8), (-1, 1)), ((41, 64), (1, 1))):
    grid, span = bad
    try:
        surface_laplacian_gap(catenoid_surface(), span, grid)
        print("MISSED rejection for", bad)
    except NumericError as exc:
        print("rejected:", str(exc)[:40])
try:
    surface_laplacian_gap(SurfaceProfileZero := cylinder_surface().__class__(
        x=lambda s: 0.0, y=lambda s: 0.0, r=lambda s: 0.0), (-1, 1), (41, 64))
    print("MISSED constant-map rejection")
except NumericError as exc:
    print("constant map rejected:", str(exc)[:50])

# integrator order on c'' = c: halving ladder ratios in [12, 20]
def c_error(h):
    init = ProfileState(0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0)
    t = integrate_profile(init, IntegrationParams(), 1.0, h)
    return abs(t.states[-1].c - math.cosh(1.0))
errs = [c_error(h) for h in (4e-2, 2e-2, 1e-2, 5e-3)]
ratios = [errs[i] / errs[i + 1] for i in range(len(errs) - 1)]
print("order ratios:", ratios)

# symbolic-numeric agreement on r(tau)
from birot4.series import ProfileIVP, solve_profile_ivp
ivp = ProfileIVP(r0=Fraction(1), r1=Fraction(1, 10), c0=Fraction(1, 5),
                 c1=Fraction(-1, 10), alpha=Fraction(3, 10), beta=Fraction(1, 2))
prof = solve_profile_ivp(ivp)
point = {n: Fraction(0) for n in prof.r.vars.names}
coeffs = [float(c.evaluate(point)) for c in prof.r.coefficients]
tau_eval = 0.1
series_val = sum(c * tau_eval ** n / math.factorial(n) for n, c in enumerate(coeffs))
init = ProfileState(0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.1, 0.2, -0.1)
t = integrate_profile(init, IntegrationParams(alpha=0.3, beta=0.5), tau_eval, 1e-3)
print("series vs integrator r(0.1):", series_val, t.states[-1].r,
      abs(series_val - t.states[-1].r))

# sweep: catenoid row clean, perturbed row violates fast, empty grid empty
rows = sweep_nonminimal([
    {"r0": 1.0},                                            # catenoid data
    {"r0": 1.0, "r1": 0.2, "c0": 0.4, "c1": 0.1, "alpha": 0.5, "beta": 0.7},
    {"r0": -1.0},
    {"r0": 1.0, "r1": 0.5, "c0": 0.3, "beta": 0.0},          # unsolvable compat
], window=1.5)
for row in rows.rows:
    print("sweep:", row.status, row.violation_tau, row.peak_residual)
print("empty sweep:", sweep_nonminimal([]).rows == ())
print("table head:", rows.table()[0])
print("table row:", rows.table()[2])

tt = trajectory_table(traj := integrate_profile(*catenoid_state(), 0.02, 1e-2),
                      residuals=None)
print("table lines:", len(tt), tt[1][:60])

print(f"total {time.time() - t0:.2f}s")
