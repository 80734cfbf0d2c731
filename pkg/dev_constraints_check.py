import time

from birot4.constraints import (
    NORMALIZED_VARS, arc_defect_series, compatibility_series, extract_system,
    system_from_document, system_to_document)
from birot4.fixtures import case7_system, case7_zeroth_equation
from birot4.poly import Polynomial, parse_polynomial
from birot4.series import INITIAL_DATA_VARS, ProfileIVP, solve_profile_ivp, quadratic_forced_component
import dataclasses

t0 = time.time()
profile = solve_profile_ivp(ProfileIVP())
sys7 = extract_system(profile, "VII")
print("labels:", sys7.labels())
print("E0 == fixture:", sys7.equation("E0") == case7_zeroth_equation())
fix = dict(case7_system())
for lbl in ("E2", "E3", "E4", "E5", "E6"):
    print(lbl, "== fixture:", sys7.equation(lbl) == fix[lbl])
for lbl in sys7.labels():
    o = sys7.origins[lbl]
    print(lbl, "tau", o.tau_order, "scalar", o.scalar, "r0pow", o.r0_power)
print("eliminated:", {k: (str(v.num.terms) if False else None) for k, v in sys7.eliminated.items()})

# VI: restriction identity
vi_profile = solve_profile_ivp(ProfileIVP(beta=0, k=Polynomial.variable(INITIAL_DATA_VARS, "k")))
sys6 = extract_system(vi_profile, "VI")
print("VI labels:", sys6.labels())
ok = True
for lbl in sys6.labels():
    restricted = fix[lbl].substitute({"B": 0, "p": 0})
    from birot4.poly import primitive_normalize
    want, _ = primitive_normalize(restricted)
    got = sys6.equation(lbl)
    if got != want:
        ok = False
        print("MISMATCH", lbl)
        print(" got ", got)
        print(" want", want)
print("VI == VII|B=0,p=0:", ok)

# V
base = solve_profile_ivp(ProfileIVP(beta=0, k=Polynomial.variable(INITIAL_DATA_VARS, "k")))
xv = quadratic_forced_component(base.r, Polynomial.variable(INITIAL_DATA_VARS, "alpha"),
                                Polynomial.variable(INITIAL_DATA_VARS, "x1"))
v_profile = dataclasses.replace(base, x=xv)
sys5 = extract_system(v_profile, "V")
print("V labels:", sys5.labels())
print("E1-V:", sys5.equation("E1") == parse_polynomial("A + t^2 + t + u*p", NORMALIZED_VARS))

# differentiation identity
for tag, prof in (("VII", profile), ("VI", vi_profile)):
    arc = arc_defect_series(prof)
    lhs = arc.derivative()
    rhs = (prof.r * prof.r) * compatibility_series(prof, tag)
    n = min(lhs.truncation_order, rhs.truncation_order)
    good = all((lhs[i] - (2 * rhs[i])).is_zero() for i in range(n + 1))
    print(f"d/dtau arc == 2 r^2 compat ({tag}):", good)

# catenoid: arc defect vanishes
cat = solve_profile_ivp(ProfileIVP(alpha=0, beta=0, k=0, r0=1, r1=0, c0=0, c1=0))
cat = dataclasses.replace(cat, x=quadratic_forced_component(cat.r, 0, 1))
arc = arc_defect_series(cat)
print("catenoid arc defect zero:", all(c.is_zero() for c in arc.coefficients))

# round trip
doc = system_to_document(sys7)
back = system_from_document(doc)
print("round trip:", back == sys7)
print("elapsed", round(time.time() - t0, 2), "s")
