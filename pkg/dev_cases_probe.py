import sys
import time
sys.set_int_max_str_digits(100000)

from fractions import Fraction

from birot4.cases import (
    check_case_I, check_case_II, check_case_III, check_case_IV,
    check_case_V, check_case_VI, check_case_VII, summarize_report,
)
from birot4.constraints import NORMALIZED_VARS, extract_system
from birot4.poly import Polynomial, format_polynomial
from birot4.series import ProfileIVP, solve_profile_ivp

def show(rep):
    print(summarize_report(rep))
    for s in rep.steps:
        if s.status != "pass":
            print("  FAIL:", s.description)
            print("       ", s.detail[:400])

t0 = time.time()
for fn in (check_case_I, check_case_II, check_case_III, check_case_IV,
           check_case_V, check_case_VI):
    t1 = time.time()
    try:
        show(fn())
    except Exception as exc:
        print(f"{fn.__name__} RAISED {type(exc).__name__}: {exc}")
    print(f"  ({time.time() - t1:.2f}s)")

# probe the case VII shapes before paying for the certificate
nv = NORMALIZED_VARS
system = extract_system(solve_profile_ivp(ProfileIVP()), "VII")
av, bv, uv, pv, tv = (Polynomial.variable(nv, n) for n in nv.names)

e4_t = system.equation("E4").substitute({"t": 0, "u": -(bv * pv)})
print("E4|t=0,u=-Bp:", format_polynomial(e4_t))
print("  expected   :", format_polynomial(pv * (8 * av - bv * bv + 8 * bv * bv * pv * pv)))

e3_t = system.equation("E3").substitute({"t": 0, "u": -(bv * pv)})
print("E3|t=0,u=-Bp:", format_polynomial(e3_t))
a_image = Fraction(1, 8) * (bv * bv - 8 * bv * bv * pv * pv)
print("E3 after A  :", format_polynomial(e3_t.substitute({"A": a_image})))

e4b = system.equation("E4").substitute({"p": 0, "t": Fraction(-2, 3)})
print("E4|p=0,t=-2/3:", format_polynomial(e4b))
buckets = e4b.as_univariate_in("B")
print("  B-buckets:", [format_polynomial(b) for b in buckets])

e0b = system.equation("E0").substitute({"p": 0, "t": Fraction(-2, 3), "B": Fraction(34, 9)})
print("E0|...,B=34/9:", format_polynomial(e0b))

e3b = system.equation("E3").substitute({"p": 0, "t": Fraction(-2, 3),
                                        "B": Fraction(34, 9), "A": Fraction(1024, 81)})
print("E3|... :", format_polynomial(e3b))

print(f"probes done at {time.time() - t0:.2f}s; running full case VII (certificate)...")
t1 = time.time()
try:
    show(check_case_VII())
except Exception as exc:
    print(f"check_case_VII RAISED {type(exc).__name__}: {exc}")
print(f"  ({time.time() - t1:.2f}s)")
