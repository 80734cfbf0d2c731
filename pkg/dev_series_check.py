import sys
sys.path.insert(0, "src")
from birot4.series import ProfileIVP, solve_profile_ivp
from birot4.fixtures import profile_series_fixture
from birot4.poly import format_polynomial, LEX

sol = solve_profile_ivp(ProfileIVP())
fix = profile_series_fixture()
ok = True
for comp, series in (("r", sol.r), ("x", sol.x), ("y", sol.y)):
    for n, expected in fix[comp].items():
        got = series[n]
        match = got == expected
        ok = ok and match
        if not match:
            print(f"MISMATCH {comp}[{n}]")
            print("  got:     ", format_polynomial(got, LEX))
            print("  expected:", format_polynomial(expected, LEX))
print("all fixture coefficients match:", ok)

# back-substitution: r'' - r - c r^2 == 0, c'' - c == 0,
# x'' - alpha*tau*r^2 == 0, y'' - beta*r^2 == 0
from birot4.series import series_mul, shift_by_expansion_variable
from birot4.poly import Polynomial
from birot4.series import INITIAL_DATA_VARS as V
alpha = Polynomial.variable(V, "alpha")
beta = Polynomial.variable(V, "beta")
r2 = series_mul(sol.r, sol.r)
checks = {
    "r": sol.r.derivative().derivative() - sol.r - series_mul(sol.c, r2),
    "c": sol.c.derivative().derivative() - sol.c,
    "x": sol.x.derivative().derivative() - alpha * shift_by_expansion_variable(r2),
    "y": sol.y.derivative().derivative() - beta * r2,
}
for name, defect in checks.items():
    print(f"back-substitution {name}: zero to order {defect.truncation_order}:", defect.is_zero())
