# Development scratch: exact values of the two elimination resultants.
from birot4.poly import Polynomial, variables, parse_polynomial, primitive_normalize
from birot4.univariate import resultant_univariate

vs = variables("A", "B", "t")
P = lambda s: parse_polynomial(s, vs)

# elimination of A (two equations linear in A)
e1 = P("3*A + 2*t^3 + 7*t^2 + 4*t")
e2 = P("15*A*t + 15*A + 5*t^4 + 27*t^3 + 35*t^2 + 8*t")
r = resultant_univariate(e1, e2, "A")
print("res_A  =", r)
print("norm   =", primitive_normalize(r)[0])
f = P("5*t^3 + 18*t^2 + 20*t + 12")
t = P("t")
print("r == -3*t*f:", r == -3 * t * f)

# elimination of B: quadratic pair after substituting the square closed form
Bv, tv = P("B"), P("t")
W = Bv + tv + tv ** 2
eq1 = 3 * W ** 2 + 2 * Bv * (tv + 1) + 2 * tv ** 3 + 7 * tv ** 2 + 4 * tv
eq2 = 15 * W ** 2 * (tv + 1) + Bv * (5 * tv ** 2 + 10 * tv + 4) + 5 * tv ** 4 + 27 * tv ** 3 + 35 * tv ** 2 + 8 * tv
quartic = P("18*t^4 + 73*t^3 + 140*t^2 + 120*t + 54")
target = 12 * tv ** 2 * quartic

res2 = resultant_univariate(eq1, eq2, "B")
print("res_B(eq1,eq2) =", res2)
n2, s2 = primitive_normalize(res2)
nt, st = primitive_normalize(target)
print("normalized equal to 12t^2*quartic:", n2 == nt)

# linear-combination route: eq2 - 5(t+1)eq1 should be linear in B
lin = eq2 - 5 * (tv + 1) * eq1
print("lin =", lin)
print("deg_B lin:", lin.degree_in("B"))

# resultant of the linear B-relation with eq1
res3 = resultant_univariate(lin, eq1, "B")
print("res_B(lin,eq1) =", res3)
print("res3 == target:", res3 == target, "| == -target:", res3 == -target)
n3, _ = primitive_normalize(res3)
print("normalized equal:", n3 == nt)

# substitution route: g*B + t*f2 = 0 with g = 5t^2+10t+6
g = P("5*t^2 + 10*t + 6")
f2 = P("5*t^3 + 18*t^2 + 20*t + 12")
print("lin == -(g*B + t*f2):", lin == -(g * Bv + tv * f2), "| lin == g*B + t*f2:", lin == g * Bv + tv * f2)
