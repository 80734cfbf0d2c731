import sys, time
sys.set_int_max_str_digits(100000)
sys.path.insert(0, "src")
from birot4.fixtures import case7_system, NORMALIZED_VARS, CERTIFICATE_TARGET_TEXT
from birot4.poly import LEX, Polynomial, parse_polynomial, variables
from birot4.groebner import (IdealPresentation, staged_buchberger,
                             certify_membership, reduce)

# small sanity cases first
V = variables("x", "y")
x = Polynomial.variable(V, "x")
y = Polynomial.variable(V, "y")
p1 = IdealPresentation(V, LEX, (x,))
c1 = certify_membership(p1, x * x)
print("x^2 in <x>:", c1.is_member, "cofactors:", [str(len(c.terms)) for c in c1.cofactors])
c2 = certify_membership(p1, y)
print("y in <x>:", c2.is_member, "(expect False)")
# pivot path sanity: x + y is a unit pivot for x
p2 = IdealPresentation(V, LEX, (x + y, x * y))
c3 = certify_membership(p2, y * y)   # x*y - y*(x+y) = -y^2
print("y^2 in <x+y, x*y>:", c3.is_member, "verify:", c3.verify())

system = case7_system()
gens = tuple(system[k] for k in ("E0", "E2", "E3", "E4", "E5", "E6"))
pres = IdealPresentation(NORMALIZED_VARS, LEX, gens)
target = parse_polynomial(CERTIFICATE_TARGET_TEXT, NORMALIZED_VARS)

t0 = time.time()
cert = certify_membership(pres, target)
t1 = time.time()
print(f"flagship certify_membership: {t1-t0:.2f}s, member={cert.is_member}")
t2 = time.time()
ok = cert.verify()
t3 = time.time()
print(f"re-verify: {ok} in {t3-t2:.2f}s")
print("cofactor term counts:", [len(c.terms) for c in cert.cofactors])

t4 = time.time()
c_one = certify_membership(pres, Polynomial.constant(NORMALIZED_VARS, 1))
t5 = time.time()
print(f"unit certify: {t5-t4:.2f}s, member={c_one.is_member} (expect False), verify={c_one.verify()}")
