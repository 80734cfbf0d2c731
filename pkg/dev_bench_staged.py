import sys, time
sys.set_int_max_str_digits(100000)
sys.path.insert(0, "src")
from birot4.fixtures import case7_system, NORMALIZED_VARS, CERTIFICATE_TARGET_TEXT
from birot4.poly import LEX, GREVLEX, parse_polynomial, format_polynomial
from birot4.groebner import (IdealPresentation, buchberger, staged_buchberger,
                             certify_membership, reduce)

system = case7_system()
gens = tuple(system[k] for k in ("E0", "E2", "E3", "E4", "E5", "E6"))
pres = IdealPresentation(NORMALIZED_VARS, LEX, gens)

t0 = time.time()
gb = staged_buchberger(pres, track_provenance=True)
t1 = time.time()
print(f"staged total: {t1-t0:.2f}s, {len(gb.elements)} elements")
print("stats:", {k: v for k, v in gb.stats.items() if not isinstance(v, dict)})
print("stage1:", gb.stats["stage1"])
print("stage2:", gb.stats["stage2"])

target = parse_polynomial(CERTIFICATE_TARGET_TEXT, NORMALIZED_VARS)
t2 = time.time()
cert = certify_membership(target, gb)
t3 = time.time()
print(f"certify: {t3-t2:.2f}s, is_member={cert.is_member}, verify={cert.verify()}")
maxco = max(abs(c.numerator) for g in gb.elements for c in g.terms.values())
print("max basis coeff digits:", len(str(maxco)))
for g in gb.elements:
    print("  lm", g.leading_monomial(LEX), "terms", len(g.terms))
cof_terms = [len(c.terms) for c in cert.cofactors]
print("cofactor term counts:", cof_terms)
