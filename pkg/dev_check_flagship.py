# Development scratch: timing + shape of the flagship lex basis run.
import time

from birot4.fixtures import NORMALIZED_VARS, case7_system, CERTIFICATE_TARGET_TEXT
from birot4.groebner import IdealPresentation, buchberger, certify_membership, reduce
from birot4.poly import LEX, parse_polynomial, format_polynomial

system = case7_system()
gens = tuple(system[k] for k in ("E0", "E2", "E3", "E4", "E5", "E6"))
pres = IdealPresentation(NORMALIZED_VARS, LEX, gens)

t0 = time.time()
gb = buchberger(pres, track_provenance=False)
t1 = time.time()
print(f"no-provenance basis: {t1-t0:.2f}s, {len(gb.elements)} elements, stats {gb.stats}")
for g in gb.elements:
    s = format_polynomial(g, LEX)
    print("  lm-first:", s[:100] + ("..." if len(s) > 100 else ""), f"[{len(g.terms)} terms]")

target = parse_polynomial(CERTIFICATE_TARGET_TEXT, NORMALIZED_VARS)
nf, _ = reduce(target, gb.elements, LEX)
print("p*t^4 normal form:", format_polynomial(nf, LEX))

t2 = time.time()
gb2 = buchberger(pres, track_provenance=True)
t3 = time.time()
print(f"provenance basis: {t3-t2:.2f}s")
cert = certify_membership(target, gb2)
print("certificate verified:", cert.verify(), "member:", cert.is_member)
print("cofactor term counts:", [len(c.terms) for c in cert.cofactors])
print("cofactor degrees:", [c.total_degree() for c in cert.cofactors])
