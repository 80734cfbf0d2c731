import sys, time
sys.set_int_max_str_digits(100000)
sys.path.insert(0, "src")
from birot4.fixtures import case7_system, NORMALIZED_VARS, CERTIFICATE_TARGET_TEXT
from birot4.poly import LEX, Polynomial, parse_polynomial
from birot4.groebner import IdealPresentation, buchberger, staged_buchberger, reduce

system = case7_system()
gens = tuple(system[k] for k in ("E0", "E2", "E3", "E4", "E5", "E6"))
pres = IdealPresentation(NORMALIZED_VARS, LEX, gens)

t0 = time.time()
gb_direct = staged_buchberger(pres, track_provenance=False)
t1 = time.time()
print(f"direct staged full (no prov): {t1-t0:.2f}s, {len(gb_direct.elements)} elements")
print("stage1:", gb_direct.stats["stage1"])
print("stage2:", gb_direct.stats["stage2"])

target = parse_polynomial(CERTIFICATE_TARGET_TEXT, NORMALIZED_VARS)
nf, _ = reduce(target, gb_direct.elements, LEX)
print("p*t^4 reduces to zero:", nf.is_zero())
