import sys, time
sys.set_int_max_str_digits(100000)
sys.path.insert(0, "src")
from birot4.fixtures import case7_system, NORMALIZED_VARS, CERTIFICATE_TARGET_TEXT
from birot4.poly import LEX, GREVLEX, Polynomial, parse_polynomial, format_polynomial
from birot4.groebner import (IdealPresentation, buchberger, staged_buchberger,
                             certify_membership, reduce)

system = case7_system()
A = Polynomial.variable(NORMALIZED_VARS, "A")

def a_parts(h):
    """Split h = A*c + d, requiring degree <= 1 in A."""
    assert h.degree_in("A") == 1
    c_terms, d_terms = {}, {}
    ai = NORMALIZED_VARS.index("A")
    for e, co in h.terms.items():
        if e[ai] == 1:
            c_terms[e[:ai] + (0,) + e[ai+1:]] = co
        elif e[ai] == 0:
            d_terms[e] = co
        else:
            raise AssertionError("degree > 1 in A")
    return Polynomial(NORMALIZED_VARS, c_terms), Polynomial(NORMALIZED_VARS, d_terms)

E3 = system["E3"]
three = Polynomial.constant(NORMALIZED_VARS, 3)
reduced_gens = {}
combos = {}
for label in ("E0", "E4", "E5", "E6"):
    h = system[label]
    c, d = a_parts(h)
    f = three * h - c * E3
    assert f.degree_in("A") == 0
    # identity check: 3*h - c*E3 == f
    assert three * h - c * E3 == f
    reduced_gens[label] = f
    combos[label] = c
    print(label, "-> terms:", len(f.terms), "deg:", f.total_degree())

gens4 = (reduced_gens["E0"], system["E2"], reduced_gens["E4"],
         reduced_gens["E5"], reduced_gens["E6"])
pres = IdealPresentation(NORMALIZED_VARS, LEX, gens4)

t0 = time.time()
gb = staged_buchberger(pres, track_provenance=True)
t1 = time.time()
print(f"provenance staged GB: {t1-t0:.2f}s, {len(gb.elements)} elements")
for g in gb.elements:
    print("  lm", g.leading_monomial(LEX), "terms", len(g.terms))

target = parse_polynomial(CERTIFICATE_TARGET_TEXT, NORMALIZED_VARS)
t2 = time.time()
cert = certify_membership(target, gb)
t3 = time.time()
print(f"certify over 5 reduced gens: {t3-t2:.2f}s, member={cert.is_member}")
print("cofactor term counts:", [len(c.terms) for c in cert.cofactors])

# compose back to the six originals: F = 3*E - c*E3 for E in (E0,E4,E5,E6)
labels5 = ("E0", "E2", "E4", "E5", "E6")
full_cof = {lab: Polynomial.zero(NORMALIZED_VARS) for lab in ("E0", "E2", "E3", "E4", "E5", "E6")}
for lab, q in zip(labels5, cert.cofactors):
    if lab == "E2":
        full_cof["E2"] = full_cof["E2"] + q
    else:
        full_cof[lab] = full_cof[lab] + q * three
        full_cof["E3"] = full_cof["E3"] - q * combos[lab]
acc = Polynomial.zero(NORMALIZED_VARS)
for lab in ("E0", "E2", "E3", "E4", "E5", "E6"):
    acc = acc + full_cof[lab] * system[lab]
print("composed certificate over originals verifies:", acc == target)
print("composed cofactor term counts:", {k: len(v.terms) for k, v in full_cof.items()})
maxco = max((abs(c.numerator) for v in full_cof.values() for c in v.terms.values()),
            default=0)
maxden = max((c.denominator for v in full_cof.values() for c in v.terms.values()),
             default=1)
print("composed max |num| digits:", len(str(maxco)), "max den digits:", len(str(maxden)))
