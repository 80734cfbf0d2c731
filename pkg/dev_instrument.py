# Development scratch: watch basis growth on the flagship system.
import time

from birot4.fixtures import NORMALIZED_VARS, case7_system
from birot4.groebner import IdealPresentation, reduce, s_polynomial, _pair_sort_key
from birot4.poly import LEX, primitive_normalize, monomial_lcm, monomial_mul, monomial_divides

system = case7_system()
gens = [system[k] for k in ("E0", "E2", "E3", "E4", "E5", "E6")]
order = LEX

basis = []
for g in gens:
    n, _ = primitive_normalize(g, order)
    basis.append(n)

pending = {}
processed = set()

def push(new):
    lm_new = basis[new].leading_monomial(order)
    for i in range(new):
        pending[(i, new)] = monomial_lcm(basis[i].leading_monomial(order), lm_new)

for idx in range(1, len(basis)):
    push(idx)

t0 = time.time()
considered = 0
while pending:
    (i, j), lcm = min(pending.items(), key=lambda kv: _pair_sort_key(order, kv[1], *kv[0]))
    del pending[(i, j)]
    considered += 1
    lm_i = basis[i].leading_monomial(order)
    lm_j = basis[j].leading_monomial(order)
    if lcm == monomial_mul(lm_i, lm_j):
        continue
    skip = False
    for k in range(len(basis)):
        if k in (i, j):
            continue
        if monomial_divides(basis[k].leading_monomial(order), lcm):
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
    if skip:
        continue
    sp = s_polynomial(basis[i], basis[j], order)
    t_red = time.time()
    nf, _ = reduce(sp, basis, order)
    dt = time.time() - t_red
    if nf.is_zero():
        if dt > 1:
            print(f"[{time.time()-t0:7.1f}s] pair {(i,j)} -> 0   (reduce {dt:.1f}s, |S|={len(sp.terms)})")
        continue
    n, _ = primitive_normalize(nf, order)
    basis.append(n)
    push(len(basis) - 1)
    maxco = max(abs(c.numerator) for c in n.terms.values())
    print(f"[{time.time()-t0:7.1f}s] pair {(i,j)} -> basis[{len(basis)-1}] lm={n.leading_monomial(order)} "
          f"terms={len(n.terms)} maxcoef~1e{len(str(maxco))-1} (reduce {dt:.1f}s) pend={len(pending)}")
    if time.time() - t0 > 240:
        print("TIME CAP")
        break
print(f"considered {considered}, basis size {len(basis)}, elapsed {time.time()-t0:.1f}s")
