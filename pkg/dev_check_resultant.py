# Development scratch: validate subresultant resultant against a
# brute-force Sylvester determinant (Bareiss) on random fixtures.
import random
from fractions import Fraction

from birot4.poly import Polynomial, variables, exact_divide
from birot4.univariate import resultant_univariate


def sylvester_resultant(f, g, name):
    fa = f.as_univariate_in(name)
    ga = g.as_univariate_in(name)
    while fa and fa[-1].is_zero():
        fa.pop()
    while ga and ga[-1].is_zero():
        ga.pop()
    m, n = len(fa) - 1, len(ga) - 1
    size = m + n
    one = Polynomial.constant(f.vars, 1)
    zero = Polynomial.zero(f.vars)
    rows = []
    for i in range(n):  # rows of f coefficients
        row = [zero] * size
        for k, c in enumerate(reversed(fa)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(ga)):
            row[i + k] = c
        rows.append(row)
    # Bareiss fraction-free elimination with exact polynomial division
    prev = one
    sign = 1
    for k in range(size - 1):
        if rows[k][k].is_zero():
            for r in range(k + 1, size):
                if not rows[r][k].is_zero():
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]
                rows[i][j] = exact_divide(num, prev)
            rows[i][k] = zero
        prev = rows[k][k]
    det = rows[size - 1][size - 1]
    return det * sign


def random_poly(vars, rng, main, max_main_deg, n_terms):
    terms = {}
    width = len(vars)
    for _ in range(n_terms):
        exps = [0] * width
        exps[vars.index(main)] = rng.randint(0, max_main_deg)
        for i in range(width):
            if i != vars.index(main) and rng.random() < 0.5:
                exps[i] = rng.randint(0, 2)
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Polynomial(vars, terms)


def main():
    rng = random.Random(7)
    vs = variables("v", "s")
    bad = 0
    for trial in range(300):
        f = random_poly(vs, rng, "v", rng.randint(1, 4), rng.randint(2, 5))
        g = random_poly(vs, rng, "v", rng.randint(1, 4), rng.randint(2, 5))
        if f.degree_in("v") < 1 or g.degree_in("v") < 1:
            continue
        try:
            mine = resultant_univariate(f, g, "v")
        except Exception as exc:
            print("FAIL(exc)", trial, exc)
            print("  f =", f)
            print("  g =", g)
            bad += 1
            continue
        want = sylvester_resultant(f, g, "v")
        if mine != want:
            bad += 1
            print("FAIL", trial)
            print("  f =", f)
            print("  g =", g)
            print("  mine =", mine)
            print("  want =", want)
            if bad > 3:
                break
    print("done, failures:", bad)


if __name__ == "__main__":
    main()
