"""Branch-by-branch contradiction checks for the surface classification.

Seven independent verifiers, one per branch of the rotation-data partition.
Each rebuilds its branch's deductions from the component equations: exact
polynomial identities, eliminations with every divisor tied to a recorded
nonzero hypothesis, and sign claims backed by re-verifiable witnesses
(exact evaluation, Sturm root counting, or a positive-combination rewrite).
The outcome is an immutable CaseReport whose verdict is
contradiction-verified only if every step checked out.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .constraints import NORMALIZED_VARS, compatibility_series, extract_system
from .fixtures import (
    CASE5_FOURTH_DERIVATIVE,
    CASE6_CUBIC_AT_HI,
    CASE6_CUBIC_AT_LO,
    CASE6_ROOT_WINDOW,
    CASE6_TAU4_COEFF,
    CASE7_A_VALUE,
    CASE7_B_VALUE,
    CASE7_REDUCED_CONSTANT,
    CERTIFICATE_TARGET_TEXT,
    CUBIC_T_TEXT,
    QUADRATIC_T_TEXT,
    QUARTIC_DECOMP_CONST,
    QUARTIC_DECOMP_T2,
    QUARTIC_SQUARE_SHIFT,
    QUARTIC_T_TEXT,
)
from .groebner import IdealPresentation, MembershipCertificate, certify_membership
from .poly import (
    LEX,
    Polynomial,
    RationalFunction,
    VariableSet,
    evaluate_rational,
    format_polynomial,
    parse_polynomial,
    primitive_normalize,
    substitute_even_powers,
    variables,
)
from .series import (
    INITIAL_DATA_NAMES,
    INITIAL_DATA_VARS,
    ProfileIVP,
    TruncatedSeries,
    quadratic_forced_component,
    solve_profile_ivp,
)
from .univariate import (
    NEG_INFINITY,
    POS_INFINITY,
    REAL_LINE,
    count_real_roots,
    resultant_univariate,
)

REPORT_FORMAT = "birot4/case-report@1"

CASE_IDS = ("I", "II", "III", "IV", "V", "VI", "VII")

# sign sets: subsets of {-1, 0, 1} a quantity can take on a region
_POS = frozenset({1})
_NEG = frozenset({-1})
_ZERO = frozenset({0})
_NONNEG = frozenset({0, 1})
_NONPOS = frozenset({-1, 0})
_NONZERO = frozenset({-1, 1})
_ANY = frozenset({-1, 0, 1})


def _sign_mul(a: frozenset, b: frozenset) -> frozenset:
    return frozenset(x * y for x in a for y in b)


def _sign_add(a: frozenset, b: frozenset) -> frozenset:
    if a <= _NONNEG and b <= _NONNEG:
        return _POS if (a == _POS or b == _POS) else _NONNEG
    if a <= _NONPOS and b <= _NONPOS:
        return _NEG if (a == _NEG or b == _NEG) else _NONPOS
    return _ANY


def _sign_of(value: Fraction) -> int:
    return (value > 0) - (value < 0)


# -- regions -----------------------------------------------------------


@dataclass(frozen=True)
class VariableCondition:
    """Rational bounds and sign knowledge for one region variable."""

    lower: Fraction | None = None
    lower_strict: bool = True
    upper: Fraction | None = None
    upper_strict: bool = True
    nonzero: bool = False

    @staticmethod
    def positive() -> "VariableCondition":
        return VariableCondition(lower=Fraction(0), lower_strict=True)

    @staticmethod
    def negative() -> "VariableCondition":
        return VariableCondition(upper=Fraction(0), upper_strict=True)

    @staticmethod
    def nonzero_only() -> "VariableCondition":
        return VariableCondition(nonzero=True)

    @staticmethod
    def window(lower, upper, strict: bool = True) -> "VariableCondition":
        return VariableCondition(lower=Fraction(lower), lower_strict=strict,
                                 upper=Fraction(upper), upper_strict=strict)

    @staticmethod
    def point(value) -> "VariableCondition":
        value = Fraction(value)
        return VariableCondition(lower=value, lower_strict=False,
                                 upper=value, upper_strict=False,
                                 nonzero=bool(value))

    def sign_set(self) -> frozenset:
        out = _ANY
        if self.lower is not None:
            if self.lower > 0 or (self.lower == 0 and self.lower_strict):
                out = out & _POS
            elif self.lower == 0:
                out = out & _NONNEG
        if self.upper is not None:
            if self.upper < 0 or (self.upper == 0 and self.upper_strict):
                out = out & _NEG
            elif self.upper == 0:
                out = out & _NONPOS
        if self.nonzero:
            out = out & _NONZERO
        return out

    def admits(self, value: Fraction) -> bool:
        if self.lower is not None:
            if value < self.lower or (value == self.lower and self.lower_strict):
                return False
        if self.upper is not None:
            if value > self.upper or (value == self.upper and self.upper_strict):
                return False
        if self.nonzero and value == 0:
            return False
        return True


@dataclass(frozen=True)
class Region:
    """Conjunction of per-variable conditions; absent variables are free."""

    conditions: Mapping[str, VariableCondition] = field(default_factory=dict)

    def condition(self, name: str) -> VariableCondition:
        return self.conditions.get(name, VariableCondition())

    def contains(self, point: Mapping[str, Fraction]) -> bool:
        for name, cond in self.conditions.items():
            if name not in point:
                return False
            if not cond.admits(Fraction(point[name])):
                return False
        return True


# -- interval arithmetic (closed-box ranges, sound) --------------------


@dataclass(frozen=True)
class _Interval:
    lo: Fraction | None = None
    lo_strict: bool = True
    hi: Fraction | None = None
    hi_strict: bool = True

    @staticmethod
    def exact(value: Fraction) -> "_Interval":
        return _Interval(value, False, value, False)

    @staticmethod
    def of_condition(cond: VariableCondition) -> "_Interval":
        return _Interval(cond.lower, cond.lower_strict, cond.upper, cond.upper_strict)

    def bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    def add(self, other: "_Interval") -> "_Interval":
        lo = None if self.lo is None or other.lo is None else self.lo + other.lo
        hi = None if self.hi is None or other.hi is None else self.hi + other.hi
        return _Interval(lo, self.lo_strict or other.lo_strict,
                         hi, self.hi_strict or other.hi_strict)

    def scale(self, factor: Fraction) -> "_Interval":
        if factor == 0:
            return _Interval.exact(Fraction(0))
        if factor > 0:
            lo = None if self.lo is None else self.lo * factor
            hi = None if self.hi is None else self.hi * factor
            return _Interval(lo, self.lo_strict, hi, self.hi_strict)
        return self.negate().scale(-factor)

    def negate(self) -> "_Interval":
        lo = None if self.hi is None else -self.hi
        hi = None if self.lo is None else -self.lo
        return _Interval(lo, self.hi_strict, hi, self.lo_strict)

    def power(self, e: int) -> "_Interval":
        if e == 0:
            return _Interval.exact(Fraction(1))
        if e % 2:
            lo = None if self.lo is None else self.lo ** e
            hi = None if self.hi is None else self.hi ** e
            return _Interval(lo, self.lo_strict, hi, self.hi_strict)
        if self.lo is not None and self.lo >= 0:
            return _Interval(self.lo ** e, self.lo_strict,
                             None if self.hi is None else self.hi ** e, self.hi_strict)
        if self.hi is not None and self.hi <= 0:
            return _Interval((-self.hi) ** e, self.hi_strict,
                             None if self.lo is None else (-self.lo) ** e, self.lo_strict)
        # the range straddles zero (or is unbounded around it)
        if self.lo is None or self.hi is None:
            return _Interval(Fraction(0), False, None, True)
        a, b = (-self.lo) ** e, self.hi ** e
        if a > b:
            hi, strict = a, self.lo_strict
        elif b > a:
            hi, strict = b, self.hi_strict
        else:
            hi, strict = a, self.lo_strict and self.hi_strict
        return _Interval(Fraction(0), False, hi, strict)

    def multiply(self, other: "_Interval") -> "_Interval":
        if not (self.bounded() and other.bounded()):
            return _Interval()
        candidates = [
            (self.lo * other.lo, self.lo_strict or other.lo_strict),
            (self.lo * other.hi, self.lo_strict or other.hi_strict),
            (self.hi * other.lo, self.hi_strict or other.lo_strict),
            (self.hi * other.hi, self.hi_strict or other.hi_strict),
        ]
        lo = min(v for v, _ in candidates)
        hi = max(v for v, _ in candidates)
        lo_strict = all(s for v, s in candidates if v == lo)
        hi_strict = all(s for v, s in candidates if v == hi)
        return _Interval(lo, lo_strict, hi, hi_strict)

    def sign_set(self) -> frozenset:
        out = _ANY
        if self.lo is not None:
            if self.lo > 0 or (self.lo == 0 and self.lo_strict):
                out = out & _POS
            elif self.lo == 0:
                out = out & _NONNEG
        if self.hi is not None:
            if self.hi < 0 or (self.hi == 0 and self.hi_strict):
                out = out & _NEG
            elif self.hi == 0:
                out = out & _NONPOS
        return out


def interval_of(f: Polynomial, region: Region) -> _Interval:
    """Sound range enclosure of f over the region's box."""
    total = _Interval.exact(Fraction(0))
    for exps, coeff in f.terms.items():
        term = _Interval.exact(Fraction(1))
        for name, e in zip(f.vars, exps):
            if e:
                base = _Interval.of_condition(region.condition(name))
                term = term.multiply(base.power(e))
        total = total.add(term.scale(coeff))
    return total


def _power_sign(s: frozenset, e: int) -> frozenset:
    if e == 0:
        return _POS
    if e % 2 == 0:
        out = set()
        if s & _NONZERO:
            out.add(1)
        if 0 in s:
            out.add(0)
        return frozenset(out)
    return s


def polynomial_sign_set(f: Polynomial, region: Region) -> frozenset:
    """Sign set of f on the region: per-monomial rules, then intervals.

    Per-monomial: a term's sign is its coefficient sign times the product
    of variable signs read off the region, with even powers of nonzero
    variables counting as positive.  If the per-monomial sum is not
    decisive, fall back to the interval enclosure.
    """
    if f.is_zero():
        return _ZERO
    total = None
    for exps, coeff in f.terms.items():
        term = frozenset({_sign_of(coeff)})
        for name, e in zip(f.vars, exps):
            if e:
                term = _sign_mul(term, _power_sign(region.condition(name).sign_set(), e))
        total = term if total is None else _sign_add(total, term)
        if total == _ANY:
            break
    if total != _ANY:
        return total
    return interval_of(f, region).sign_set()


# -- sign-fact witnesses -----------------------------------------------

_CLAIM_SETS = {"positive": _POS, "negative": _NEG, "zero": _ZERO}


def _occurring_names(f: Polynomial) -> set[str]:
    names: set[str] = set()
    for exps in f.terms:
        for name, e in zip(f.vars, exps):
            if e:
                names.add(name)
    return names


def _evaluate_at(f: Polynomial, point: Mapping[str, Fraction]) -> Fraction:
    filled = {name: Fraction(point.get(name, 0)) for name in f.vars}
    return f.evaluate(filled)


@dataclass(frozen=True)
class PointEvaluation:
    """Witness: the whole region is pinned to one point; check its sign."""

    point: Mapping[str, Fraction]
    method = "exact evaluation"

    def verify(self, expression: Polynomial, region: Region, claimed: str) -> bool:
        if not region.contains(self.point):
            return False
        if not _occurring_names(expression) <= set(self.point):
            return False
        value = _evaluate_at(expression, self.point)
        return frozenset({_sign_of(value)}) == _CLAIM_SETS[claimed]


@dataclass(frozen=True)
class SturmWindow:
    """Witness: no roots on the window plus sample signs fix the sign.

    The expression must be univariate; the window is the region's bound on
    that variable (the whole line when unbounded).  Soundness: a continuous
    function with no zero on a connected set has one sign there.
    """

    variable: str
    samples: tuple[Fraction, ...]
    method = "Sturm count"

    def verify(self, expression: Polynomial, region: Region, claimed: str) -> bool:
        if _occurring_names(expression) != {self.variable}:
            return False
        cond = region.condition(self.variable)
        lo = NEG_INFINITY if cond.lower is None else cond.lower
        hi = POS_INFINITY if cond.upper is None else cond.upper
        for endpoint in (cond.lower, cond.upper):
            if endpoint is not None and _evaluate_at(expression, {self.variable: endpoint}) == 0:
                return False
        if count_real_roots(expression, (lo, hi)) != 0:
            return False
        if not self.samples:
            return False
        want = _CLAIM_SETS[claimed]
        for sample in self.samples:
            sample = Fraction(sample)
            if cond.lower is not None and sample < cond.lower:
                return False
            if cond.upper is not None and sample > cond.upper:
                return False
            if frozenset({_sign_of(_evaluate_at(expression, {self.variable: sample}))}) != want:
                return False
        return True


@dataclass(frozen=True)
class ProductTerm:
    """coefficient times a product of polynomial powers."""

    coefficient: Fraction
    factors: tuple[tuple[Polynomial, int], ...] = ()

    def rebuild(self, vars: VariableSet) -> Polynomial:
        out = Polynomial.constant(vars, self.coefficient)
        for base, e in self.factors:
            out = out * base ** e
        return out

    def sign_set(self, region: Region) -> frozenset:
        total = frozenset({_sign_of(self.coefficient)})
        for base, e in self.factors:
            total = _sign_mul(total, _power_sign(polynomial_sign_set(base, region), e))
        return total


@dataclass(frozen=True)
class PositiveCombination:
    """Witness: rewrite as a sum of terms whose signs combine decisively.

    Verification re-expands the terms, checks exact equality with the
    claimed expression, then combines per-term sign sets: every term must
    be one-signed-or-zero on the region with at least one strictly signed,
    all agreeing with the claim.
    """

    terms: tuple[ProductTerm, ...]
    method = "positive-combination rewrite"

    @staticmethod
    def from_polynomial(f: Polynomial) -> "PositiveCombination":
        terms = []
        for exps, coeff in sorted(f.terms.items(), key=lambda item: LEX.key(item[0]),
                                  reverse=True):
            factors = tuple(
                (Polynomial.variable(f.vars, name), e)
                for name, e in zip(f.vars, exps) if e)
            terms.append(ProductTerm(coeff, factors))
        return PositiveCombination(tuple(terms))

    def verify(self, expression: Polynomial, region: Region, claimed: str) -> bool:
        rebuilt = Polynomial.zero(expression.vars)
        for term in self.terms:
            rebuilt = rebuilt + term.rebuild(expression.vars)
        if rebuilt != expression:
            return False
        total = None
        for term in self.terms:
            s = term.sign_set(region)
            total = s if total is None else _sign_add(total, s)
        return total == _CLAIM_SETS[claimed]


@dataclass(frozen=True)
class SignFact:
    """A sign claim for a polynomial on a region, plus its witness."""

    expression: Polynomial
    region: Region
    claimed_sign: str
    witness: object = None

    @property
    def method(self) -> str:
        if self.witness is None:
            return "exact zero test"
        return self.witness.method

    def verify(self) -> bool:
        if self.claimed_sign not in _CLAIM_SETS:
            return False
        if self.witness is None:
            return self.claimed_sign == "zero" and self.expression.is_zero()
        return self.witness.verify(self.expression, self.region, self.claimed_sign)


# -- reports -----------------------------------------------------------


@dataclass(frozen=True)
class CaseStep:
    description: str
    kind: str
    status: str
    detail: str = ""
    sign_fact: SignFact | None = None


@dataclass(frozen=True)
class CaseReport:
    case_id: str
    steps: tuple[CaseStep, ...]
    verdict: str
    artifacts: Mapping[str, object] = field(default_factory=dict)

    def failed_steps(self) -> tuple[CaseStep, ...]:
        return tuple(s for s in self.steps if s.status != "pass")


def _fmt(value) -> str:
    if isinstance(value, Polynomial):
        return format_polynomial(value)
    if isinstance(value, RationalFunction):
        return f"({format_polynomial(value.num)}) / ({format_polynomial(value.den)})"
    return str(value)


class _Checker:
    """Accumulates steps for one case and renders the final report."""

    def __init__(self, case_id: str):
        self.case_id = case_id
        self.steps: list[CaseStep] = []
        self.artifacts: dict[str, object] = {}

    def check(self, description: str, ok: bool, detail: str = "") -> bool:
        status = "pass" if ok else "fail"
        self.steps.append(CaseStep(description, "identity", status, detail))
        return ok

    def equal(self, description: str, got, want) -> bool:
        ok = got == want
        detail = "" if ok else f"got {_fmt(got)}, expected {_fmt(want)}"
        return self.check(description, ok, detail)

    def proportional(self, description: str, got: Polynomial, want: Polynomial) -> bool:
        ng, sg = primitive_normalize(got)
        nw, sw = primitive_normalize(want)
        if ng == nw and not ng.is_zero():
            return self.check(description, True, f"scale factor {sw / sg}")
        return self.check(description, False, f"got {_fmt(got)}, expected a multiple of {_fmt(want)}")

    def sign(self, description: str, fact: SignFact) -> bool:
        ok = fact.verify()
        status = "pass" if ok else "fail"
        detail = "" if ok else f"unverified {fact.claimed_sign} claim for {_fmt(fact.expression)}"
        self.steps.append(CaseStep(description, "sign", status, detail, fact))
        return ok

    def hypothesis(self, description: str) -> None:
        self.steps.append(CaseStep(description, "hypothesis", "pass"))

    def report(self) -> CaseReport:
        verdict = "contradiction-verified"
        if any(s.status != "pass" for s in self.steps):
            verdict = "failed"
        return CaseReport(self.case_id, tuple(self.steps), verdict, dict(self.artifacts))


# -- symbolic helpers --------------------------------------------------


def apply_derivation(f: Polynomial, images: Mapping[str, Polynomial]) -> Polynomial:
    """Leibniz extension of a variable-image map; unnamed variables are constants."""
    out = Polynomial.zero(f.vars)
    for name, image in images.items():
        out = out + f.partial_derivative(name) * image
    return out


@dataclass(frozen=True)
class PowerProduct:
    """base^exponent times a polynomial, closed under differentiation.

    The scalar front factor is carried by the caller; exponents may be
    fractional since differentiation only shifts them by integers.
    """

    base: Polynomial
    exponent: Fraction
    poly: Polynomial

    def derivative(self, name: str) -> "PowerProduct":
        base_dot = self.base.partial_derivative(name)
        poly_dot = self.poly.partial_derivative(name)
        return PowerProduct(self.base, self.exponent - 1,
                            self.exponent * base_dot * self.poly + self.base * poly_dot)


def _split_linear(f: Polynomial, name: str) -> tuple[Polynomial, Polynomial]:
    """f = coeff*name + rest with degree exactly one in name."""
    buckets = f.as_univariate_in(name)
    if len(buckets) != 2:
        raise ValueError(f"not linear in {name}")
    return buckets[1], buckets[0]


def _replace_square(f: Polynomial, name: str, square_image: Polynomial) -> Polynomial:
    """v^(2j+s) -> square_image^j * v^s for one variable v."""
    idx = f.vars.index(name)
    out = Polynomial.zero(f.vars)
    for exps, coeff in f.terms.items():
        e = exps[idx]
        rest = Polynomial(f.vars, {exps[:idx] + (e % 2,) + exps[idx + 1:]: coeff})
        out = out + rest * square_image ** (e // 2)
    return out


def _replace_square_rational(value: RationalFunction, name: str,
                             square: RationalFunction) -> RationalFunction:
    def lift(poly: Polynomial) -> RationalFunction:
        idx = poly.vars.index(name)
        total = RationalFunction(Polynomial.zero(poly.vars))
        for exps, coeff in poly.terms.items():
            e = exps[idx]
            rest = Polynomial(poly.vars, {exps[:idx] + (e % 2,) + exps[idx + 1:]: coeff})
            term = RationalFunction(rest)
            for _ in range(e // 2):
                term = term * square
            total = total + term
        return total

    return lift(value.num) / lift(value.den)


def _rf_square_free(value: RationalFunction, name: str) -> RationalFunction:
    """Drop a sign variable whose square is one from both components."""
    one = Polynomial.constant(value.num.vars, 1)
    return RationalFunction(_replace_square(value.num, name, one),
                            _replace_square(value.den, name, one))


# -- the seven case checks ---------------------------------------------


def check_case_I() -> CaseReport:
    """Vanishing rotation data means a vanishing curvature vector."""
    c = _Checker("I")
    ring = variables("a", "b", "c", "cs", "sn")
    a, b, cc, cs, sn = (Polynomial.variable(ring, n) for n in ring.names)
    components = (a, b, cc * cs, cc * sn)
    norm2 = Polynomial.zero(ring)
    for comp in components:
        norm2 = norm2 + comp * comp
    circle = Polynomial.constant(ring, 1) - cs * cs
    c.equal("squared norm of the curvature data reduces to a^2 + b^2 + c^2 under sn^2 -> 1 - cs^2",
            substitute_even_powers(norm2, "sn", circle), a * a + b * b + cc * cc)
    c.check("all curvature components vanish at (a, b, c) = (0, 0, 0)",
            all(comp.substitute({"a": 0, "b": 0, "c": 0}).is_zero() for comp in components))
    at_unit = substitute_even_powers(norm2.substitute({"a": 0, "b": 0, "c": 1}), "sn", circle)
    c.equal("at (a, b, c) = (0, 0, 1) the squared norm is the nonzero constant 1",
            at_unit, Polynomial.constant(ring, 1))
    c.hypothesis("in this branch the three coefficient functions vanish identically, so the "
                 "curvature vector is zero: the surface is minimal, against the standing "
                 "non-minimality assumption")
    return c.report()


def check_case_II() -> CaseReport:
    """A velocity orthogonality forces the rotation speed to vanish."""
    c = _Checker("II")
    ring = variables("phi", *INITIAL_DATA_NAMES)
    phi = Polynomial.variable(ring, "phi")
    x1 = Polynomial.variable(ring, "x1")
    profile = solve_profile_ivp(ProfileIVP(vars=ring))
    forced = quadratic_forced_component(profile.r, phi, x1)
    accel = forced.derivative().derivative()
    target = phi * (profile.r * profile.r)
    order = min(accel.truncation_order, target.truncation_order)
    c.check("second derivative of the forced component equals phi*r^2 at every series order",
            all((accel[n] - target[n]).is_zero() for n in range(order + 1)),
            f"checked through order {order}")
    c.hypothesis("the velocity component along the fixed direction vanishes identically, so "
                 "its derivative does too: phi*r^2 must be the zero series")
    lead = target[0].substitute({"phi": 1})
    c.equal("with the speed normalized to 1 the order-0 coefficient is r0^2", lead,
            Polynomial.variable(ring, "r0") ** 2)
    c.sign("r0^2 is strictly positive for a positive initial radius, so it cannot vanish",
           SignFact(lead, Region({"r0": VariableCondition.positive()}), "positive",
                    PositiveCombination.from_polynomial(lead)))
    c.hypothesis("an identically zero speed is excluded by the branch hypothesis (recorded, "
                 "not checked)")
    c.artifacts["truncation_order"] = order
    return c.report()


def check_case_III() -> CaseReport:
    """Constancy of a scale invariant contradicts the radial equation."""
    c = _Checker("III")
    ring = variables("lam", "lamd", "nq2", "Pq")
    lam, lamd, nq2, pq = (Polynomial.variable(ring, n) for n in ring.names)
    relation = lamd * nq2 + lam * pq
    derived = apply_derivation(lam * lam * nq2, {"lam": lamd, "nq2": 2 * pq})
    c.equal("derivative of lam^2*nq2 under lam -> lamd, nq2 -> 2*Pq is twice lam times the "
            "displayed relation", derived, 2 * lam * relation)
    c.hypothesis("the relation lamd*nq2 + lam*Pq = 0 holds along the curve and "
                 "lam*det = r^2*nq2 with r > 0 keeps lam and the speed vector nonzero, so "
                 "lam^2*nq2 is a nonzero constant and r^4 is proportional to a negative "
                 "power of nq2")
    tau_ring = variables("alpha", "beta", "tau")
    alpha = Polynomial.variable(tau_ring, "alpha")
    beta = Polynomial.variable(tau_ring, "beta")
    tau = Polynomial.variable(tau_ring, "tau")
    w = alpha * alpha * tau * tau + beta * beta
    radial = PowerProduct(w, Fraction(-3, 4), Polynomial.constant(tau_ring, 1))
    second = radial.derivative("tau").derivative("tau")
    display = (Fraction(15, 4) * alpha ** 4 * tau * tau
               - Fraction(3, 2) * alpha ** 2 * beta ** 2)
    c.equal("second derivative of w^(-3/4) carries exponent -11/4", second.exponent,
            Fraction(-11, 4))
    c.equal("its polynomial part is (15/4)*alpha^4*tau^2 - (3/2)*alpha^2*beta^2",
            second.poly, display)
    gap = second.poly - w * w
    buckets = gap.as_univariate_in("tau")
    coeff4 = buckets[4] if len(buckets) > 4 else Polynomial.zero(tau_ring)
    c.equal("the tau^4 coefficient of the defect against w^2 is -alpha^4", coeff4,
            -(alpha ** 4))
    c.sign("alpha^4 is strictly positive for nonzero alpha, so the defect polynomial is nonzero",
           SignFact(alpha ** 4, Region({"alpha": VariableCondition.nonzero_only()}), "positive",
                    PositiveCombination.from_polynomial(alpha ** 4)))
    c.hypothesis("a nonzero rotation speed is a branch hypothesis; with it the radial equation "
                 "r'' = r fails at degree four, closing the branch")
    return c.report()


def check_case_IV() -> CaseReport:
    """A constant curvature function must be zero, yet equals -1/r."""
    c = _Checker("IV")
    c.hypothesis("both rotation speeds vanish, so compatibility reads c*r' = 0; on a "
                 "subinterval where c is nonzero the radius is constant")
    rc = variables("r", "c")
    r = Polynomial.variable(rc, "r")
    cc = Polynomial.variable(rc, "c")
    radial = r + cc * r * r
    value = evaluate_rational(radial, {"r": RationalFunction(r),
                                       "c": RationalFunction(-Polynomial.constant(rc, 1), r)}, rc)
    c.check("with a constant radius the radial equation forces c = -1/r exactly",
            value.is_zero(), _fmt(value) if not value.is_zero() else "")
    vars = INITIAL_DATA_VARS
    zero = Polynomial.zero(vars)
    constant = TruncatedSeries(vars, (Polynomial.variable(vars, "c0"),) + (zero,) * 8)
    defect = constant.derivative().derivative() - constant
    c.check("for a constant series the defect against c'' = c is minus the constant",
            all((defect[n] + constant[n]).is_zero() for n in range(defect.truncation_order + 1)))
    trivial = solve_profile_ivp(ProfileIVP(c0=0, c1=0))
    c.check("zero initial curvature data propagates to the zero curvature series",
            all(term.is_zero() for term in trivial.c.coefficients))
    c.sign("the numerator-denominator product of -1/r is strictly negative for r > 0, so "
           "-1/r is never the zero constant",
           SignFact(-r, Region({"r": VariableCondition.positive()}), "negative",
                    PositiveCombination.from_polynomial(-r)))
    c.hypothesis("c must equal the nonzero constant -1/r while the only constant solution of "
                 "c'' = c is zero: the branch collapses")
    return c.report()


def _case_v_data():
    ring = variables("alpha", "c", "cd", "r", "rd")
    alpha, cc, cd, r, rd = (Polynomial.variable(ring, n) for n in ring.names)
    images = {"c": cd, "cd": cc, "r": rd, "rd": r + cc * r * r}
    g = cd * rd + cc * r + (alpha * alpha + cc * cc) * r * r
    chain = [g]
    for _ in range(4):
        chain.append(apply_derivation(chain[-1], images))
    params = variables("alpha", "c0", "c1", "rho", "rho1", "sigma")
    return ring, chain, params


def _rf(value: Polynomial | int) -> RationalFunction:
    if isinstance(value, Polynomial):
        return RationalFunction(value)
    raise TypeError("bind constants through the parameter ring")


def check_case_V() -> CaseReport:
    """One constant rotation speed: the conserved combination cannot stay zero."""
    c = _Checker("V")
    ring, chain, params = _case_v_data()
    alpha, c0, c1, rho, rho1, sigma = (Polynomial.variable(params, n) for n in params.names)
    one = Polynomial.constant(params, 1)

    def at_zero(index: int, point: Mapping[str, RationalFunction]) -> RationalFunction:
        return evaluate_rational(chain[index], point, params)

    c.hypothesis("with speeds (alpha, 0), alpha > 0, differentiating the compatibility "
                 "relation along the component equations makes G := cd*rd + c*r + "
                 "(alpha^2 + c^2)*r^2 vanish identically; every derivative of G vanishes at 0")
    big_a = alpha * alpha + c0 * c0
    c.sign("alpha^2 + c0^2 is strictly positive when alpha is nonzero",
           SignFact(big_a, Region({"alpha": VariableCondition.nonzero_only()}), "positive",
                    PositiveCombination.from_polynomial(big_a)))

    # regime 1: the curvature function has a critical point at 0
    point = {"alpha": _rf(alpha), "c": _rf(c0), "cd": _rf(Polynomial.zero(params)),
             "r": _rf(rho), "rd": _rf(rho1)}
    c.equal("regime 1: G(0) factors as rho*(c0 + (alpha^2 + c0^2)*rho)",
            at_zero(0, point), RationalFunction(rho * (c0 + big_a * rho)))
    c.hypothesis("regime 1: r(0) > 0 discards the zero root, so r(0) = -c0/(alpha^2 + c0^2)")
    rho_v = RationalFunction(-c0, big_a)
    point = dict(point, r=rho_v)
    c.check("regime 1: the first derivative of G then vanishes at 0 with no extra conditions",
            at_zero(1, point).is_zero())
    display2 = RationalFunction(2 * big_a ** 3 * rho1 * rho1
                                + c0 * c0 * (c0 * c0 - 2 * alpha * alpha), big_a ** 2)
    c.equal("regime 1: second derivative matches (2A^3*rho1^2 + c0^2*(c0^2 - 2*alpha^2))/A^2",
            at_zero(2, point), display2)
    c.equal("regime 1: third derivative matches -10*c0^3*rho1/A",
            at_zero(3, point), RationalFunction(-10 * c0 ** 3 * rho1, big_a))
    c.hypothesis("regime 1: c0 is nonzero (a critical value of a nonzero solution of c'' = c), "
                 "so the vanishing third derivative forces rho1 = 0, and the vanishing second "
                 "derivative then forces c0^2 = 2*alpha^2")
    point = dict(point, rd=_rf(Polynomial.zero(params)))
    fourth = at_zero(4, point)
    reduced = RationalFunction(_replace_square(fourth.num, "c0", 2 * alpha * alpha),
                               _replace_square(fourth.den, "c0", 2 * alpha * alpha))
    c.equal("regime 1: under those relations the fourth derivative is the constant 56/9",
            reduced, RationalFunction(CASE5_FOURTH_DERIVATIVE * one))
    c.sign("regime 1: 56/9 is positive, so the fourth derivative cannot vanish",
           SignFact(CASE5_FOURTH_DERIVATIVE * one, Region(), "positive",
                    PositiveCombination.from_polynomial(CASE5_FOURTH_DERIVATIVE * one)))

    # regime 2: the curvature function has a zero at 0
    point = {"alpha": _rf(alpha), "c": _rf(Polynomial.zero(params)), "cd": _rf(c1),
             "r": _rf(rho), "rd": _rf(rho1)}
    c.equal("regime 2: G(0) equals c1*rho1 + alpha^2*rho^2",
            at_zero(0, point), RationalFunction(c1 * rho1 + alpha * alpha * rho * rho))
    c.equal("regime 2: the first derivative at 0 equals 2*rho*(alpha^2*rho1 + c1)",
            at_zero(1, point), RationalFunction(2 * rho * (alpha * alpha * rho1 + c1)))
    c.hypothesis("regime 2: r(0) > 0 and alpha nonzero give rho1 = -c1/alpha^2")
    rho1_v = RationalFunction(-c1, alpha * alpha)
    point = dict(point, rd=rho1_v)
    c.equal("regime 2: G(0) becomes (alpha^4*rho^2 - c1^2)/alpha^2, so rho^2 = c1^2/alpha^4",
            at_zero(0, point),
            RationalFunction(alpha ** 4 * rho * rho - c1 * c1, alpha * alpha))
    second = at_zero(2, point)
    second = _replace_square_rational(second, "rho", RationalFunction(c1 * c1, alpha ** 4))
    c.equal("regime 2: the second derivative reduces to 3*c1^4/alpha^4",
            second, RationalFunction(3 * c1 ** 4, alpha ** 4))
    product = 3 * c1 ** 4 * alpha ** 4
    c.sign("regime 2: 3*c1^4*alpha^4 is strictly positive for nonzero alpha and c1, so the "
           "second derivative cannot vanish",
           SignFact(product, Region({"alpha": VariableCondition.nonzero_only(),
                                     "c1": VariableCondition.nonzero_only()}), "positive",
                    PositiveCombination.from_polynomial(product)))
    c.hypothesis("regime 2: c1 is nonzero, else the curvature function with c(0) = 0 would be "
                 "identically zero")

    # regime 3: the curvature function is proportional to its derivative
    point = {"alpha": _rf(alpha), "c": _rf(c0), "cd": _rf(sigma * c0),
             "r": _rf(rho), "rd": _rf(rho1)}
    g0 = at_zero(0, point)
    coeff, rest = _split_linear(g0.num, "rho1")
    c.equal("regime 3: G(0) is linear in rho1 with coefficient sigma*c0", coeff, sigma * c0)
    c.hypothesis("regime 3: sigma^2 = 1 and c0 nonzero make sigma*c0 invertible, so rho1 "
                 "solves out of G(0)")
    rho1_v = _rf_square_free(RationalFunction(-rest * sigma, c0), "sigma")
    point = dict(point, rd=rho1_v)
    g1 = _rf_square_free(at_zero(1, point), "sigma")
    linear = 2 * big_a ** 2 * rho + c0 * (c0 * c0 + 4 * alpha * alpha)
    c.equal("regime 3: the reduced first derivative's numerator factors as "
            "-sigma*c0^2*rho^2*(2*A^2*rho + c0*(c0^2 + 4*alpha^2))",
            g1.num, -sigma * c0 * c0 * rho * rho * linear)
    c.hypothesis("regime 3: r(0) > 0 discards the double root rho = 0, and the remaining "
                 "factor is linear in rho, so it pins r(0) uniquely")
    rho_v = RationalFunction(-c0 * (c0 * c0 + 4 * alpha * alpha), 2 * big_a ** 2)
    full = {name: _rf(Polynomial.variable(params, name)) for name in params.names}
    root_check = evaluate_rational(g1.num, dict(full, rho=rho_v), params)
    c.check("regime 3: r(0) = -c0*(c0^2 + 4*alpha^2)/(2*(alpha^2 + c0^2)^2) is that root",
            _rf_square_free(root_check, "sigma").is_zero())
    rho1_full = _rf_square_free(evaluate_rational(rho1_v.num, dict(full, rho=rho_v), params)
                                / evaluate_rational(rho1_v.den, dict(full, rho=rho_v), params),
                                "sigma")
    display_rho1 = RationalFunction(
        sigma * c0 * (c0 * c0 - 2 * alpha * alpha) * (c0 * c0 + 4 * alpha * alpha),
        4 * big_a ** 3)
    c.equal("regime 3: r'(0) matches sigma*c0*(c0^2 - 2*alpha^2)*(c0^2 + 4*alpha^2)/(4*A^3)",
            rho1_full, display_rho1)
    point = dict(point, r=rho_v, rd=rho1_full)
    second = _rf_square_free(at_zero(2, point), "sigma")
    display_second = RationalFunction(
        c0 ** 4 * (c0 * c0 + 4 * alpha * alpha) ** 2 * (c0 * c0 + 16 * alpha * alpha),
        8 * big_a ** 5)
    c.equal("regime 3: the second derivative reduces to "
            "c0^4*(c0^2 + 4*alpha^2)^2*(c0^2 + 16*alpha^2)/(8*A^5)",
            second, display_second)
    region = Region({"alpha": VariableCondition.nonzero_only(),
                     "c0": VariableCondition.nonzero_only()})
    product = display_second.num * display_second.den
    c.sign("regime 3: the numerator-denominator product expands with positive coefficients "
           "in even powers of alpha and c0, so the second derivative cannot vanish",
           SignFact(product, region, "positive",
                    PositiveCombination.from_polynomial(product)))
    c.hypothesis("the three regimes cover every solution of c'' = c by the sign of "
                 "cd^2 - c^2, so the branch cannot occur")
    return c.report()


def check_case_VI() -> CaseReport:
    """One linear rotation speed: both curvature branches fail."""
    c = _Checker("VI")
    vars = INITIAL_DATA_VARS
    kvar = Polynomial.variable(vars, "k")
    r0 = Polynomial.variable(vars, "r0")
    c1 = Polynomial.variable(vars, "c1")

    # branch 1: curvature function with zero constant term
    profile0 = solve_profile_ivp(ProfileIVP(beta=0, k=kvar, c0=0))
    compat0 = compatibility_series(profile0, "VI")
    c.check("branch c0 = 0: the order-0 compatibility coefficient vanishes identically",
            compat0[0].is_zero())
    c.equal("branch c0 = 0: the order-2 coefficient is 2*c1*r[2] (twice the displayed "
            "ordinary coefficient)", compat0[2], 2 * c1 * profile0.r[2])
    c.equal("branch c0 = 0: the second radius coefficient collapses to r0", profile0.r[2], r0)
    trivial = solve_profile_ivp(ProfileIVP(c0=0, c1=0))
    c.check("branch c0 = 0: c0 = c1 = 0 would make the curvature series identically zero",
            all(term.is_zero() for term in trivial.c.coefficients))
    c.hypothesis("branch c0 = 0: a not-identically-zero curvature function therefore has "
                 "c1 nonzero, so the order-2 coefficient forces r0 = 0")
    c.sign("branch c0 = 0: r0 is strictly positive, a contradiction",
           SignFact(r0, Region({"r0": VariableCondition.positive()}), "positive",
                    PositiveCombination.from_polynomial(r0)))

    # branch 2: nonzero constant term; work in the normalized system
    system = extract_system(solve_profile_ivp(ProfileIVP(beta=0, k=kvar)), "VI")
    nv = NORMALIZED_VARS
    av, uv, tv = (Polynomial.variable(nv, n) for n in ("A", "u", "t"))
    c.check("branch c0 != 0: the order-0 coefficient forces r1 = 0 (recorded elimination)",
            system.eliminated["r1"].is_zero())
    c.equal("branch c0 != 0: the order-2 equation is u*(3*t + 2), twice the displayed "
            "product c1*r0*(1 + (3/2)*c0*r0)", system.equation("E2"), uv * (3 * tv + 2))
    c.hypothesis("branch c0 != 0: so u = 0 or t = -2/3")

    # subbranch 2a: u = 0
    e3 = system.equation("E3").substitute({"u": 0})
    e5 = system.equation("E5").substitute({"u": 0})
    display3 = 3 * av + 2 * tv ** 3 + 7 * tv ** 2 + 4 * tv
    display5 = 15 * av * (tv + 1) + 5 * tv ** 4 + 27 * tv ** 3 + 35 * tv ** 2 + 8 * tv
    c.equal("subbranch u = 0: the order-3 equation reads 3*A + 2*t^3 + 7*t^2 + 4*t",
            e3, display3)
    c.proportional("subbranch u = 0: the order-5 equation is proportional to "
                   "15*A*(t + 1) + 5*t^4 + 27*t^3 + 35*t^2 + 8*t", e5, display5)
    res = resultant_univariate(e3, e5, "A")
    cubic = parse_polynomial(CUBIC_T_TEXT, nv)
    c.proportional("subbranch u = 0: eliminating A leaves t times the cubic "
                   f"{CUBIC_T_TEXT}", res, tv * cubic)
    c.hypothesis("subbranch u = 0: t = c0*r0 is nonzero here, so the cubic itself must vanish")
    c.equal("subbranch u = 0: the cubic has exactly one real root",
            count_real_roots(cubic, REAL_LINE), 1)
    lo, hi = CASE6_ROOT_WINDOW
    c.equal("subbranch u = 0: that root lies in the window (-12/5, -9/4)",
            count_real_roots(cubic, (lo, hi)), 1)
    c.sign("subbranch u = 0: the cubic is negative at -12/5",
           SignFact(cubic, Region({"t": VariableCondition.point(lo)}), "negative",
                    PointEvaluation({"t": lo})))
    c.equal("subbranch u = 0: its value there is -36/25",
            cubic.evaluate({n: lo if n == "t" else Fraction(0) for n in nv.names}),
            CASE6_CUBIC_AT_LO)
    c.sign("subbranch u = 0: the cubic is positive at -9/4",
           SignFact(cubic, Region({"t": VariableCondition.point(hi)}), "positive",
                    PointEvaluation({"t": hi})))
    c.equal("subbranch u = 0: its value there is 75/64",
            cubic.evaluate({n: hi if n == "t" else Fraction(0) for n in nv.names}),
            CASE6_CUBIC_AT_HI)
    quad = parse_polynomial(QUADRATIC_T_TEXT, nv)
    window = Region({"t": VariableCondition.window(lo, hi, strict=False)})
    c.sign(f"subbranch u = 0: {QUADRATIC_T_TEXT} is negative on the whole window",
           SignFact(quad, window, "negative", SturmWindow("t", (lo, hi))))
    c.equal("subbranch u = 0: the order-3 equation rewrites as 3*A + t*(2*t^2 + 7*t + 4)",
            e3, 3 * av + tv * quad)
    c.sign("subbranch u = 0: -t*(2*t^2 + 7*t + 4) is negative on the window",
           SignFact(-(tv * quad), window, "negative",
                    PositiveCombination((ProductTerm(Fraction(-1), ((tv, 1), (quad, 1))),))))
    c.sign("subbranch u = 0: 3*A is strictly positive, so 3*A = -t*(2*t^2 + 7*t + 4) is "
           "impossible",
           SignFact(3 * av, Region({"A": VariableCondition.positive()}), "positive",
                    PositiveCombination.from_polynomial(3 * av)))

    # subbranch 2b: t = -2/3
    e3b = system.equation("E3").substitute({"t": Fraction(-2, 3)})
    c.equal("subbranch t = -2/3: 27 times the order-3 equation is 81*A + 81*u^2 - 4",
            27 * e3b, 81 * av + 81 * uv ** 2 - 4 * Polynomial.constant(nv, 1))
    profile = solve_profile_ivp(ProfileIVP(beta=0, k=kvar))
    c0_image = RationalFunction(Polynomial.constant(vars, Fraction(-2, 3)), r0)
    bindings = {n: c0_image if n == "c0" else RationalFunction(Polynomial.variable(vars, n))
                for n in vars.names}
    bindings["r1"] = RationalFunction(Polynomial.zero(vars))
    displays = {
        2: RationalFunction(r0, Polynomial.constant(vars, 3)),
        3: RationalFunction(c1 * r0 * r0),
        4: RationalFunction(Fraction(-7, 9) * r0),
        5: RationalFunction(Fraction(8, 3) * c1 * r0 * r0),
    }
    for n, want in displays.items():
        got = evaluate_rational(profile.r[n], bindings, vars)
        c.equal(f"subbranch t = -2/3: the radius coefficient r[{n}] matches its display",
                got, want)
    e4b = system.equation("E4").substitute({"t": Fraction(-2, 3)})
    c.equal("subbranch t = -2/3: the order-4 equation is -(34/9)*u",
            e4b, Fraction(-34, 9) * uv)
    scalar = system.origins["E4"].scalar
    ordinary = Fraction(-34, 9) / scalar / 24
    c.equal("subbranch t = -2/3: undoing the archived scale and the 4! of the exponential "
            "convention gives the displayed ordinary coefficient -(17/54)*c1*r0",
            ordinary, CASE6_TAU4_COEFF)
    c.hypothesis("subbranch t = -2/3: u = c1*r0 must vanish with r0 > 0, so c1 = 0, which is "
                 "the already-refuted u = 0 subbranch")
    c.artifacts["cubic"] = CUBIC_T_TEXT
    c.artifacts["window"] = [str(lo), str(hi)]
    return c.report()


def check_case_VII(certificate: MembershipCertificate | None = None) -> CaseReport:
    """Two independent rotation speeds: the full normalized system is infeasible."""
    c = _Checker("VII")
    system = extract_system(solve_profile_ivp(ProfileIVP()), "VII")
    nv = NORMALIZED_VARS
    av, bv, uv, pv, tv = (Polynomial.variable(nv, n) for n in nv.names)
    one = Polynomial.constant(nv, 1)
    target = parse_polynomial(CERTIFICATE_TARGET_TEXT, nv)
    presentation = IdealPresentation(nv, LEX, tuple(system.polynomials()))
    if certificate is None:
        certificate = certify_membership(presentation, target)
    c.equal("the certificate is stated over this extraction's generators",
            list(certificate.generators), list(presentation.generators))
    c.equal("the certificate's target is p*t^4", certificate.target, target)
    c.check("the certificate identity sum(K_i*E_i) + remainder = p*t^4 holds exactly",
            certificate.verify())
    c.check("the remainder is zero, so p*t^4 vanishes on every solution of the system",
            certificate.remainder.is_zero(), _fmt(certificate.remainder)
            if not certificate.remainder.is_zero() else "")
    c.hypothesis("hence p = 0 or t = 0; both branches are refuted below")

    # branch t = 0
    c.equal("branch t = 0: the order-2 equation becomes 2*(B*p + u)",
            system.equation("E2").substitute({"t": 0}), 2 * (bv * pv + uv))
    c.hypothesis("branch t = 0: so u = -B*p")
    e3_t = system.equation("E3").substitute({"t": 0, "u": -(bv * pv)})
    c.equal("branch t = 0, p = 0: the order-3 equation collapses to 3*A + 2*B",
            e3_t.substitute({"p": 0}), 3 * av + 2 * bv)
    c.sign("branch t = 0, p = 0: 3*A + 2*B is strictly positive, a contradiction",
           SignFact(3 * av + 2 * bv,
                    Region({"A": VariableCondition.positive(),
                            "B": VariableCondition.positive()}), "positive",
                    PositiveCombination.from_polynomial(3 * av + 2 * bv)))
    e4_t = system.equation("E4").substitute({"t": 0, "u": -(bv * pv)})
    c.equal("branch t = 0, p != 0: the order-4 equation factors as "
            "p*(8*A - B^2 + 8*B^2*p^2)",
            e4_t, pv * (8 * av - bv * bv + 8 * bv * bv * pv * pv))
    c.hypothesis("branch t = 0, p != 0: dividing by p gives A = B^2*(1/8 - p^2); positivity "
                 "of A forces p^2 < 1/8, hence -1/2 < p < 1/2")
    a_image = Fraction(1, 8) * (bv * bv - 8 * bv * bv * pv * pv)
    e3_fin = e3_t.substitute({"A": a_image})
    display = Fraction(3, 8) * bv * bv + 2 * bv * (one - pv * pv)
    c.equal("branch t = 0, p != 0: substituting A into the order-3 equation gives "
            "(3/8)*B^2 + 2*B*(1 - p^2)", e3_fin, display)
    region = Region({"B": VariableCondition.positive(),
                     "p": VariableCondition.window(Fraction(-1, 2), Fraction(1, 2))})
    witness = PositiveCombination((
        ProductTerm(Fraction(3, 8), ((bv, 2),)),
        ProductTerm(Fraction(2), ((bv, 1), (one - pv * pv, 1))),
    ))
    c.sign("branch t = 0, p != 0: that expression is strictly positive on B > 0, |p| < 1/2",
           SignFact(e3_fin, region, "positive", witness))

    # branch p = 0
    c.equal("branch p = 0: the order-2 equation becomes u*(3*t + 2)",
            system.equation("E2").substitute({"p": 0}), uv * (3 * tv + 2))
    c.hypothesis("branch p = 0: so u = 0 or t = -2/3")

    # subbranch u = 0
    e0 = system.equation("E0").substitute({"p": 0, "u": 0})
    shifted = bv + tv + tv * tv
    c.equal("subbranch p = 0, u = 0: the order-0 equation factors as "
            "B*((B + t + t^2)^2 - A)", e0, bv * (shifted * shifted - av))
    c.hypothesis("subbranch p = 0, u = 0: B > 0 gives A = (B + t + t^2)^2")
    eq1 = system.equation("E3").substitute({"p": 0, "u": 0, "A": shifted * shifted})
    eq2 = system.equation("E5").substitute({"p": 0, "u": 0, "A": shifted * shifted})
    cubic = parse_polynomial(CUBIC_T_TEXT, nv)
    quadratic_t = 5 * tv * tv + 10 * tv + 6
    lin = eq2 - 5 * (tv + 1) * eq1
    c.equal("subbranch p = 0, u = 0: the combination E5' - 5*(t + 1)*E3' is linear in B and "
            "equals -(B*(5*t^2 + 10*t + 6) + t*(5*t^3 + 18*t^2 + 20*t + 12))",
            lin, -(bv * quadratic_t + tv * cubic))
    c.sign("subbranch p = 0, u = 0: 5*t^2 + 10*t + 6 = 5*(t + 1)^2 + 1 is positive for "
           "every t, so B solves to -t*(5*t^3 + 18*t^2 + 20*t + 12)/(5*t^2 + 10*t + 6)",
           SignFact(quadratic_t, Region(), "positive",
                    PositiveCombination((ProductTerm(Fraction(5), ((tv + one, 2),)),
                                         ProductTerm(Fraction(1))))))
    res = resultant_univariate(eq1, eq2, "B")
    quartic = parse_polynomial(QUARTIC_T_TEXT, nv)
    c.equal("subbranch p = 0, u = 0: eliminating B gives 12*t^2 times the quartic "
            f"{QUARTIC_T_TEXT}", res, 12 * tv * tv * quartic)
    c.equal("subbranch p = 0, u = 0: the quartic has no real roots",
            count_real_roots(quartic, REAL_LINE), 0)
    s1, s0 = QUARTIC_SQUARE_SHIFT
    inner = tv * tv + s1 * tv + s0 * one
    decomposition = PositiveCombination((
        ProductTerm(Fraction(18), ((inner, 2),)),
        ProductTerm(QUARTIC_DECOMP_T2, ((tv, 2),)),
        ProductTerm(QUARTIC_DECOMP_CONST),
    ))
    c.equal("subbranch p = 0, u = 0: the displayed square-plus-remainder decomposition "
            "expands to the quartic exactly",
            18 * inner * inner + QUARTIC_DECOMP_T2 * tv * tv
            + QUARTIC_DECOMP_CONST * one, quartic)
    c.sign("subbranch p = 0, u = 0: the decomposition certifies the quartic positive for "
           "every t", SignFact(quartic, Region(), "positive", decomposition))
    c.hypothesis("subbranch p = 0, u = 0: 12*t^2 times a positive quartic vanishes only at "
                 "t = 0, which belongs to the already-refuted t = 0 branch")

    # subbranch t = -2/3
    e4b = system.equation("E4").substitute({"p": 0, "t": Fraction(-2, 3)})
    coeff, rest = _split_linear(e4b, "B")
    c.check("subbranch p = 0, t = -2/3: the order-4 equation is linear in B with both "
            "coefficients multiples of u",
            coeff.substitute({"u": 0}).is_zero() and rest.substitute({"u": 0}).is_zero()
            and not coeff.is_zero())
    b_solved = RationalFunction(-rest, coeff)
    c.equal("subbranch p = 0, t = -2/3: with u != 0 it solves to B = 34/9",
            b_solved, RationalFunction(CASE7_B_VALUE * one))
    e0b = system.equation("E0").substitute({"p": 0, "t": Fraction(-2, 3),
                                            "B": CASE7_B_VALUE})
    c.equal("subbranch p = 0, t = -2/3: the order-0 equation becomes "
            "(34/9)*((32/9)^2 - A)",
            e0b, CASE7_B_VALUE * (CASE7_A_VALUE * one - av))
    c.hypothesis("subbranch p = 0, t = -2/3: B = 34/9 > 0, so A = (32/9)^2 = 1024/81")
    e3b = system.equation("E3").substitute({"p": 0, "t": Fraction(-2, 3),
                                            "B": CASE7_B_VALUE, "A": CASE7_A_VALUE})
    c.equal("subbranch p = 0, t = -2/3: the order-3 equation reduces to 3*u^2 + 1088/27",
            e3b, 3 * uv * uv + CASE7_REDUCED_CONSTANT * one)
    c.sign("subbranch p = 0, t = -2/3: 3*u^2 + 1088/27 is strictly positive, a contradiction",
           SignFact(e3b, Region(), "positive", PositiveCombination.from_polynomial(e3b)))
    c.artifacts["certificate"] = {
        "target": CERTIFICATE_TARGET_TEXT,
        "generators": [label for label, _ in system.equations],
        "remainder_zero": certificate.remainder.is_zero(),
        "cofactor_terms": {label: len(cof.terms) for (label, _), cof
                           in zip(system.equations, certificate.cofactors)},
    }
    c.artifacts["quartic"] = QUARTIC_T_TEXT
    return c.report()


def check_all_cases(certificate: MembershipCertificate | None = None) -> list[CaseReport]:
    """Run the seven branch checks in order."""
    return [
        check_case_I(),
        check_case_II(),
        check_case_III(),
        check_case_IV(),
        check_case_V(),
        check_case_VI(),
        check_case_VII(certificate),
    ]


# -- document form -----------------------------------------------------


def _condition_document(cond: VariableCondition) -> dict:
    doc: dict = {}
    if cond.lower is not None:
        doc["lower"] = str(cond.lower)
        doc["lower_strict"] = cond.lower_strict
    if cond.upper is not None:
        doc["upper"] = str(cond.upper)
        doc["upper_strict"] = cond.upper_strict
    if cond.nonzero:
        doc["nonzero"] = True
    return doc


def _sign_fact_document(fact: SignFact) -> dict:
    doc = {
        "expression": format_polynomial(fact.expression),
        "claimed_sign": fact.claimed_sign,
        "method": fact.method,
        "region": {name: _condition_document(cond)
                   for name, cond in fact.region.conditions.items()},
    }
    witness = fact.witness
    if isinstance(witness, PointEvaluation):
        doc["point"] = {name: str(value) for name, value in witness.point.items()}
    elif isinstance(witness, SturmWindow):
        doc["variable"] = witness.variable
        doc["samples"] = [str(s) for s in witness.samples]
    elif isinstance(witness, PositiveCombination):
        doc["terms"] = [
            {"coefficient": str(term.coefficient),
             "factors": [{"base": format_polynomial(base), "power": e}
                         for base, e in term.factors]}
            for term in witness.terms
        ]
    return doc


def report_to_document(report: CaseReport) -> dict:
    """Render a CaseReport as a plain-data document."""
    steps = []
    for step in report.steps:
        entry: dict = {"description": step.description, "kind": step.kind,
                       "status": step.status}
        if step.detail:
            entry["detail"] = step.detail
        if step.sign_fact is not None:
            entry["sign_fact"] = _sign_fact_document(step.sign_fact)
        steps.append(entry)
    return {
        "format": REPORT_FORMAT,
        "case": report.case_id,
        "verdict": report.verdict,
        "steps": steps,
        "artifacts": dict(report.artifacts),
        "assumption": "the seven-branch partition of the rotation data is exhaustive",
    }


def summarize_report(report: CaseReport) -> str:
    """One human-readable line per case."""
    counts = {"identity": 0, "sign": 0, "hypothesis": 0}
    for step in report.steps:
        counts[step.kind] = counts.get(step.kind, 0) + 1
    line = (f"case {report.case_id}: {report.verdict} "
            f"({counts['identity']} identities, {counts['sign']} sign facts, "
            f"{counts['hypothesis']} hypotheses)")
    failures = report.failed_steps()
    if failures:
        first = failures[0]
        line += f"; first failure: {first.description}"
        if first.detail:
            line += f" [{first.detail}]"
    return line


__all__ = [
    "CASE_IDS",
    "CaseReport",
    "CaseStep",
    "PointEvaluation",
    "PositiveCombination",
    "PowerProduct",
    "ProductTerm",
    "REPORT_FORMAT",
    "Region",
    "SignFact",
    "SturmWindow",
    "VariableCondition",
    "apply_derivation",
    "check_all_cases",
    "check_case_I",
    "check_case_II",
    "check_case_III",
    "check_case_IV",
    "check_case_V",
    "check_case_VI",
    "check_case_VII",
    "interval_of",
    "polynomial_sign_set",
    "report_to_document",
    "summarize_report",
]
