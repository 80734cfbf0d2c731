"""Buchberger's algorithm with provenance-tracked membership certificates.

The basis computation keeps, for every basis element, its expression as a
polynomial combination of the original generators.  A membership certificate
for a target polynomial is then the combination obtained by composing
division quotients with those expressions; verification re-expands the
combination and checks the identity exactly.
"""

from __future__ import annotations

import heapq
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    VariableSet,
    eliminate_linear,
    exact_divide,
    format_polynomial,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    parse_polynomial,
    primitive_normalize,
)

BASIS_FORMAT = "birot4/groebner-basis@1"
CERTIFICATE_FORMAT = "birot4/membership-certificate@1"

_ENV_MAX_PAIRS = "BIROT4_MAX_PAIRS"


class ResourceCapExceeded(RuntimeError):
    """The configured S-pair processing cap was hit before completion."""


@dataclass(frozen=True)
class IdealPresentation:
    """Generators of an ideal with the ring data needed to compute with it."""

    vars: VariableSet
    order: MonomialOrder
    generators: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.vars != self.vars:
                raise ValueError("generator variable set differs from presentation")
            if g.is_zero():
                raise ValueError("zero generator")


@dataclass
class GroebnerBasis:
    presentation: IdealPresentation
    elements: list[Polynomial]
    provenance: list[list[Polynomial]] | None
    stats: dict = field(default_factory=dict)

    @property
    def order(self) -> MonomialOrder:
        return self.presentation.order

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.leading_monomial(self.order) for g in self.elements]


@dataclass
class MembershipCertificate:
    """target = sum(cofactors[i] * generators[i]) + remainder, exactly."""

    target: Polynomial
    generators: tuple[Polynomial, ...]
    cofactors: list[Polynomial]
    remainder: Polynomial

    @property
    def is_member(self) -> bool:
        return self.remainder.is_zero()

    def verify(self) -> bool:
        acc = Polynomial.zero(self.target.vars)
        for cof, gen in zip(self.cofactors, self.generators):
            acc = acc + cof * gen
        return acc + self.remainder == self.target


def _reduce_terms(terms: dict, basis: list[Polynomial], heads: list, order: MonomialOrder,
                  want_quotients: bool):
    """Division core on raw term dicts; see ``reduce`` for the contract.

    A lazy max-heap drives the scan: monomial sort keys are computed once per
    insertion, and stale heap entries are skipped when popped.
    """
    key = order.key
    work = dict(terms)
    heap = [tuple(-x for x in key(m)) + (m,) for m in work]
    heapq.heapify(heap)
    normal: dict[tuple[int, ...], Fraction] = {}
    quotients: list[dict[tuple[int, ...], Fraction]] | None = (
        [{} for _ in basis] if want_quotients else None)
    while heap:
        mono = heapq.heappop(heap)[-1]
        if mono not in work:
            continue  # stale entry
        coeff = work.pop(mono)
        for idx, (lm, lc) in enumerate(heads):
            if monomial_divides(lm, mono):
                q_mono = monomial_div(mono, lm)
                q_coeff = coeff / lc
                if quotients is not None:
                    quotients[idx][q_mono] = quotients[idx].get(q_mono, Fraction(0)) + q_coeff
                for e, c in basis[idx].terms.items():
                    if e == lm:
                        continue
                    k = monomial_mul(q_mono, e)
                    if k in work:
                        acc = work[k] - q_coeff * c
                        if acc:
                            work[k] = acc
                        else:
                            del work[k]
                    else:
                        work[k] = -q_coeff * c
                        heapq.heappush(heap, tuple(-x for x in key(k)) + (k,))
                break
        else:
            normal[mono] = coeff
    return normal, quotients


def reduce(f: Polynomial, basis: list[Polynomial], order: MonomialOrder) -> tuple[Polynomial, list[Polynomial]]:
    """Full multivariate division: returns (normal form, quotients).

    Deterministic: the highest remaining term is reduced against the first
    basis element whose leading term divides it; irreducible terms drop into
    the normal form.  f == sum(q_i*basis_i) + normal form holds exactly, and
    no term of the normal form is divisible by any basis leading term.
    """
    heads = []
    for b in basis:
        if b.is_zero():
            raise ValueError("zero divisor polynomial in basis")
        heads.append((b.leading_monomial(order), b.leading_coefficient(order)))
    normal, quotients = _reduce_terms(f.terms, basis, heads, order, True)
    return Polynomial(f.vars, normal), [Polynomial(f.vars, q) for q in quotients]


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """Cross-scaled difference cancelling both leading terms."""
    if f.is_zero() or g.is_zero():
        raise ValueError("s-polynomial of a zero polynomial")
    lm_f, lm_g = f.leading_monomial(order), g.leading_monomial(order)
    lc_f, lc_g = f.terms[lm_f], g.terms[lm_g]
    lcm = monomial_lcm(lm_f, lm_g)
    u = Polynomial(f.vars, {monomial_div(lcm, lm_f): lc_g})
    v = Polynomial(f.vars, {monomial_div(lcm, lm_g): lc_f})
    return u * f - v * g


def _pair_sort_key(order: MonomialOrder, lcm, i: int, j: int):
    return (monomial_degree(lcm), order.key(lcm), i, j)


def buchberger(presentation: IdealPresentation, track_provenance: bool = True,
               max_pairs: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis via Buchberger with the normal pair strategy.

    Pairs are processed by smallest lcm under the graded refinement of the
    order; coprime leading terms and chain-criterion pairs are skipped.
    Every intermediate result is primitive-normalized.  The returned basis
    is reduced (monic-primitive, mutually irreducible) and sorted descending
    by leading monomial, so it is unique for the ideal and order.
    """
    if max_pairs is None:
        env = os.environ.get(_ENV_MAX_PAIRS)
        max_pairs = int(env) if env else None
    vars = presentation.vars
    order = presentation.order
    n_gens = len(presentation.generators)

    def unit_row(i: int) -> list[Polynomial]:
        return [Polynomial.zero(vars) if j != i else Polynomial.constant(vars, 1)
                for j in range(n_gens)]

    basis: list[Polynomial] = []
    heads: list[tuple[tuple[int, ...], Fraction]] = []
    prov: list[list[Polynomial]] = []

    def append_element(p: Polynomial) -> None:
        basis.append(p)
        heads.append((p.leading_monomial(order), p.leading_coefficient(order)))

    for i, g in enumerate(presentation.generators):
        norm, scalar = primitive_normalize(g, order)
        append_element(norm)
        if track_provenance:
            prov.append([p * scalar for p in unit_row(i)])

    pending: dict[tuple[int, int], tuple[int, ...]] = {}
    pair_heap: list[tuple] = []

    def push_pairs(new_index: int) -> None:
        lm_new = heads[new_index][0]
        for i in range(new_index):
            lcm = monomial_lcm(heads[i][0], lm_new)
            pending[(i, new_index)] = lcm
            heapq.heappush(pair_heap, _pair_sort_key(order, lcm, i, new_index))

    for idx in range(1, len(basis)):
        push_pairs(idx)

    stats = {"pairs_considered": 0, "pairs_reduced": 0,
             "skipped_coprime": 0, "skipped_chain": 0, "basis_additions": 0}

    while pair_heap:
        _, _, i, j = heapq.heappop(pair_heap)
        lcm = pending.pop((i, j), None)
        if lcm is None:
            continue
        stats["pairs_considered"] += 1
        if max_pairs is not None and stats["pairs_considered"] > max_pairs:
            raise ResourceCapExceeded(f"more than {max_pairs} S-pairs")
        lm_i, lc_i = heads[i]
        lm_j, lc_j = heads[j]
        if lcm == monomial_mul(lm_i, lm_j):
            stats["skipped_coprime"] += 1
            continue
        chain = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if not monomial_divides(heads[k][0], lcm):
                continue
            pair_ik = (min(i, k), max(i, k))
            pair_jk = (min(j, k), max(j, k))
            if pair_ik not in pending and pair_jk not in pending:
                chain = True
                break
        if chain:
            stats["skipped_chain"] += 1
            continue
        spoly = s_polynomial(basis[i], basis[j], order)
        nf_terms, quotient_terms = _reduce_terms(spoly.terms, basis, heads, order,
                                                 track_provenance)
        if not nf_terms:
            continue
        normal_form = Polynomial(vars, nf_terms)
        normalized, scalar = primitive_normalize(normal_form, order)
        if track_provenance:
            u = Polynomial(vars, {monomial_div(lcm, lm_i): lc_j})
            v = Polynomial(vars, {monomial_div(lcm, lm_j): lc_i})
            row = [u * a - v * b for a, b in zip(prov[i], prov[j])]
            for q_terms, src in zip(quotient_terms, prov):
                if q_terms:
                    q = Polynomial(vars, q_terms)
                    row = [r - q * s for r, s in zip(row, src)]
            prov.append([r * scalar for r in row])
        append_element(normalized)
        stats["pairs_reduced"] += 1
        stats["basis_additions"] += 1
        push_pairs(len(basis) - 1)

    elements, rows = _reduce_basis(basis, prov if track_provenance else None, order, vars)
    return GroebnerBasis(presentation, elements, rows, stats)


def _reduce_basis(basis: list[Polynomial], prov: list[list[Polynomial]] | None,
                  order: MonomialOrder, vars: VariableSet):
    """Minimalize then interreduce; keeps provenance rows in step."""
    lms = [g.leading_monomial(order) for g in basis]
    indices = sorted(range(len(basis)), key=lambda i: order.key(lms[i]))
    kept: list[int] = []
    for i in indices:
        if any(monomial_divides(lms[k], lms[i]) for k in kept):
            continue
        kept.append(i)
    elements = [basis[i] for i in kept]
    rows = [list(prov[i]) for i in kept] if prov is not None else None

    changed = True
    while changed:
        changed = False
        for pos in range(len(elements)):
            others = elements[:pos] + elements[pos + 1:]
            heads = [(b.leading_monomial(order), b.leading_coefficient(order)) for b in others]
            nf_terms, quotient_terms = _reduce_terms(elements[pos].terms, others, heads, order,
                                                     rows is not None)
            if not nf_terms:
                raise AssertionError("minimalized basis element reduced to zero")
            normalized, scalar = primitive_normalize(Polynomial(vars, nf_terms), order)
            if normalized != elements[pos]:
                changed = True
                if rows is not None:
                    row = list(rows[pos])
                    other_rows = rows[:pos] + rows[pos + 1:]
                    for q_terms, src in zip(quotient_terms, other_rows):
                        if q_terms:
                            q = Polynomial(vars, q_terms)
                            row = [r - q * s for r, s in zip(row, src)]
                    rows[pos] = [r * scalar for r in row]
                elements[pos] = normalized
    ordering = sorted(range(len(elements)),
                      key=lambda i: order.key(elements[i].leading_monomial(order)), reverse=True)
    elements = [elements[i] for i in ordering]
    if rows is not None:
        rows = [rows[i] for i in ordering]
    return elements, rows


def staged_buchberger(presentation: IdealPresentation, track_provenance: bool = True,
                      max_pairs: int | None = None,
                      helper_order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced basis for the requested order, routed through a helper order.

    A basis under the helper order (degree-graded by default) is computed
    first and then used as the generating set for the requested order.  The
    graded pass keeps intermediate coefficients small, and re-running from
    an already-closed generating set makes the second pass cheap.  Because
    the reduced basis is unique for the ideal and order, the result is
    identical to a direct computation; only the cost differs.  Provenance
    rows are composed across the stages, so the returned rows express each
    element over the original generators.
    """
    if presentation.order.kind == helper_order.kind:
        return buchberger(presentation, track_provenance, max_pairs)
    stage1 = buchberger(
        IdealPresentation(presentation.vars, helper_order, presentation.generators),
        track_provenance, max_pairs)
    stage2 = buchberger(
        IdealPresentation(presentation.vars, presentation.order, tuple(stage1.elements)),
        track_provenance, max_pairs)
    rows = None
    if track_provenance:
        assert stage1.provenance is not None and stage2.provenance is not None
        n_gens = len(presentation.generators)
        rows = []
        for w_row in stage2.provenance:
            composed = [Polynomial.zero(presentation.vars) for _ in range(n_gens)]
            for w, v_row in zip(w_row, stage1.provenance):
                if w.is_zero():
                    continue
                for idx in range(n_gens):
                    if not v_row[idx].is_zero():
                        composed[idx] = composed[idx] + w * v_row[idx]
            rows.append(composed)
    stats = {"stage1": stage1.stats, "stage2": stage2.stats}
    for key in ("pairs_considered", "pairs_reduced", "skipped_coprime",
                "skipped_chain", "basis_additions"):
        stats[key] = stage1.stats[key] + stage2.stats[key]
    return GroebnerBasis(presentation, stage2.elements, rows, stats)


def _certify_with_basis(target: Polynomial, gb: GroebnerBasis) -> MembershipCertificate:
    """Certificate from a provenance-tracked basis: reduce, then compose rows."""
    if gb.provenance is None:
        raise ValueError("basis was computed without provenance tracking")
    normal_form, quotients = reduce(target, gb.elements, gb.order)
    n_gens = len(gb.presentation.generators)
    cofactors = [Polynomial.zero(target.vars) for _ in range(n_gens)]
    for q, row in zip(quotients, gb.provenance):
        if q.is_zero():
            continue
        for idx in range(n_gens):
            cofactors[idx] = cofactors[idx] + q * row[idx]
    certificate = MembershipCertificate(
        target=target,
        generators=gb.presentation.generators,
        cofactors=cofactors,
        remainder=normal_form,
    )
    if not certificate.verify():
        raise AssertionError("certificate failed re-expansion; provenance bug")
    return certificate


def _find_unit_pivot(presentation: IdealPresentation) -> tuple[int, str] | None:
    """Locate a generator of the form c*v + d, c a nonzero constant.

    v must be the highest-precedence variable occurring anywhere in the
    generators (so that under lex the pivot's leading monomial is v itself),
    and d must be free of v.  Returns (generator index, variable name).
    """
    occurring = set()
    for g in presentation.generators:
        for mono in g.terms:
            for pos, e in enumerate(mono):
                if e:
                    occurring.add(pos)
    if not occurring:
        return None
    lead_pos = min(occurring)
    v = presentation.vars.names[lead_pos]
    for idx, g in enumerate(presentation.generators):
        if g.degree_in(v) != 1:
            continue
        coeff_terms = {m[:lead_pos] + m[lead_pos + 1:]: c
                       for m, c in g.terms.items() if m[lead_pos] == 1}
        if len(coeff_terms) == 1 and not any(next(iter(coeff_terms))):
            return idx, v
    return None


def _pivot_image(f: Polynomial, v: str, c: Fraction, d: Polynomial,
                 pivot: Polynomial) -> tuple[Polynomial, Polynomial, int]:
    """Clear v from f via the pivot relation c*v + d = 0.

    Returns (image, w, k) with the exact identity c^k * f = w * pivot + image,
    where k is the degree of f in v and the image is v-free.
    """
    k = f.degree_in(v)
    c_poly = Polynomial.constant(f.vars, c)
    image = eliminate_linear(f, v, c_poly, d)
    if k == 0:
        return image, Polynomial.zero(f.vars), 0
    scaled = Polynomial.constant(f.vars, c ** k) * f
    w = exact_divide(scaled - image, pivot)
    return image, w, k


def certify_membership(presentation: IdealPresentation, target: Polynomial,
                       basis: GroebnerBasis | None = None,
                       max_pairs: int | None = None) -> MembershipCertificate:
    """Certificate expressing the target over the presentation's generators.

    The identity target = sum(K_i * g_i) + remainder holds exactly and the
    remainder vanishes iff the target lies in the ideal.  When a generator is
    linear in the leading variable with a constant coefficient, that variable
    is eliminated first by exact combinations and the certificate for the
    smaller system is lifted back; this keeps cofactor growth manageable.
    The remainder is a membership witness, not necessarily the canonical
    normal form under the presentation's order.
    """
    if basis is not None:
        return _certify_with_basis(target, basis)
    if presentation.order.kind == "lex":
        found = _find_unit_pivot(presentation)
    else:
        found = None
    if found is None:
        gb = staged_buchberger(presentation, track_provenance=True, max_pairs=max_pairs)
        return _certify_with_basis(target, gb)

    pivot_idx, v = found
    pivot = presentation.generators[pivot_idx]
    lead_pos = presentation.vars.names.index(v)
    c = next(co for m, co in pivot.terms.items() if m[lead_pos] == 1)
    d = Polynomial(presentation.vars,
                   {m: co for m, co in pivot.terms.items() if m[lead_pos] == 0})

    rest = [g for i, g in enumerate(presentation.generators) if i != pivot_idx]
    images, ws, ks = [], [], []
    for h in rest:
        image, w, k = _pivot_image(h, v, c, d, pivot)
        images.append(image)
        ws.append(w)
        ks.append(k)
    t_image, t_w, t_k = _pivot_image(target, v, c, d, pivot)

    inner = certify_membership(
        IdealPresentation(presentation.vars, presentation.order, tuple(images)),
        t_image, max_pairs=max_pairs)

    scale = Fraction(1) / c ** t_k
    pivot_cof = t_w * scale
    rest_cofs = []
    for q, w, k in zip(inner.cofactors, ws, ks):
        rest_cofs.append(q * (c ** k * scale))
        if not q.is_zero():
            pivot_cof = pivot_cof - q * w * scale
    cofactors: list[Polynomial] = []
    it = iter(rest_cofs)
    for i in range(len(presentation.generators)):
        cofactors.append(pivot_cof if i == pivot_idx else next(it))
    certificate = MembershipCertificate(
        target=target,
        generators=presentation.generators,
        cofactors=cofactors,
        remainder=inner.remainder * scale,
    )
    if not certificate.verify():
        raise AssertionError("certificate failed re-expansion; pivot composition bug")
    return certificate


# -- serialization -----------------------------------------------------

_WIDE_DIGITS = 2_000_000


def _unlock_wide_integers() -> None:
    """Lift the interpreter's int/str conversion limit for exact coefficients.

    Lex eliminants of the flagship system carry integer coefficients tens of
    thousands of digits wide, beyond CPython's default conversion guard; the
    document layer needs the full width in both directions.  No-op where the
    interpreter has no such limit.
    """
    setter = getattr(sys, "set_int_max_str_digits", None)
    if setter is not None and sys.get_int_max_str_digits() < _WIDE_DIGITS:
        setter(_WIDE_DIGITS)


def basis_to_document(gb: GroebnerBasis) -> dict:
    _unlock_wide_integers()
    doc = {
        "format": BASIS_FORMAT,
        "variables": list(gb.presentation.vars.names),
        "order": gb.order.kind,
        "generators": [format_polynomial(g, gb.order) for g in gb.presentation.generators],
        "basis": [format_polynomial(g, gb.order) for g in gb.elements],
        "stats": dict(gb.stats),
    }
    if gb.provenance is not None:
        doc["provenance"] = [[format_polynomial(p, gb.order) for p in row] for row in gb.provenance]
    return doc


def basis_from_document(doc: dict) -> GroebnerBasis:
    _unlock_wide_integers()
    if doc.get("format") != BASIS_FORMAT:
        raise ValueError(f"unsupported document format: {doc.get('format')!r}")
    vars = VariableSet(tuple(doc["variables"]))
    order = MonomialOrder(doc["order"])
    generators = tuple(parse_polynomial(t, vars) for t in doc["generators"])
    elements = [parse_polynomial(t, vars) for t in doc["basis"]]
    provenance = None
    if "provenance" in doc:
        provenance = [[parse_polynomial(t, vars) for t in row] for row in doc["provenance"]]
    return GroebnerBasis(IdealPresentation(vars, order, generators), elements, provenance,
                         dict(doc.get("stats", {})))


def certificate_to_document(cert: MembershipCertificate, order: MonomialOrder = LEX) -> dict:
    _unlock_wide_integers()
    vars = cert.target.vars
    return {
        "format": CERTIFICATE_FORMAT,
        "variables": list(vars.names),
        "target": format_polynomial(cert.target, order),
        "generators": [format_polynomial(g, order) for g in cert.generators],
        "cofactors": [format_polynomial(c, order) for c in cert.cofactors],
        "remainder": format_polynomial(cert.remainder, order),
        "is_member": cert.remainder.is_zero(),
    }


def certificate_from_document(doc: dict) -> MembershipCertificate:
    _unlock_wide_integers()
    if doc.get("format") != CERTIFICATE_FORMAT:
        raise ValueError(f"unsupported document format: {doc.get('format')!r}")
    vars = VariableSet(tuple(doc["variables"]))
    return MembershipCertificate(
        target=parse_polynomial(doc["target"], vars),
        generators=tuple(parse_polynomial(t, vars) for t in doc["generators"]),
        cofactors=[parse_polynomial(t, vars) for t in doc["cofactors"]],
        remainder=parse_polynomial(doc["remainder"], vars),
    )
