"""Buchberger's algorithm, reduced bases and ideal-level predicates.

All computations run over Q(i) in the fixed monomial order of `poly`
(weighted degree, ties lex with alpha > beta > gamma).  Reduced bases are
canonical: two generating sets of the same ideal produce byte-identical
bases, which makes ideal equality a structural comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfiniteQuotientError
from .poly import MONOMIAL_ONE, Monomial, P_ONE, Polynomial
from .scalars import ONE

ORDER_TAG = "wdeg(2,4,6)+lex(a>b>c)"


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced, monic Groebner basis, sorted by leading monomial."""

    generators: tuple

    @property
    def is_unit(self):
        return len(self.generators) == 1 and self.generators[0] == P_ONE

    @property
    def is_zero_ideal(self):
        return not self.generators

    def leading_monomials(self):
        return [g.leading_monomial() for g in self.generators]

    def to_json(self):
        return {
            "order": ORDER_TAG,
            "generators": [g.to_json() for g in self.generators],
        }


def reduce_modulo(p, generators):
    """Full normal form of p against a list of polynomials.

    Repeatedly cancels the largest reducible term against the first
    generator (in list order) whose leading monomial divides it; terms no
    generator can touch move to the remainder.  Against a reduced basis
    the result is the unique normal form.
    """
    lead = [(g.leading_monomial(), g) for g in generators if not g.is_zero]
    remainder = {}
    work = dict(p.terms)
    while work:
        mono = max(work, key=Monomial.sort_key)
        coeff = work.pop(mono)
        for lm, g in lead:
            if lm.divides(mono):
                shift = mono.divided_by(lm)
                factor = coeff / g.terms[lm]
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    m = gm.times(shift)
                    s = work.get(m)
                    s = -(factor * gc) if s is None else s - factor * gc
                    if s:
                        work[m] = s
                    elif m in work:
                        del work[m]
                break
        else:
            remainder[mono] = coeff
    return Polynomial(remainder)


def normal_form(p, basis):
    """Normal form of p modulo a Groebner basis (linear over scalars)."""
    gens = basis.generators if isinstance(basis, GroebnerBasis) else basis
    return reduce_modulo(p, gens)


def s_polynomial(f, g):
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = lf.lcm(lg)
    tf = Polynomial.term(ONE / f.terms[lf], lcm.divided_by(lf))
    tg = Polynomial.term(ONE / g.terms[lg], lcm.divided_by(lg))
    return tf * f - tg * g


def buchberger(generators):
    """Reduced Groebner basis of the ideal the generators span.

    Pair selection follows the normal strategy (smallest lcm weighted
    degree first, ties by generator index) and pairs are pruned with
    Buchberger's coprimality and chain criteria.  Zero generators are
    dropped; an empty list after filtering represents the zero ideal and
    yields an empty basis.
    """
    basis = [g.monic() for g in generators if not g.is_zero]
    if not basis:
        return GroebnerBasis(())
    lead = [g.leading_monomial() for g in basis]
    pending = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def selection_key(pair):
        i, j = pair
        return (lead[i].lcm(lead[j]).weighted_degree, i, j)

    while pending:
        i, j = min(pending, key=selection_key)
        pending.remove((i, j))
        lcm = lead[i].lcm(lead[j])
        if lead[i].is_coprime_to(lead[j]):
            continue
        chained = False
        for k in range(len(basis)):
            if k in (i, j) or not lead[k].divides(lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (
                min(j, k),
                max(j, k),
            ) not in pending:
                chained = True
                break
        if chained:
            continue
        r = reduce_modulo(s_polynomial(basis[i], basis[j]), basis)
        if r.is_zero:
            continue
        basis.append(r.monic())
        lead.append(r.leading_monomial())
        t = len(basis) - 1
        pending.update((s, t) for s in range(t))

    # minimize: drop generators whose leading monomial another one divides
    minimal = []
    for i, lm in enumerate(lead):
        redundant = any(
            lm2.divides(lm) and (lm2 != lm or j < i)
            for j, lm2 in enumerate(lead)
            if j != i
        )
        if not redundant:
            minimal.append(basis[i])

    # interreduce tails: leading monomials are pairwise non-divisible, so a
    # single pass of reducing each generator against the others suffices
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(reduce_modulo(g, others).monic())
    reduced.sort(key=lambda g: g.leading_monomial().sort_key())
    return GroebnerBasis(tuple(reduced))


def ideal_contains(basis, p):
    """True iff p reduces to zero modulo the basis."""
    return normal_form(p, basis).is_zero


def ideal_equal(a, b):
    """True iff two reduced bases present the same ideal.

    Reduced bases are canonical for a fixed order, so this is structural.
    """
    return a.generators == b.generators


def comaximal(a, b):
    """True iff the sum of the two ideals is the unit ideal."""
    return buchberger(list(a.generators) + list(b.generators)).is_unit


def standard_monomials(basis):
    """Monomials not divisible by any leading monomial, sorted ascending.

    Their count is the dimension of the quotient algebra.  Raises
    InfiniteQuotientError when some generator has no pure power among the
    leading monomials (the quotient is then infinite dimensional).
    """
    if basis.is_zero_ideal:
        raise InfiniteQuotientError("zero ideal: quotient is the full ring")
    if basis.is_unit:
        return []
    lms = basis.leading_monomials()
    bounds = []
    for axis in range(3):
        pure = [
            lm[axis]
            for lm in lms
            if lm[axis] > 0 and all(lm[t] == 0 for t in range(3) if t != axis)
        ]
        if not pure:
            raise InfiniteQuotientError(
                "quotient is infinite dimensional: no pure power of "
                f"generator {axis} among leading monomials"
            )
        bounds.append(min(pure))
    out = []
    for ea in range(bounds[0]):
        for eb in range(bounds[1]):
            for ec in range(bounds[2]):
                m = Monomial(ea, eb, ec)
                if not any(lm.divides(m) for lm in lms):
                    out.append(m)
    out.sort(key=Monomial.sort_key)
    return out


def quotient_dimension(basis):
    """Dimension of the quotient algebra presented by the basis."""
    return len(standard_monomials(basis))
