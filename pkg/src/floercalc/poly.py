"""Sparse polynomials in the three ring generators alpha, beta, gamma.

The generators carry the weighted grading deg(alpha)=2, deg(beta)=4,
deg(gamma)=6.  Monomials are ordered by weighted degree first, ties broken
lexicographically with alpha > beta > gamma; serialized output always
lists terms in descending order so identical polynomials produce
identical bytes.
"""

from __future__ import annotations

from typing import NamedTuple

from .scalars import GaussianRational, ONE, Rational, ZERO, scalar

WEIGHTS = (2, 4, 6)
VARIABLE_NAMES = ("a", "b", "c")


class Monomial(NamedTuple):
    e_alpha: int
    e_beta: int
    e_gamma: int

    @property
    def weighted_degree(self):
        return 2 * self.e_alpha + 4 * self.e_beta + 6 * self.e_gamma

    def sort_key(self):
        # weighted degree first, then lex with alpha > beta > gamma
        return (self.weighted_degree, self)

    def times(self, other):
        return Monomial(
            self.e_alpha + other.e_alpha,
            self.e_beta + other.e_beta,
            self.e_gamma + other.e_gamma,
        )

    def divides(self, other):
        return (
            self.e_alpha <= other.e_alpha
            and self.e_beta <= other.e_beta
            and self.e_gamma <= other.e_gamma
        )

    def divided_by(self, other):
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(
            self.e_alpha - other.e_alpha,
            self.e_beta - other.e_beta,
            self.e_gamma - other.e_gamma,
        )

    def lcm(self, other):
        return Monomial(
            max(self.e_alpha, other.e_alpha),
            max(self.e_beta, other.e_beta),
            max(self.e_gamma, other.e_gamma),
        )

    def is_coprime_to(self, other):
        return (
            min(self.e_alpha, other.e_alpha) == 0
            and min(self.e_beta, other.e_beta) == 0
            and min(self.e_gamma, other.e_gamma) == 0
        )

    def __str__(self):
        parts = []
        for name, e in zip(VARIABLE_NAMES, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


MONOMIAL_ONE = Monomial(0, 0, 0)


class Polynomial:
    """Sparse exact polynomial: a finite map Monomial -> GaussianRational.

    Zero coefficients are never stored, so equality is structural.
    Instances are immutable; arithmetic accepts ints, rationals and
    GaussianRationals on either side.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in dict(terms).items():
                coeff = scalar(coeff)
                if coeff:
                    clean[Monomial(*mono)] = coeff
        self.terms = clean

    @classmethod
    def _unsafe(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls):
        return _P_ZERO

    @classmethod
    def constant(cls, value):
        value = scalar(value)
        if not value:
            return _P_ZERO
        return cls._unsafe({MONOMIAL_ONE: value})

    @classmethod
    def term(cls, coeff, exponents):
        coeff = scalar(coeff)
        if not coeff:
            return _P_ZERO
        return cls._unsafe({Monomial(*exponents): coeff})

    @property
    def is_zero(self):
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, GaussianRational, Rational)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in o.terms.items():
            s = terms.get(mono)
            s = coeff if s is None else s + coeff
            if s:
                terms[mono] = s
            elif mono in terms:
                del terms[mono]
        return Polynomial._unsafe(terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._unsafe({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = m1.times(m2)
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return Polynomial._unsafe(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take non-negative ints")
        result = P_ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        """Terms in descending monomial order (the canonical ordering)."""
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key(), reverse=True)

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return max(self.terms, key=Monomial.sort_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def monic(self):
        lc = self.leading_coefficient()
        if lc == ONE:
            return self
        inv = lc.inverse()
        return Polynomial._unsafe({m: c * inv for m, c in self.terms.items()})

    def weighted_degree(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return self.leading_monomial().weighted_degree

    def weighted_components(self):
        """Split into weighted-homogeneous parts, keyed by degree."""
        parts = {}
        for mono, coeff in self.terms.items():
            parts.setdefault(mono.weighted_degree, {})[mono] = coeff
        return {
            d: Polynomial._unsafe(terms) for d, terms in sorted(parts.items())
        }

    def specialize(self, alpha=None, beta=None, gamma=None):
        """Substitute constants for any subset of the generators.

        Unassigned generators stay symbolic.  The substitution is a ring
        homomorphism, so it is applied term by term.
        """
        values = (alpha, beta, gamma)
        out = {}
        for mono, coeff in self.terms.items():
            c = coeff
            exps = []
            for e, value in zip(mono, values):
                if value is None:
                    exps.append(e)
                else:
                    exps.append(0)
                    if e:
                        c = c * scalar(value) ** e
            if not c:
                continue
            m = Monomial(*exps)
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return Polynomial._unsafe(out)

    def coefficient(self, exponents):
        return self.terms.get(Monomial(*exponents), ZERO)

    def has_real_coefficients(self):
        return all(c.is_real for c in self.terms.values())

    def to_json(self):
        """Canonical JSON encoding with terms in descending order."""
        return {
            "terms": [
                {"c": coeff.to_json(), "e": list(mono)}
                for mono, coeff in self.sorted_terms()
            ]
        }

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms():
            if coeff.is_real:
                sign = "-" if coeff.re < 0 else "+"
                mag = scalar(abs(coeff.re))
            elif not coeff.re:
                sign = "-" if coeff.im < 0 else "+"
                mag = scalar(0, abs(coeff.im))
            else:
                sign = "+"
                mag = coeff
            if mono == MONOMIAL_ONE:
                body = str(mag)
            elif mag == ONE:
                body = str(mono)
            elif mag.is_real:
                body = f"{mag}*{mono}"
            else:
                wrapped = str(mag) if mag.re else f"({mag})"
                body = f"{wrapped}*{mono}"
            pieces.append((sign, body))
        sign, body = pieces[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self})"


_P_ZERO = Polynomial._unsafe({})
P_ONE = Polynomial._unsafe({MONOMIAL_ONE: ONE})
ALPHA = Polynomial._unsafe({Monomial(1, 0, 0): ONE})
BETA = Polynomial._unsafe({Monomial(0, 1, 0): ONE})
GAMMA = Polynomial._unsafe({Monomial(0, 0, 1): ONE})
