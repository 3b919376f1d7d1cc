"""Integer-coefficient Laurent polynomials in n variables, canonical form.

Terms live in a dict mapping exponent tuples (entries may be negative) to
nonzero integer coefficients, so equal values always have identical
representations.  The printed form sorts terms by (total degree, exponent
tuple) and is bit-exact across runs:  ``x1^-1 + x1^-1*x2``.
"""

from __future__ import annotations

import re

from .errors import InexactDivisionError, InputError


class LaurentPolynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != nvars:
                    raise InputError("exponent length mismatch")
                if c != 0:
                    self.terms[tuple(exp)] = self.terms.get(tuple(exp), 0) + c
            self.terms = {e: c for e, c in self.terms.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPolynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars)

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "LaurentPolynomial":
        """x_i^power for 1-indexed i."""
        exp = [0] * nvars
        exp[i - 1] = power
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exps, coeff: int = 1) -> "LaurentPolynomial":
        return cls(len(exps), {tuple(exps): coeff})

    # -- ring operations ---------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise InputError("variable count mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            elif e in terms:
                del terms[e]
        out = LaurentPolynomial(self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPolynomial(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                elif e in terms:
                    del terms[e]
        out = LaurentPolynomial(self.nvars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def scale(self, k: int):
        out = LaurentPolynomial(self.nvars)
        if k:
            out.terms = {e: c * k for e, c in self.terms.items()}
        return out

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise InexactDivisionError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise InexactDivisionError("non-unit monomial coefficient")
            return LaurentPolynomial(
                self.nvars, {tuple(k * x for x in e): c ** (k % 2 or 2) if c < 0 else 1})
        out = LaurentPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(self.nvars, other)
        return (isinstance(other, LaurentPolynomial)
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, values):
        """Evaluate at nonzero rational/integer arguments."""
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                v *= x ** k
            total += v
        return total

    # -- canonical form ----------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(e):
                if k == 0:
                    continue
                factors.append(f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    __repr__ = __str__


_TERM_RE = re.compile(r"^(?:(\d+)\*?)?((?:x\d+(?:\^-?\d+)?(?:\*x\d+(?:\^-?\d+)?)*))?$")


def parse(s: str, nvars: int) -> LaurentPolynomial:
    """Parse the canonical string format back into a polynomial."""
    s = s.strip()
    if s == "0":
        return LaurentPolynomial.zero(nvars)
    # terms are separated by spaced +/-; a leading sign may hug its term
    lead = "+"
    if s and s[0] in "+-":
        lead = s[0]
        s = s[1:].lstrip()
    chunks = [lead] + [c.strip() for c in re.split(r"\s([+-])\s", s)]
    if len(chunks) % 2:
        raise InputError(f"cannot parse polynomial: {s!r}")
    out = LaurentPolynomial.zero(nvars)
    for sign, body in zip(chunks[::2], chunks[1::2]):
        m = _TERM_RE.match(body.strip())
        if not m or (m.group(1) is None and m.group(2) is None):
            raise InputError(f"cannot parse term: {body!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        if sign == "-":
            coeff = -coeff
        exp = [0] * nvars
        if m.group(2):
            for factor in m.group(2).split("*"):
                if "^" in factor:
                    var, _, pw = factor.partition("^")
                    power = int(pw)
                else:
                    var, power = factor, 1
                idx = int(var[1:])
                if not 1 <= idx <= nvars:
                    raise InputError(f"variable index out of range: {factor}")
                exp[idx - 1] += power
        out = out + LaurentPolynomial.monomial(exp, coeff)
    return out


def _shift_to_poly(p: LaurentPolynomial):
    """Multiply by a monomial so every variable has minimum exponent 0."""
    mins = [min(e[i] for e in p.terms) for i in range(p.nvars)]
    shifted = LaurentPolynomial(
        p.nvars, {tuple(a - b for a, b in zip(e, mins)): c
                  for e, c in p.terms.items()})
    return shifted, tuple(mins)


def divide_exact(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Exact quotient a / b; raises InexactDivisionError if b does not divide a.

    Both operands are shifted to honest polynomials first; for an exact
    Laurent division the shifted quotient is again a polynomial, so plain
    leading-term division (graded-lex order) terminates and certifies
    exactness along the way.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return LaurentPolynomial.zero(a.nvars)
    a._check(b)
    pa, sa = _shift_to_poly(a)
    pb, sb = _shift_to_poly(b)
    key = lambda e: (sum(e), e)
    lead_b = max(pb.terms, key=key)
    cb = pb.terms[lead_b]
    rem = dict(pa.terms)
    quo = {}
    while rem:
        lead = max(rem, key=key)
        c = rem[lead]
        qe = tuple(x - y for x, y in zip(lead, lead_b))
        if any(x < 0 for x in qe) or c % cb != 0:
            raise InexactDivisionError("polynomial division left a remainder")
        qc = c // cb
        quo[qe] = qc
        for e, bc in pb.terms.items():
            te = tuple(x + y for x, y in zip(qe, e))
            v = rem.get(te, 0) - qc * bc
            if v:
                rem[te] = v
            elif te in rem:
                del rem[te]
    shift = tuple(x - y for x, y in zip(sa, sb))
    return LaurentPolynomial(
        a.nvars, {tuple(x + y for x, y in zip(e, shift)): c
                  for e, c in quo.items()})
