"""Exact Laurent polynomial arithmetic over the integers.

Two coefficient rings are used throughout the package: Z[u,v] with both
variables invertible (two-variable arc-group modules) and Z[t] with t
invertible (one-variable specializations).  A polynomial is a map from
integer exponent vectors to nonzero coefficients; all arithmetic is exact,
with arbitrary-precision integers.
"""

from __future__ import annotations

import math
import re

UV = ("u", "v")
TVAR = ("t",)


class NonUnitImage(ValueError):
    """Raised when a specialization image is not a unit of the target ring."""


class InexactDivision(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _mono_key(exps):
    # graded-lex, first variable strongest
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    ``vars`` names the variables (``("u", "v")`` or ``("t",)``); ``terms``
    maps exponent tuples to nonzero coefficients.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=()):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise ValueError(f"exponent {exps} has wrong arity for vars {self.vars}")
            coeff = int(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    @classmethod
    def _raw(cls, vars, terms):
        """Internal constructor: terms must already be clean (no zeros)."""
        self = object.__new__(cls)
        self.vars = vars
        self.terms = terms
        return self

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, c):
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def monomial(cls, vars, exps, coeff=1):
        return cls(vars, {tuple(exps): coeff})

    # -- basic queries -----------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_unit(self):
        """True for +-(monomial), the units of the Laurent ring."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    @property
    def is_one(self):
        zero_exp = (0,) * len(self.vars)
        return self.terms == {zero_exp: 1}

    def min_exps(self):
        """Componentwise minimum exponent vector (zero vector if p = 0)."""
        if not self.terms:
            return (0,) * len(self.vars)
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.vars)))

    def max_degree(self, k):
        if not self.terms:
            return 0
        return max(e[k] for e in self.terms)

    def content(self):
        """gcd of the integer coefficients, nonnegative."""
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    # -- ring operations ---------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise ValueError(f"mixed variable sets {self.vars} and {other.vars}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return LaurentPoly._raw(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        pair = len(self.vars) == 2
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                if pair:
                    e = (e1[0] + e2[0], e1[1] + e2[1])
                else:
                    e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return LaurentPoly._raw(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = LaurentPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        if not self.is_unit:
            raise ZeroDivisionError(f"{self} is not a unit")
        (exps, coeff), = self.terms.items()
        return LaurentPoly(self.vars, {tuple(-e for e in exps): coeff})

    def shift(self, exps, coeff=1):
        """Multiply by coeff * x^exps (a single monomial)."""
        if coeff == 0:
            return LaurentPoly._raw(self.vars, {})
        return LaurentPoly._raw(
            self.vars,
            {tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in self.terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- canonical form ----------------------------------------------

    def canonical(self):
        """The distinguished associate under multiplication by +-x^e.

        Exponents are shifted so each variable's minimum exponent is 0,
        and the sign is fixed so the lexicographically greatest monomial
        (first variable strongest) has a positive coefficient.
        canonical(0) = 0; idempotent.
        """
        if not self.terms:
            return self
        mins = self.min_exps()
        terms = {tuple(a - b for a, b in zip(e, mins)): c for e, c in self.terms.items()}
        if terms[max(terms)] < 0:
            terms = {e: -c for e, c in terms.items()}
        return LaurentPoly._raw(self.vars, terms)

    # -- specializations ---------------------------------------------

    def subs(self, images):
        """Ring homomorphism into another Laurent ring; images must be units."""
        images = tuple(images)
        if len(images) != len(self.vars):
            raise ValueError("one image per variable required")
        for im in images:
            if not isinstance(im, LaurentPoly) or not im.is_unit:
                raise NonUnitImage(f"{im!r} is not a unit image")
        tvars = images[0].vars
        out = LaurentPoly.zero(tvars)
        for exps, coeff in self.terms.items():
            term = LaurentPoly.const(tvars, coeff)
            for im, e in zip(images, exps):
                term = term * im ** e
            out = out + term
        return out

    def subs_int(self, images):
        """Evaluate over Z; images must be +-1 (the units of Z)."""
        for im in images:
            if im not in (1, -1):
                raise NonUnitImage(f"{im} is not a unit of Z")
        total = 0
        for exps, coeff in self.terms.items():
            val = coeff
            for im, e in zip(images, exps):
                if im == -1 and e % 2:
                    val = -val
            total += val
        return total

    def subs_mod(self, images, m):
        """Evaluate in Z/m; images must be invertible mod m."""
        if m < 2:
            raise ValueError("modulus must be at least 2")
        invs = []
        for im in images:
            im = im % m
            if math.gcd(im, m) != 1:
                raise NonUnitImage(f"{im} is not a unit mod {m}")
            invs.append((im, pow(im, -1, m)))
        total = 0
        for exps, coeff in self.terms.items():
            val = coeff % m
            for (im, inv), e in zip(invs, exps):
                val = val * pow(im if e >= 0 else inv, abs(e), m) % m
            total = (total + val) % m
        return total

    # -- rendering / parsing -----------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_mono_key, reverse=True):
            coeff = self.terms[exps]
            factors = []
            for name, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = "*".join([str(mag)] + factors)
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append((" + " if coeff > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly({'.'.join(self.vars)}: {self})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\^)|(\*)|(\+)|(-))")


def parse_poly(text, vars=UV):
    """Parse the textual polynomial format produced by ``str()``.

    Accepts e.g. ``u^2*v - u + 1``, ``t^-1 + 2`` or ``0``.
    """
    vars = tuple(vars)
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            rest = text[pos:].strip()
            if not rest:
                break
            raise ValueError(f"bad polynomial syntax near {rest[:12]!r}")
        pos = m.end()
        tokens.append(m)
    terms = {}
    i = 0

    def tok(j):
        return tokens[j] if j < len(tokens) else None

    while i < len(tokens):
        sign = 1
        while tok(i) and (tok(i).group(5) or tok(i).group(6)):
            if tok(i).group(6):
                sign = -sign
            i += 1
        if tok(i) is None:
            raise ValueError("dangling sign in polynomial")
        coeff = sign
        exps = [0] * len(vars)
        saw_factor = False
        expect_factor = True
        while tok(i) is not None and (expect_factor or (tok(i).group(4) is not None)):
            if tok(i).group(4):  # '*'
                i += 1
                expect_factor = True
                continue
            t = tok(i)
            if t.group(1):
                coeff *= int(t.group(1))
                i += 1
                saw_factor = True
            elif t.group(2):
                name = t.group(2)
                if name not in vars:
                    raise ValueError(f"unknown variable {name!r}")
                e = 1
                i += 1
                if tok(i) and tok(i).group(3):  # '^'
                    i += 1
                    esign = 1
                    if tok(i) and tok(i).group(6):
                        esign = -1
                        i += 1
                    if not (tok(i) and tok(i).group(1)):
                        raise ValueError("exponent expected after '^'")
                    e = esign * int(tok(i).group(1))
                    i += 1
                exps[vars.index(name)] += e
                saw_factor = True
            else:
                break
            expect_factor = False
        if not saw_factor:
            raise ValueError("empty term in polynomial")
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPoly(vars, terms)


# -- exact division and gcd ------------------------------------------


def divexact(p, q):
    """Exact quotient p / q in the Laurent ring; raises InexactDivision."""
    if not isinstance(p, LaurentPoly):
        raise TypeError("LaurentPoly expected")
    if q.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero:
        return p
    # Shift both operands into ordinary polynomials; monomials are units.
    pm, qm = p.min_exps(), q.min_exps()
    net = tuple(a - b for a, b in zip(pm, qm))
    rem = dict(p.shift(tuple(-e for e in pm)).terms)
    div = q.shift(tuple(-e for e in qm)).terms
    lead_q = max(div, key=_mono_key)
    quot = {}
    while rem:
        lead_r = max(rem, key=_mono_key)
        e = tuple(a - b for a, b in zip(lead_r, lead_q))
        if any(x < 0 for x in e):
            raise InexactDivision(f"{q} does not divide {p}")
        c, d = rem[lead_r], div[lead_q]
        if c % d:
            raise InexactDivision(f"{q} does not divide {p}")
        k = c // d
        quot[e] = k
        for eq, cq in div.items():
            key = tuple(a + b for a, b in zip(e, eq))
            val = rem.get(key, 0) - k * cq
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return LaurentPoly(p.vars, quot).shift(net)


def divides(q, p):
    """True when q divides p exactly (q | p)."""
    if q.is_zero:
        return p.is_zero
    try:
        divexact(p, q)
        return True
    except InexactDivision:
        return False


def _coeffs_in(p, k):
    """Split p by the exponent of variable k: {e: coefficient poly}."""
    out = {}
    for exps, c in p.terms.items():
        e = exps[k]
        key = exps[:k] + (0,) + exps[k + 1:]
        out.setdefault(e, {})[key] = c
    return {e: LaurentPoly(p.vars, t) for e, t in out.items()}


def _lead_coeff(p, k):
    d = p.max_degree(k)
    out = {}
    for exps, c in p.terms.items():
        if exps[k] == d:
            out[exps[:k] + (0,) + exps[k + 1:]] = c
    return LaurentPoly._raw(p.vars, out)


def _prem(f, g, k):
    """Classical pseudo-remainder in variable k: lc(g)^(df-dg+1) f mod g."""
    df, dg = f.max_degree(k), g.max_degree(k)
    if f.is_zero or df < dg:
        return f
    lg = _lead_coeff(g, k)
    r = f
    n = df - dg + 1
    while not r.is_zero and r.max_degree(k) >= dg:
        dr = r.max_degree(k)
        lr = _lead_coeff(r, k)
        shift = tuple((dr - dg) if i == k else 0 for i in range(len(f.vars)))
        r = r * lg - g * lr.shift(shift)
        n -= 1
    if n:
        r = r * _pow_poly(lg, n)
    return r


def _pow_poly(p, n):
    out = LaurentPoly.const(p.vars, 1)
    for _ in range(n):
        out = out * p
    return out


def _subresultant_tail(f, g, k):
    """Last nonzero element of the subresultant remainder sequence in var k.

    Requires deg_k(f) >= deg_k(g) > ... ; coefficient growth stays
    polynomial because every pseudo-remainder is divided by the predicted
    subresultant factor.
    """
    n, m = f.max_degree(k), g.max_degree(k)
    d = n - m
    b = LaurentPoly.const(f.vars, (-1) ** (d + 1))
    h = _prem(f, g, k) * b
    lc = _lead_coeff(g, k)
    c = -_pow_poly(lc, d)
    while not h.is_zero:
        deg_h = h.max_degree(k)
        f, g, m, d = g, h, deg_h, m - deg_h
        b = -lc * _pow_poly(c, d)
        h = _prem(f, g, k)
        if not h.is_zero:
            h = divexact(h, b)
        lc = _lead_coeff(g, k)
        if d > 1:
            c = divexact(_pow_poly(-lc, d), _pow_poly(c, d - 1))
        else:
            c = -lc
    return g


def _gcd_rec(p, q, k):
    """gcd of ordinary polynomials (nonnegative exponents) in vars[0..k]."""
    if p.is_zero:
        return q
    if q.is_zero:
        return p
    if k < 0:
        raise AssertionError("constant level handled by caller")
    pc = _coeffs_in(p, k)
    qc = _coeffs_in(q, k)
    if len(pc) == 1 and 0 in pc and len(qc) == 1 and 0 in qc:
        # both constant in variable k: recurse or take integer gcd
        if k == 0:
            g = math.gcd(pc[0].content(), qc[0].content())
            return LaurentPoly.const(p.vars, g)
        return _gcd_rec(pc[0], qc[0], k - 1)

    def content(coeffs):
        g = LaurentPoly.zero(p.vars)
        for c in coeffs.values():
            if k == 0:
                g = LaurentPoly.const(p.vars, math.gcd(g.content(), c.content()))
            else:
                g = _gcd_rec(g, c, k - 1)
        return g

    cp, cq = content(pc), content(qc)
    f, g = divexact(p, cp), divexact(q, cq)
    if k == 0:
        cont_gcd = LaurentPoly.const(p.vars, math.gcd(cp.content(), cq.content()))
    else:
        cont_gcd = _gcd_rec(cp, cq, k - 1)
    if f.max_degree(k) < g.max_degree(k):
        f, g = g, f
    tail = _subresultant_tail(f, g, k)
    prim = divexact(tail, content(_coeffs_in(tail, k)))
    return cont_gcd * prim


def gcd(p, q):
    """Canonical gcd in the Laurent ring, integer content included."""
    if p.vars != q.vars:
        raise ValueError("mixed variable sets")
    if p.is_zero:
        return q.canonical()
    if q.is_zero:
        return p.canonical()
    if p.is_unit or q.is_unit:
        return LaurentPoly.const(p.vars, 1)
    pp = p.shift(tuple(-e for e in p.min_exps()))
    qq = q.shift(tuple(-e for e in q.min_exps()))
    return _gcd_rec(pp, qq, len(p.vars) - 1).canonical()


def gcd_many(polys, vars=None):
    """gcd of a collection; the empty collection has gcd 0."""
    polys = list(polys)
    if not polys:
        if vars is None:
            raise ValueError("vars required for an empty collection")
        return LaurentPoly.zero(vars)
    g = polys[0]
    for p in polys[1:]:
        g = gcd(g, p)
        if g.is_one:
            break
    return g.canonical()


# convenient generators
U = LaurentPoly.monomial(UV, (1, 0))
V = LaurentPoly.monomial(UV, (0, 1))
ONE_UV = LaurentPoly.const(UV, 1)
T = LaurentPoly.monomial(TVAR, (1,))
ONE_T = LaurentPoly.const(TVAR, 1)


def l2(terms):
    """Two-variable polynomial from {(u_exp, v_exp): coeff}."""
    return LaurentPoly(UV, terms)


def l1(terms):
    """One-variable polynomial from {t_exp: coeff}."""
    return LaurentPoly(TVAR, {(e,): c for e, c in terms.items()})
