"""Exact coefficient arithmetic: Z[q,t] and its fraction field Q(q,t).

QTPoly is a sparse bivariate polynomial in the parameters q and t with
integer coefficients (Python ints, so precision is unbounded).  QTRational
is a quotient of two QTPolys kept in a canonical normal form: numerator and
denominator coprime, denominator with positive leading coefficient under
graded lexicographic order (q before t), zero stored as 0/1.  Canonical
form makes equality a plain representation check, which is what every
identity test in this package relies on.
"""

from __future__ import annotations

import math
from fractions import Fraction


def _glex_key(e):
    # graded lex with q weighted before t
    return (e[0] + e[1], e[0])


class QTPoly:
    """Sparse polynomial in Z[q,t]; terms map (deg_q, deg_t) -> int."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    if e[0] < 0 or e[1] < 0:
                        raise ValueError("negative exponent in QTPoly: %r" % (e,))
                    c[e] = v
        self._c = c

    @classmethod
    def _raw(cls, c):
        p = object.__new__(cls)
        p._c = c
        return p

    @classmethod
    def const(cls, n):
        return cls._raw({(0, 0): n}) if n else cls._raw({})

    @classmethod
    def monomial(cls, coeff, dq, dt):
        if dq < 0 or dt < 0:
            raise ValueError("negative exponent")
        return cls._raw({(dq, dt): coeff}) if coeff else cls._raw({})

    def terms(self):
        """Terms as ((deg_q, deg_t), coeff) in ascending graded-lex order."""
        return sorted(self._c.items(), key=lambda kv: _glex_key(kv[0]))

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __neg__(self):
        return QTPoly._raw({e: -v for e, v in self._c.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        c = dict(a)
        for e, v in b.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                del c[e]
        return QTPoly._raw(c)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) - v
            if w:
                c[e] = w
            else:
                del c[e]
        return QTPoly._raw(c)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return QTPoly._raw({})
            if other == 1:
                return self
            return QTPoly._raw({e: other * v for e, v in self._c.items()})
        a, b = self._c, other._c
        if not a or not b:
            return QTPoly._raw({})
        if len(a) > len(b):
            a, b = b, a
        c = {}
        for (aq, at), av in a.items():
            for (bq, bt), bv in b.items():
                e = (aq + bq, at + bt)
                w = c.get(e, 0) + av * bv
                if w:
                    c[e] = w
                elif e in c:
                    del c[e]
        return QTPoly._raw(c)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a QTPoly")
        result = QTPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, dq, dt):
        """Multiply by the monomial q^dq t^dt."""
        if dq < 0 or dt < 0:
            raise ValueError("negative exponent shift")
        return QTPoly._raw({(eq + dq, et + dt): v for (eq, et), v in self._c.items()})

    def leading(self):
        """(exponent pair, coeff) of the graded-lex leading term."""
        if not self._c:
            raise ValueError("leading term of zero")
        e = max(self._c, key=_glex_key)
        return e, self._c[e]

    def leading_coeff_sign(self):
        return 1 if self.leading()[1] > 0 else -1

    def int_content(self):
        """gcd of the integer coefficients, signed like the leading coeff."""
        if not self._c:
            return 0
        g = 0
        for v in self._c.values():
            g = math.gcd(g, v)
            if g == 1:
                break
        return g * self.leading_coeff_sign()

    def min_degrees(self):
        dq = min(e[0] for e in self._c)
        dt = min(e[1] for e in self._c)
        return dq, dt

    def degree_q(self):
        return max((e[0] for e in self._c), default=-1)

    def degree_t(self):
        return max((e[1] for e in self._c), default=-1)

    def is_one(self):
        return self._c == {(0, 0): 1}

    def is_monomial(self):
        return len(self._c) <= 1

    def evaluate(self, q0, t0):
        """Exact value at q=q0, t=t0 (Fractions or ints)."""
        q0 = Fraction(q0)
        t0 = Fraction(t0)
        total = Fraction(0)
        for (dq, dt), v in self._c.items():
            total += v * q0**dq * t0**dt
        return total

    def to_triples(self):
        """Serialize as [coeff-decimal-string, deg_q, deg_t] triples, graded-lex."""
        return [[str(v), e[0], e[1]] for e, v in self.terms()]

    @classmethod
    def from_triples(cls, triples):
        return cls({(int(dq), int(dt)): int(c) for c, dq, dt in triples})

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for (dq, dt), v in self.terms():
            mono = ""
            if dq:
                mono += "q" if dq == 1 else "q^%d" % dq
            if dt:
                mono += "t" if dt == 1 else "t^%d" % dt
            if mono:
                if v == 1:
                    body = mono
                elif v == -1:
                    body = "-" + mono
                else:
                    body = "%d%s" % (v, mono)
            else:
                body = "%d" % v
            if out and not body.startswith("-"):
                out.append("+" + body)
            else:
                out.append(body)
        return "".join(out)

    def __repr__(self):
        return "QTPoly(%s)" % str(self)


P_ZERO = QTPoly.const(0)
P_ONE = QTPoly.const(1)
P_Q = QTPoly.monomial(1, 1, 0)
P_T = QTPoly.monomial(1, 0, 1)


# ---------------------------------------------------------------------------
# gcd machinery.  QTPoly is viewed recursively as a polynomial in q whose
# coefficients live in Z[t] (plain {deg_t: int} dicts); both levels use a
# primitive polynomial remainder sequence, which keeps coefficients small at
# the degrees this package ever sees.
# ---------------------------------------------------------------------------

def _u_mul(f, g):
    c = {}
    for ef, vf in f.items():
        for eg, vg in g.items():
            e = ef + eg
            w = c.get(e, 0) + vf * vg
            if w:
                c[e] = w
            elif e in c:
                del c[e]
    return c

def _u_sub(f, g):
    c = dict(f)
    for e, v in g.items():
        w = c.get(e, 0) - v
        if w:
            c[e] = w
        elif e in c:
            del c[e]
    return c

def _u_scale(f, n):
    if n == 1:
        return f
    return {e: n * v for e, v in f.items()}

def _u_deg(f):
    return max(f, default=-1)

def _u_content(f):
    g = 0
    for v in f.values():
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g

def _u_primitive(f):
    g = _u_content(f)
    if f and f[_u_deg(f)] < 0:
        g = -g
    if g in (0, 1):
        return f
    return {e: v // g for e, v in f.items()}

def _u_pos(f):
    if f and f[_u_deg(f)] < 0:
        return _u_scale(f, -1)
    return f

def _u_gcd(f, g):
    """gcd in Z[t] with positive leading coefficient."""
    if not f:
        return _u_pos(dict(g))
    if not g:
        return _u_pos(dict(f))
    c = math.gcd(_u_content(f), _u_content(g))
    a, b = _u_primitive(f), _u_primitive(g)
    while b:
        a, b = b, _u_primitive(_u_prem(a, b))
    return _u_scale(a, c)

def _u_prem(f, g):
    """Pseudo-remainder of f by g in Z[t]."""
    df, dg = _u_deg(f), _u_deg(g)
    if df < dg:
        return f
    lg = g[dg]
    r = f
    while r and _u_deg(r) >= dg:
        dr = _u_deg(r)
        lr = r[dr]
        # lg * r - lr * t^(dr-dg) * g
        r = _u_sub(_u_scale(r, lg), {e + dr - dg: lr * v for e, v in g.items()})
    return r

def _u_divexact(f, g):
    """Exact quotient f/g in Z[t]; raises if division is not exact."""
    if not g:
        raise ZeroDivisionError("division by zero in Z[t]")
    if not f:
        return {}
    q = {}
    r = dict(f)
    dg = _u_deg(g)
    lg = g[dg]
    while r:
        dr = _u_deg(r)
        if dr < dg:
            raise ArithmeticError("inexact division in Z[t]")
        c, rem = divmod(r[dr], lg)
        if rem:
            raise ArithmeticError("inexact division in Z[t]")
        q[dr - dg] = c
        r = _u_sub(r, {e + dr - dg: c * v for e, v in g.items()})
    return q


def _to_rec(p):
    """QTPoly -> {deg_q: {deg_t: int}}."""
    r = {}
    for (dq, dt), v in p._c.items():
        r.setdefault(dq, {})[dt] = v
    return r

def _from_rec(r):
    c = {}
    for dq, f in r.items():
        for dt, v in f.items():
            if v:
                c[(dq, dt)] = v
    return QTPoly._raw(c)

def _r_deg(r):
    return max(r, default=-1)

def _r_scale(r, f):
    """Multiply every q-coefficient by f in Z[t]."""
    return {dq: _u_mul(c, f) for dq, c in r.items()}

def _r_sub(a, b):
    c = {dq: dict(f) for dq, f in a.items()}
    for dq, f in b.items():
        g = _u_sub(c.get(dq, {}), f)
        if g:
            c[dq] = g
        elif dq in c:
            del c[dq]
    return c

def _r_prem(a, b):
    """Pseudo-remainder of a by b, both in (Z[t])[q]."""
    db = _r_deg(b)
    lb = b[db]
    r = a
    while r and _r_deg(r) >= db:
        dr = _r_deg(r)
        lr = r[dr]
        shifted = {dq + dr - db: _u_mul(f, lr) for dq, f in b.items()}
        r = _r_sub(_r_scale(r, lb), shifted)
    return r

def _r_content(r):
    """Content in Z[t] of an element of (Z[t])[q]."""
    cont = {}
    for f in r.values():
        cont = _u_gcd(cont, f)
        if cont == {0: 1}:
            break
    return cont

def _r_divcoeffs(r, g):
    """Divide every q-coefficient exactly by g in Z[t]."""
    if g == {0: 1}:
        return r
    return {dq: _u_divexact(f, g) for dq, f in r.items()}


def qt_gcd(a: QTPoly, b: QTPoly) -> QTPoly:
    """A gcd of a and b in Z[q,t], normalized to a positive graded-lex
    leading coefficient.  gcd(0, 0) = 0."""
    if not a:
        return _normalize_sign(b)
    if not b:
        return _normalize_sign(a)
    # pull out the monomial content first; it is common and cheap
    aq, at = a.min_degrees()
    bq, bt = b.min_degrees()
    mq, mt = min(aq, bq), min(at, bt)
    ia, ib = a.int_content(), b.int_content()
    if a.is_monomial() or b.is_monomial():
        return QTPoly.monomial(math.gcd(ia, ib), min(aq, bq), min(at, bt))
    if a._c == b._c or a._c == {e: -v for e, v in b._c.items()}:
        return _normalize_sign(a)
    ra = _r_divcoeffs(_to_rec(a), {0: abs(ia)} if abs(ia) != 1 else {0: 1})
    rb = _r_divcoeffs(_to_rec(b), {0: abs(ib)} if abs(ib) != 1 else {0: 1})
    ca, cb = _r_content(ra), _r_content(rb)
    pa, pb = _r_divcoeffs(ra, ca), _r_divcoeffs(rb, cb)
    if _r_deg(pa) < _r_deg(pb):
        pa, pb = pb, pa
    while pb:
        rem = _r_prem(pa, pb)
        pa, pb = pb, _prim_rec(rem)
    g = _from_rec(_r_scale(_prim_rec(pa), _u_gcd(ca, cb)))
    g = g * math.gcd(ia, ib)
    return _normalize_sign(g)

def _prim_rec(r):
    if not r:
        return r
    return _r_divcoeffs(r, _r_content(r))

def _normalize_sign(p):
    if p and p.leading()[1] < 0:
        return -p
    return p


def divexact(a: QTPoly, b: QTPoly):
    """Exact quotient a/b in Z[q,t], or None when b does not divide a."""
    if not b:
        return None
    if not a:
        return P_ZERO
    if b.is_one():
        return a
    q = {}
    r = dict(a._c)
    (beq, bet), bc = b.leading()
    while r:
        e = max(r, key=_glex_key)
        dq, dt = e[0] - beq, e[1] - bet
        if dq < 0 or dt < 0:
            return None
        c, rem = divmod(r[e], bc)
        if rem:
            return None
        q[(dq, dt)] = c
        for (eq, et), v in b._c.items():
            k = (eq + dq, et + dt)
            w = r.get(k, 0) - c * v
            if w:
                r[k] = w
            elif k in r:
                del r[k]
    return QTPoly._raw(q)


class QTRational:
    """Element of Q(q,t) in canonical form: num/den coprime, den with a
    positive graded-lex leading coefficient, zero represented as 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = QTPoly.const(num)
        if den is None:
            den = P_ONE
        elif isinstance(den, int):
            den = QTPoly.const(den)
        if not den:
            raise ZeroDivisionError("QTRational with zero denominator")
        if not num:
            self.num, self.den = P_ZERO, P_ONE
            return
        if not den.is_one():
            g = qt_gcd(num, den)
            if not g.is_one():
                num = divexact(num, g)
                den = divexact(den, g)
            if den.leading()[1] < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num, den):
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        return cls._reduced(QTPoly.const(f.numerator), QTPoly.const(f.denominator))

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.den.is_one() and self.num == other
        if not isinstance(other, QTRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return QTRational._reduced(-self.num, self.den)

    def __add__(self, other):
        if isinstance(other, int):
            other = QTRational(other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a:
            return other
        if not c:
            return self
        if b.is_one() and d.is_one():
            return QTRational._reduced(a + c, P_ONE)
        if b == d:
            return QTRational(a + c, b)
        g = qt_gcd(b, d)
        if g.is_one():
            num = a * d + c * b
            if not num:
                return R_ZERO
            return QTRational._reduced(num, b * d)
        b1 = divexact(b, g)
        d1 = divexact(d, g)
        num = a * d1 + c * b1
        if not num:
            return R_ZERO
        g2 = qt_gcd(num, g)
        if g2.is_one():
            den = b1 * d
        else:
            num = divexact(num, g2)
            den = b1 * divexact(d, g2)
        if den.leading()[1] < 0:
            num, den = -num, -den
        return QTRational._reduced(num, den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = QTRational(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = QTRational(other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a or not c:
            return R_ZERO
        if b.is_one() and d.is_one():
            return QTRational._reduced(a * c, P_ONE)
        g1 = qt_gcd(a, d) if not d.is_one() else P_ONE
        g2 = qt_gcd(c, b) if not b.is_one() else P_ONE
        if not g1.is_one():
            a = divexact(a, g1)
            d = divexact(d, g1)
        if not g2.is_one():
            c = divexact(c, g2)
            b = divexact(b, g2)
        num, den = a * c, b * d
        if den.leading()[1] < 0:
            num, den = -num, -den
        return QTRational._reduced(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = QTRational(other)
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(q,t)")
        return self * QTRational._reduced(other.den, other.num)._canon_sign()

    def _canon_sign(self):
        if self.den.leading()[1] < 0:
            return QTRational._reduced(-self.num, -self.den)
        return self

    def __rtruediv__(self, other):
        return QTRational(other) / self

    def __pow__(self, n):
        if n == 0:
            return R_ONE
        if n < 0:
            return (R_ONE / self) ** (-n)
        return QTRational._reduced(self.num**n, self.den**n)._canon_sign()

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "QTRational(%s)" % str(self)

    def to_json(self):
        return {"num": self.num.to_triples(), "den": self.den.to_triples()}

    @classmethod
    def from_json(cls, d):
        return cls(QTPoly.from_triples(d["num"]), QTPoly.from_triples(d["den"]))


R_ZERO = QTRational._reduced(P_ZERO, P_ONE)
R_ONE = QTRational._reduced(P_ONE, P_ONE)
R_Q = QTRational._reduced(P_Q, P_ONE)
R_T = QTRational._reduced(P_T, P_ONE)


def qpow(n: int) -> QTRational:
    """q^n for any integer n."""
    if n >= 0:
        return QTRational._reduced(QTPoly.monomial(1, n, 0), P_ONE)
    return QTRational._reduced(P_ONE, QTPoly.monomial(1, -n, 0))


def tpow(n: int) -> QTRational:
    """t^n for any integer n."""
    if n >= 0:
        return QTRational._reduced(QTPoly.monomial(1, 0, n), P_ONE)
    return QTRational._reduced(P_ONE, QTPoly.monomial(1, 0, -n))


def qt_monomial(coeff: int = 1, dq: int = 0, dt: int = 0) -> QTRational:
    return QTRational(QTPoly.monomial(coeff, dq, dt))


def qt_arith(a: QTRational, b: QTRational, op: str) -> QTRational:
    """Dispatch arithmetic in Q(q,t); op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown op %r" % op)


def as_integer_poly(a: QTRational):
    """The underlying Z[q,t] element when a is polynomial, else None.

    Canonical form does the work: a is a polynomial with integer
    coefficients exactly when its reduced denominator is 1.
    """
    if a.den.is_one():
        return a.num
    return None


def qt_eval(a: QTRational, q0, t0) -> Fraction:
    """Exact value of a at q=q0, t=t0; raises ZeroDivisionError when the
    canonical denominator vanishes there."""
    d = a.den.evaluate(q0, t0)
    if d == 0:
        raise ZeroDivisionError("denominator vanishes at (%s, %s)" % (q0, t0))
    return a.num.evaluate(q0, t0) / d
