"""Sparse multivariate polynomials over Q(i) in the parameters a, b, c.

Polynomials are dicts mapping exponent tuples to nonzero coefficients
(Fraction or GaussianRational).  The module-level functions work on raw
dicts; ``MultivarPoly`` is the immutable public wrapper.  Terms are ordered
graded-lexicographically with a > b > c.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from ..errors import DivisionByZero
from .gaussian import GaussianRational

VARS = ("a", "b", "c")
NVARS = len(VARS)
ZERO_EXP = (0,) * NVARS
ONE = {ZERO_EXP: Fraction(1)}


def grlex_key(e):
    return (sum(e), e)


def leading(p):
    m = max(p, key=grlex_key)
    return m, p[m]


def is_const(p) -> bool:
    return not p or (len(p) == 1 and ZERO_EXP in p)


def const(c):
    return {ZERO_EXP: c} if c else {}


def variable(name: str):
    e = [0] * NVARS
    e[VARS.index(name)] = 1
    return {tuple(e): Fraction(1)}


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = dict(p)
    for e, c in q.items():
        v = out.get(e)
        if v is None:
            out[e] = c
        else:
            v = v + c
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def neg(p):
    return {e: -c for e, c in p.items()}


def sub(p, q):
    out = dict(p)
    for e, c in q.items():
        v = out.get(e)
        if v is None:
            out[e] = -c
        else:
            v = v - c
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def scale(p, c):
    if not c:
        return {}
    return {e: v * c for e, v in p.items()}


def mul(p, q):
    if len(p) == 1 and ZERO_EXP in p:
        return scale(q, p[ZERO_EXP])
    if len(q) == 1 and ZERO_EXP in q:
        return scale(p, q[ZERO_EXP])
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            k = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            v = out.get(k)
            v = c1 * c2 if v is None else v + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def power(p, n: int):
    result = ONE
    base = p
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def shift(p, m, sign=1):
    return {tuple(x + sign * y for x, y in zip(e, m)): c for e, c in p.items()}


def min_exps(p):
    it = iter(p)
    m = list(next(it))
    for e in it:
        for i in range(NVARS):
            if e[i] < m[i]:
                m[i] = e[i]
    return tuple(m)


def max_exps(p):
    m = [0] * NVARS
    for e in p:
        for i in range(NVARS):
            if e[i] > m[i]:
                m[i] = e[i]
    return tuple(m)


def monic(p):
    if not p:
        return p
    _, lc = leading(p)
    if lc == 1:
        return p
    inv = 1 / lc
    return {e: c * inv for e, c in p.items()}


def divexact(p, q):
    """Quotient p/q if q divides p exactly, otherwise None."""
    if not q:
        raise DivisionByZero("polynomial division by zero")
    if not p:
        return {}
    if len(q) == 1:
        (m, c), = q.items()
        if any(x < y for x, y in zip(min_exps(p), m)):
            return None
        inv = 1 / c
        return {tuple(x - y for x, y in zip(e, m)): v * inv for e, v in p.items()}
    if any(x < y for x, y in zip(max_exps(p), max_exps(q))):
        return None
    qm, qc = leading(q)
    qinv = 1 / qc
    rest = [(e, v) for e, v in q.items() if e != qm]
    r = dict(p)
    heap = [(-sum(e), tuple(-x for x in e)) for e in r]
    heapq.heapify(heap)
    quo = {}
    while r:
        while True:
            _, ne = heapq.heappop(heap)
            m = tuple(-x for x in ne)
            if m in r:
                break
        d = tuple(x - y for x, y in zip(m, qm))
        if min(d) < 0:
            return None
        coef = r.pop(m) * qinv
        quo[d] = coef
        for e, v in rest:
            k = (e[0] + d[0], e[1] + d[1], e[2] + d[2])
            old = r.get(k)
            nv = -coef * v if old is None else old - coef * v
            if nv:
                if old is None:
                    heapq.heappush(heap, (-sum(k), tuple(-x for x in k)))
                r[k] = nv
            else:
                r.pop(k, None)
    return quo


def used_vars(p):
    return {i for i, x in enumerate(max_exps(p)) if x}


def evaluate(p, values: dict[int, object]):
    """Substitute constants for the variables indexed in ``values``."""
    if not values:
        return dict(p)
    cache: dict[tuple[int, int], object] = {}
    out = {}
    for e, c in p.items():
        coef = c
        ne = list(e)
        for i, v in values.items():
            k = e[i]
            if k:
                pw = cache.get((i, k))
                if pw is None:
                    pw = cache[(i, k)] = v ** k
                coef = coef * pw
                ne[i] = 0
        if coef:
            key = tuple(ne)
            old = out.get(key)
            nv = coef if old is None else old + coef
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


# --- gcd by content and primitive part -------------------------------------

def gcd(p, q):
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    if not p:
        return monic(q)
    if not q:
        return monic(p)
    return monic(_gcd(p, q))


def _gcd(p, q):
    mp, mq = min_exps(p), min_exps(q)
    mono = tuple(min(x, y) for x, y in zip(mp, mq))
    if any(mp):
        p = shift(p, mp, -1)
    if any(mq):
        q = shift(q, mq, -1)
    g = _gcd_free(p, q)
    return shift(g, mono) if any(mono) else g


def _gcd_free(p, q):
    # p, q nonzero and not divisible by any variable
    if is_const(p) or is_const(q):
        return ONE
    if len(p) < len(q):
        p, q = q, p
    if divexact(p, q) is not None:
        return q
    vp, vq = used_vars(p), used_vars(q)
    if vp != vq:
        if vp - vq:
            p = content_wrt(p, vp - vq)
        if vq - vp:
            q = content_wrt(q, vq - vp)
        return _gcd(p, q)
    dp, dq = max_exps(p), max_exps(q)
    v = min(vp, key=lambda i: (max(dp[i], dq[i]), i))
    P, Q = split(p, v), split(q, v)
    cp, cq = _gcd_list(P.values()), _gcd_list(Q.values())
    cont = _gcd(cp, cq)
    if not is_const(cp):
        P = {d: divexact(c, cp) for d, c in P.items()}
    if not is_const(cq):
        Q = {d: divexact(c, cq) for d, c in Q.items()}
    g = _prs(P, Q)
    return mul(cont, join(g, v))


def split(p, v):
    """View p as a polynomial in variable index v: {degree: coefficient}."""
    out: dict[int, dict] = {}
    for e, c in p.items():
        d = e[v]
        if d:
            e = e[:v] + (0,) + e[v + 1:]
        out.setdefault(d, {})[e] = c
    return out


def join(U, v):
    out = {}
    for d, c in U.items():
        for e, x in c.items():
            out[e[:v] + (d,) + e[v + 1:]] = x
    return out


def content_wrt(p, idx):
    groups: dict[tuple, dict] = {}
    for e, c in p.items():
        key = tuple(e[i] if i in idx else 0 for i in range(NVARS))
        rest = tuple(0 if i in idx else e[i] for i in range(NVARS))
        groups.setdefault(key, {})[rest] = c
    return _gcd_list(groups.values())


def _gcd_list(polys):
    polys = sorted(polys, key=len)
    g = monic(polys[0])
    for q in polys[1:]:
        if is_const(g):
            return ONE
        g = monic(_gcd(g, q))
    return ONE if is_const(g) else g


def _primitive(U):
    c = _gcd_list(U.values())
    if not is_const(c):
        U = {d: divexact(x, c) for d, x in U.items()}
    top = U[max(U)]
    _, lc = leading(top)
    if lc != 1:
        inv = 1 / lc
        U = {d: scale(x, inv) for d, x in U.items()}
    return U


def _prem(A, B):
    dB = max(B)
    lcB = B[dB]
    lcB_const = is_const(lcB)
    inv = 1 / lcB[ZERO_EXP] if lcB_const else None
    R = dict(A)
    while R:
        dR = max(R)
        if dR < dB:
            break
        lcR = R[dR]
        s = dR - dB
        if lcB_const:
            factor = scale(lcR, inv)
            newR = dict(R)
        else:
            factor = lcR
            newR = {d: mul(lcB, c) for d, c in R.items()}
        for d, c in B.items():
            k = d + s
            val = sub(newR.get(k, {}), mul(factor, c))
            if val:
                newR[k] = val
            else:
                newR.pop(k, None)
        newR.pop(dR, None)
        R = newR
    return R


def _prs(A, B):
    # A and B arrive primitive
    if max(A) < max(B):
        A, B = B, A
    while True:
        R = _prem(A, B)
        if not R:
            return B
        if max(R) == 0:
            return {0: ONE}
        A, B = B, _primitive(R)


# --- public wrapper --------------------------------------------------------

class MultivarPoly:
    """Immutable polynomial in a, b, c over Q(i)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        self._terms = {tuple(e): c for e, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def var(cls, name: str) -> "MultivarPoly":
        return cls._raw(variable(name))

    @classmethod
    def constant(cls, c) -> "MultivarPoly":
        return cls._raw(const(c))

    @property
    def terms(self):
        return self._terms

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return is_const(self._terms)

    def constant_value(self):
        return self._terms.get(ZERO_EXP, Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def leading_term(self):
        return leading(self._terms)

    def variables(self) -> set[str]:
        return {VARS[i] for i in used_vars(self._terms)} if self._terms else set()

    def __add__(self, other):
        return MultivarPoly._raw(add(self._terms, _poly(other)._terms))

    __radd__ = __add__

    def __sub__(self, other):
        return MultivarPoly._raw(sub(self._terms, _poly(other)._terms))

    def __rsub__(self, other):
        return MultivarPoly._raw(sub(_poly(other)._terms, self._terms))

    def __mul__(self, other):
        return MultivarPoly._raw(mul(self._terms, _poly(other)._terms))

    __rmul__ = __mul__

    def __neg__(self):
        return MultivarPoly._raw(neg(self._terms))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        return MultivarPoly._raw(power(self._terms, n))

    def divexact(self, other) -> "MultivarPoly | None":
        q = divexact(self._terms, _poly(other)._terms)
        return None if q is None else MultivarPoly._raw(q)

    def gcd(self, other) -> "MultivarPoly":
        return MultivarPoly._raw(gcd(self._terms, _poly(other)._terms))

    def monic(self) -> "MultivarPoly":
        return MultivarPoly._raw(monic(self._terms))

    def evaluate(self, bindings: dict):
        vals = {VARS.index(k): v for k, v in bindings.items()}
        return MultivarPoly._raw(evaluate(self._terms, vals))

    def __eq__(self, other):
        if isinstance(other, MultivarPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self._terms == const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        from .parse import format_poly
        return f"MultivarPoly({format_poly(self._terms)!r})"


def _poly(x) -> MultivarPoly:
    if isinstance(x, MultivarPoly):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return MultivarPoly._raw(const(Fraction(x) if isinstance(x, int) else x))
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")
