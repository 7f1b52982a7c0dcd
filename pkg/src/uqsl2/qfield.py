"""Exact arithmetic in the rational function field Q(q).

Scalars for everything in this package live in Q(q), the field of rational
functions in a single indeterminate q over the rationals.  We represent an
element as a reduced fraction of two Laurent polynomials in q with integer
coefficients.  Arithmetic is exact: coefficients are arbitrary-precision
integers and every result is brought to a canonical form, so `==` on values
means equality in Q(q) and nothing weaker.

Canonical form of a fraction num/den:

  * den is not zero and num is the zero polynomial only for the zero element
    (then den is 1);
  * the minimal q-exponent of den is 0 (any overall power of q is carried by
    num), and den's lowest coefficient is positive;
  * num and den have no common polynomial factor over Q[q] once the overall
    power of q is set aside;
  * the integer content across num and den jointly is 1 (no common integer
    factor can be cancelled between them).

Two fractions are equal in Q(q) iff their canonical forms are identical,
which is what makes hashing and exact comparison cheap.

The q-integers [n] = (q^n - q^-n)/(q - q^-1) and q-factorials are provided
here because every structure constant downstream is built from them.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Union


class DivisionByZero(ZeroDivisionError):
    """Division of a field element by the zero element."""


class ForbiddenSpecialization(ValueError):
    """Numeric evaluation at q in {0, 1, -1}, where the theory degenerates."""


class PoleAtPoint(ZeroDivisionError):
    """Numeric evaluation at a point where the denominator vanishes."""


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

TermsLike = Union[dict, Iterable[tuple[int, int]]]


class LaurentPoly:
    """An integer-coefficient Laurent polynomial in q, kept in canonical form.

    Canonical form: terms are stored sorted by increasing exponent and no
    zero coefficients are kept, so structural equality is value equality.
    Instances are immutable; all operators return new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsLike = ()):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                nc = acc.get(e, 0) + c
                if nc:
                    acc[e] = nc
                elif e in acc:
                    del acc[e]
        object.__setattr__(self, "_terms", tuple(sorted(acc.items())))

    @classmethod
    def _from_sorted(cls, terms: tuple[tuple[int, int], ...]) -> "LaurentPoly":
        # Trusted constructor: terms already sorted, deduplicated, zero-free.
        self = object.__new__(cls)
        object.__setattr__(self, "_terms", terms)
        return self

    @classmethod
    def q_power(cls, e: int, c: int = 1) -> "LaurentPoly":
        """The monomial c*q^e."""
        if c == 0:
            return LP_ZERO
        return cls._from_sorted(((e, c),))

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """Sorted (exponent, coefficient) pairs; coefficients are nonzero."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == ((0, 1),)

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    def single_term(self) -> tuple[int, int] | None:
        """(exponent, coefficient) if this is a monomial, else None."""
        if len(self._terms) == 1:
            return self._terms[0]
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for e, c in other._terms:
            nc = acc.get(e, 0) + c
            if nc:
                acc[e] = nc
            elif e in acc:
                del acc[e]
        return LaurentPoly._from_sorted(tuple(sorted(acc.items())))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_sorted(tuple((e, -c) for e, c in self._terms))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return LP_ZERO
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        acc: dict[int, int] = {}
        for e1, c1 in a:
            for e2, c2 in b:
                e = e1 + e2
                nc = acc.get(e, 0) + c1 * c2
                if nc:
                    acc[e] = nc
                elif e in acc:
                    del acc[e]
        return LaurentPoly._from_sorted(tuple(sorted(acc.items())))

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("LaurentPoly supports nonnegative powers only")
        result = LP_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LP_ZERO
        return LaurentPoly._from_sorted(tuple((e, c * x) for e, x in self._terms))

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by q^d."""
        if d == 0:
            return self
        return LaurentPoly._from_sorted(tuple((e + d, c) for e, c in self._terms))

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- evaluation and display ---------------------------------------------

    def evaluate(self, q0: Fraction) -> Fraction:
        """Value at a nonzero rational point (exact)."""
        total = Fraction(0)
        for e, c in self._terms:
            total += c * q0 ** e
        return total

    def dense(self) -> tuple[int, list[int]]:
        """(shift, coeffs) with self = q^shift * sum coeffs[i] q^i, coeffs[0] != 0.

        The zero polynomial returns (0, []).
        """
        if not self._terms:
            return 0, []
        lo = self._terms[0][0]
        hi = self._terms[-1][0]
        coeffs = [0] * (hi - lo + 1)
        for e, c in self._terms:
            coeffs[e - lo] = c
        return lo, coeffs

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            parts.append(_term_str(e, c, first=not parts))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._terms)!r})"


def _term_str(e: int, c: int, first: bool) -> str:
    """Render one term c*q^e, with a leading sign separator unless first."""
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if e == 0:
        body = str(mag)
    else:
        qpart = "q" if e == 1 else f"q^{e}"
        body = qpart if mag == 1 else f"{mag}{qpart}"
    if first:
        return body if c > 0 else "-" + body
    return f" {sign} {body}"


LP_ZERO = LaurentPoly._from_sorted(())
LP_ONE = LaurentPoly._from_sorted(((0, 1),))


# ---------------------------------------------------------------------------
# Dense integer-polynomial helpers for fraction reduction
# ---------------------------------------------------------------------------
#
# These work on dense lists of integer coefficients (index = exponent), with
# a nonzero last entry.  They only serve QRat reduction, which is why they
# live here rather than in a general-purpose polynomial module.


def _content(coeffs: list[int]) -> int:
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    return g or 1


def _primitive(coeffs: list[int]) -> list[int]:
    g = _content(coeffs)
    if g == 1:
        return coeffs
    return [c // g for c in coeffs]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """A pseudo-remainder of a by b: some integer multiple of (a mod b).

    Only used inside the primitive-PRS gcd, where remainders are reduced to
    their primitive parts anyway, so the exact multiplier does not matter.
    """
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db:
        la = a[-1]
        a = [lb * c for c in a]
        off = len(a) - 1 - db
        for i, c in enumerate(b):
            a[off + i] -= la * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return a


def _gcd_dense(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of two dense integer polynomials (primitive PRS)."""
    if not a:
        return _primitive(list(b)) if b else [1]
    if not b:
        return _primitive(list(a))
    a = _primitive(list(a))
    b = _primitive(list(b))
    if len(a) < len(b):
        a, b = b, a
    while True:
        if len(b) == 1:
            return [1]
        r = _prem(a, b)
        if not r:
            return b if b[-1] > 0 else [-c for c in b]
        a, b = b, _primitive(r)


def _div_exact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient a/b of dense integer polynomials (b must divide a)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    out = [0] * (len(a) - db)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + db]
        if c == 0:
            continue
        qc, rem = divmod(c, lb)
        if rem:
            raise ArithmeticError("inexact polynomial division during reduction")
        out[i] = qc
        for j, bc in enumerate(b):
            a[i + j] -= qc * bc
    if any(a):
        raise ArithmeticError("inexact polynomial division during reduction")
    return out


# ---------------------------------------------------------------------------
# The field Q(q)
# ---------------------------------------------------------------------------


class QRat:
    """An element of Q(q) as a canonical fraction of Laurent polynomials.

    Construct with QRat(num, den) where num/den are LaurentPoly, dict of
    {exponent: coefficient}, or int; the fraction is reduced immediately.
    All arithmetic returns canonical values, so == and hash are exact.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: TermsLike | LaurentPoly | int = 0,
                 den: TermsLike | LaurentPoly | int = 1):
        nump = _as_poly(num)
        denp = _as_poly(den)
        n, d = _reduced(nump, denp)
        object.__setattr__(self, "_num", n)
        object.__setattr__(self, "_den", d)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "QRat":
        # Trusted constructor: (num, den) must already be canonical.
        self = object.__new__(cls)
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", den)
        return self

    # -- inspection ---------------------------------------------------------

    @property
    def num(self) -> LaurentPoly:
        return self._num

    @property
    def den(self) -> LaurentPoly:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_one(self) -> bool:
        return self._num.is_one() and self._den.is_one()

    def __bool__(self) -> bool:
        return not self._num.is_zero()

    # -- field operations ---------------------------------------------------

    def __add__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den.is_one() and other._den.is_one():
            return QRat._raw(self._num + other._num, LP_ONE)
        if self._den == other._den:
            n, d = _reduced(self._num + other._num, self._den)
            return QRat._raw(n, d)
        n, d = _reduced(self._num * other._den + other._num * self._den,
                        self._den * other._den)
        return QRat._raw(n, d)

    __radd__ = __add__

    def __sub__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self) -> "QRat":
        return QRat._raw(-self._num, self._den)

    def __mul__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._num.is_zero() or other._num.is_zero():
            return QR_ZERO
        # Fast path: multiplying by a signed power of q never breaks
        # canonical form, so skip the gcd machinery entirely.
        if other._den.is_one():
            st = other._num.single_term()
            if st is not None and st[1] in (1, -1):
                e, c = st
                num = self._num.shift(e)
                return QRat._raw(num if c == 1 else -num, self._den)
        if self._den.is_one():
            st = self._num.single_term()
            if st is not None and st[1] in (1, -1):
                e, c = st
                num = other._num.shift(e)
                return QRat._raw(num if c == 1 else -num, other._den)
        if self._den.is_one() and other._den.is_one():
            return QRat._raw(self._num * other._num, LP_ONE)
        n, d = _reduced(self._num * other._num, self._den * other._den)
        return QRat._raw(n, d)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other._num.is_zero():
            raise DivisionByZero("division by zero in Q(q)")
        n, d = _reduced(self._num * other._den, self._den * other._num)
        return QRat._raw(n, d)

    def __rtruediv__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self) -> "QRat":
        if self._num.is_zero():
            raise DivisionByZero("inverse of zero in Q(q)")
        n, d = _reduced(self._den, self._num)
        return QRat._raw(n, d)

    def __pow__(self, n: int) -> "QRat":
        if n < 0:
            return self.inverse() ** (-n)
        result = QR_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QRat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    # -- evaluation ---------------------------------------------------------

    def eval_at(self, q0) -> Fraction:
        """Exact value at a rational point q0.

        Raises PoleAtPoint if the (reduced) denominator vanishes at q0, and
        ForbiddenSpecialization at q0 in {0, 1, -1} where the quantum
        parameter degenerates.  A pole is reported in preference to a
        forbidden point when both apply.
        """
        q0 = Fraction(q0)
        # The denominator has minimal exponent 0, so it is evaluable even at
        # q0 = 0; the numerator may not be, but forbidden points are rejected
        # before it is touched.
        den_v = self._den.evaluate(q0)
        if den_v == 0:
            raise PoleAtPoint(f"denominator vanishes at q = {q0}")
        if q0 in (0, 1, -1):
            raise ForbiddenSpecialization(f"evaluation at q = {q0} is not defined")
        return self._num.evaluate(q0) / den_v

    # -- serialization / display --------------------------------------------

    def to_json_obj(self) -> dict:
        """{"num": [[exp, "coeff"], ...], "den": ...} with exponents increasing."""
        return {
            "num": [[e, str(c)] for e, c in self._num.terms],
            "den": [[e, str(c)] for e, c in self._den.terms],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QRat":
        num = LaurentPoly([(int(e), int(c)) for e, c in obj["num"]])
        den = LaurentPoly([(int(e), int(c)) for e, c in obj["den"]])
        return cls(num, den)

    def __str__(self) -> str:
        if self._den.is_one():
            return str(self._num)
        ns = str(self._num)
        if len(self._num.terms) > 1:
            ns = f"({ns})"
        ds = str(self._den)
        if len(self._den.terms) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"QRat({str(self)!r})"


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.q_power(0, x) if x else LP_ZERO
    return LaurentPoly(x)


def _coerce(x) -> "QRat":
    if isinstance(x, QRat):
        return x
    if isinstance(x, int):
        return QRat._raw(_as_poly(x), LP_ONE)
    return NotImplemented


def _reduced(nump: LaurentPoly, denp: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Bring num/den to the canonical form described in the module docstring."""
    if denp.is_zero():
        raise DivisionByZero("zero denominator in Q(q)")
    if nump.is_zero():
        return LP_ZERO, LP_ONE
    # Fast path: denominator is a signed integer times a power of q.
    st = denp.single_term()
    if st is not None:
        e, c = st
        num = nump.shift(-e)
        if c < 0:
            num, c = -num, -c
        if c == 1:
            return num, LP_ONE
        g = math.gcd(_content([x for _, x in num.terms]), c)
        if g > 1:
            num = LaurentPoly._from_sorted(tuple((ex, cx // g) for ex, cx in num.terms))
            c //= g
        if c == 1:
            return num, LP_ONE
        return num, LaurentPoly.q_power(0, c)
    sn, nd = nump.dense()
    sd, dd = denp.dense()
    shift = sn - sd
    cn = _content(nd)
    cd = _content(dd)
    n1 = [c // cn for c in nd]
    d1 = [c // cd for c in dd]
    g = _gcd_dense(n1, d1)
    if len(g) > 1 or g[0] != 1:
        n1 = _div_exact(n1, g)
        d1 = _div_exact(d1, g)
    fr = Fraction(cn, cd)
    cn, cd = fr.numerator, fr.denominator
    if d1[0] < 0:
        n1 = [-c for c in n1]
        d1 = [-c for c in d1]
    num = LaurentPoly._from_sorted(
        tuple((shift + i, cn * c) for i, c in enumerate(n1) if c))
    den = LaurentPoly._from_sorted(
        tuple((i, cd * c) for i, c in enumerate(d1) if c))
    return num, den


QR_ZERO = QRat._raw(LP_ZERO, LP_ONE)
QR_ONE = QRat._raw(LP_ONE, LP_ONE)


def q_power(e: int) -> QRat:
    """The element q^e."""
    return QRat._raw(LaurentPoly.q_power(e), LP_ONE)


def laurent(terms: TermsLike) -> QRat:
    """A Laurent polynomial as a field element, e.g. laurent({1: 1, -1: -1})."""
    return QRat(_as_poly(terms))


def integer(n: int) -> QRat:
    """The integer n as a field element."""
    return QRat._raw(_as_poly(n), LP_ONE)


Q = q_power(1)
QINV = q_power(-1)


def qint(n: int) -> QRat:
    """The balanced q-integer [n] = (q^n - q^-n)/(q - q^-1).

    [n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [0] = 0 and [-n] = -[n].
    The result always has denominator 1.
    """
    if n < 0:
        return -qint(-n)
    return QRat._raw(
        LaurentPoly._from_sorted(tuple((1 - n + 2 * i, 1) for i in range(n))),
        LP_ONE)


def qfactorial(n: int) -> QRat:
    """[n]! = [1][2]...[n], with [0]! = 1."""
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    out = QR_ONE
    for k in range(2, n + 1):
        out = out * qint(k)
    return out


def iter_terms(x: QRat) -> Iterator[tuple[int, int]]:
    """Numerator terms of x as (exponent, coefficient) pairs (debug helper)."""
    return iter(x.num.terms)
