"""Dense univariate polynomials over the integers.

Coefficients are Python ints stored lowest degree first, so every value is
exact no matter how large the counts get.  Large products go through
Kronecker substitution (pack into one big integer, multiply, unpack), and
the gcd uses the heuristic evaluation method backed by GMP, which keeps
squarefree decomposition of high powers such as ``f**200`` cheap.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import gmpy2

from .errors import UndefinedDegreeError

__all__ = [
    "Polynomial",
    "add",
    "sub",
    "mul",
    "pow",
    "eval_int",
    "min_degree",
    "gcd",
    "exact_div",
    "squarefree_decomposition",
]

# below this length schoolbook multiplication beats packing overhead
_KRONECKER_MIN_LEN = 16


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class Polynomial:
    """Immutable integer polynomial; ``coeffs[i]`` is the coefficient of x**i.

    The zero polynomial has an empty coefficient tuple and degree -1.

    >>> p = Polynomial([0, 2, 1])
    >>> p * p
    Polynomial([0, 0, 4, 4, 1])
    >>> p(-1)
    -1
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        self._coeffs = _trim(cs)

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw((1,))

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "Polynomial":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * degree + [coeff])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls._raw((0, 1))

    @classmethod
    def one_plus_x_pow(cls, e: int) -> "Polynomial":
        """(1 + x)**e built directly from binomial coefficients."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        row = [1]
        c = 1
        for i in range(e):
            c = c * (e - i) // (i + 1)
            row.append(c)
        return cls._raw(tuple(row))

    # -- basic queries -------------------------------------------------

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def min_degree(self) -> int:
        """Smallest exponent with a nonzero coefficient."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        raise UndefinedDegreeError("min_degree of the zero polynomial is undefined")

    def max_norm(self) -> int:
        return max((abs(c) for c in self._coeffs), default=0)

    def content(self) -> int:
        g = 0
        for c in self._coeffs:
            g = gmpy2.gcd(g, c)
            if g == 1:
                break
        return int(g)

    def primitive_part(self) -> "Polynomial":
        """Divide out the content and make the leading coefficient positive."""
        if not self._coeffs:
            return self
        c = self.content()
        if self._coeffs[-1] < 0:
            c = -c
        if c == 1:
            return self
        return Polynomial._raw(tuple(a // c for a in self._coeffs))

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative exponent")
        return self._coeffs[i] if i < len(self._coeffs) else 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial([other])
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self._coeffs, q._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return Polynomial._raw(_mul_coeffs(self._coeffs, q._coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = Polynomial.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift_down(self, m: int) -> "Polynomial":
        """Divide by x**m; the low m coefficients must be zero."""
        if any(self._coeffs[:m]):
            raise ValueError(f"polynomial is not divisible by x^{m}")
        return Polynomial._raw(self._coeffs[m:])

    def derivative(self) -> "Polynomial":
        return Polynomial._raw(_trim([i * c for i, c in enumerate(self._coeffs)][1:]))

    def __call__(self, t):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    # -- serialization -------------------------------------------------

    def to_json(self) -> str:
        """``{"coeffs":["0","2","1"]}``: decimal strings, lowest degree first."""
        return json.dumps({"coeffs": [str(c) for c in self._coeffs]}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        data = json.loads(text)
        return cls(int(c) for c in data["coeffs"])


# -- packing helpers for Kronecker substitution ------------------------


def _slot_bytes(bound: int) -> int:
    """Bytes per slot so that every |c| <= bound fits in signed form."""
    return (bound.bit_length() + 2 + 7) // 8


def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    bias = 1 << (8 * nbytes - 1)
    buf = b"".join((c + bias).to_bytes(nbytes, "little") for c in coeffs)
    offset = int.from_bytes(bias.to_bytes(nbytes, "little") * len(coeffs), "little")
    return int.from_bytes(buf, "little") - offset


def _unpack(value: int, nbytes: int, count: int) -> list[int]:
    bias = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(bias.to_bytes(nbytes, "little") * count, "little")
    buf = (value + offset).to_bytes(nbytes * count, "little")
    return [
        int.from_bytes(buf[i * nbytes:(i + 1) * nbytes], "little") - bias
        for i in range(count)
    ]


def _mul_coeffs(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    if min(len(a), len(b)) < _KRONECKER_MIN_LEN:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return _trim(out)
    bound = min(len(a), len(b)) * max(map(abs, a)) * max(map(abs, b))
    nbytes = _slot_bytes(bound)
    prod = _pack(a, nbytes) * _pack(b, nbytes)
    return _trim(_unpack(prod, nbytes, len(a) + len(b) - 1))


# -- division, gcd, squarefree decomposition ---------------------------


def _divmod_exact(f: tuple[int, ...], g: tuple[int, ...]):
    """Integer long division; returns the quotient or None if g does not divide f."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f) < len(g):
        return () if not f else None
    rem = list(f)
    lc = g[-1]
    dg = len(g) - 1
    quot = [0] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q, r = divmod(c, lc)
        if r:
            return None
        quot[i - dg] = q
        base = i - dg
        for j in range(dg + 1):
            rem[base + j] -= q * g[j]
    if any(rem[:dg]):
        return None
    return _trim(quot)


def exact_div(p: Polynomial, q: Polynomial) -> Polynomial:
    """Quotient p / q, raising ValueError unless the division is exact over Z."""
    out = _divmod_exact(p.coeffs, q.coeffs)
    if out is None:
        raise ValueError("division is not exact")
    return Polynomial._raw(out)


def _prs_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    # primitive remainder sequence; only reached when the heuristic gives up
    a, b = f.primitive_part(), g.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        da, db = a.degree, b.degree
        scale = b.leading_coefficient() ** (da - db + 1)
        rem = list((a * scale).coeffs)
        bl = b.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c // bl[-1]
            for j in range(db + 1):
                rem[i - db + j] -= q * bl[j]
        r = Polynomial(rem[:db]).primitive_part()
        a, b = b, r
    return a.primitive_part()


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Greatest common divisor over Z, primitive with positive leading coefficient.

    Tries the heuristic method: evaluate at a large power of two, take the
    integer gcd, read the answer back off its signed base-2**s digits and
    confirm it divides both inputs.  Falls back to a primitive remainder
    sequence after a few unlucky evaluation points.
    """
    if not f:
        return g.primitive_part()
    if not g:
        return f.primitive_part()
    if f.degree == 0 or g.degree == 0:
        return Polynomial.one()
    fp, gp = f.primitive_part(), g.primitive_part()
    # the evaluation point must exceed 2*min norm + 2; packing also needs
    # every coefficient of both inputs to fit a slot, hence the max
    bound = 2 * max(fp.max_norm(), gp.max_norm()) + 29
    nbytes = _slot_bytes(bound)
    for _ in range(6):
        fx = gmpy2.mpz(_pack(fp.coeffs, nbytes))
        gx = gmpy2.mpz(_pack(gp.coeffs, nbytes))
        h = int(gmpy2.gcd(fx, gx))
        count = h.bit_length() // (8 * nbytes) + 2
        cand = Polynomial(_unpack(h, nbytes, count)).primitive_part()
        if cand and _divmod_exact(fp.coeffs, cand.coeffs) is not None \
                and _divmod_exact(gp.coeffs, cand.coeffs) is not None:
            return cand
        nbytes += nbytes // 2 + 1
    return _prs_gcd(fp, gp)


def squarefree_decomposition(p: Polynomial) -> tuple[int, list[tuple[Polynomial, int]]]:
    """Yun's algorithm.

    Returns ``(unit, [(f1, 1), (f2, 2), ...])`` with ``p == unit * prod(fi**i)``,
    each ``fi`` primitive, squarefree, pairwise coprime and of positive
    degree.  Multiplicities with a trivial factor are omitted.
    """
    if not p:
        raise UndefinedDegreeError("squarefree decomposition of the zero polynomial")
    if p.degree == 0:
        return p.coeffs[0], []
    prim = p.primitive_part()
    unit = p.leading_coefficient() // prim.leading_coefficient()
    dp = prim.derivative()
    a0 = gcd(prim, dp)
    b = exact_div(prim, a0)
    c = exact_div(dp, a0)
    d = c - b.derivative()
    factors = []
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.derivative()
        if a.degree > 0:
            factors.append((a, i))
        i += 1
    return unit, factors


# -- functional spellings of the core operations -----------------------


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return p - q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def pow(p: Polynomial, e: int) -> Polynomial:  # noqa: A001 - mirrors the ring operation name
    return p ** e


def eval_int(p: Polynomial, t: int) -> int:
    """Exact value p(t) at an integer point."""
    if not isinstance(t, int):
        raise TypeError("eval_int takes an integer point")
    return p(t)


def min_degree(p: Polynomial) -> int:
    return p.min_degree()
