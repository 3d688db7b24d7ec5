"""Exact arithmetic primitives: prime-field residues, p-adic valuation of
integers and sparse multivariate polynomials over the integers.

Rationals are plain :class:`fractions.Fraction` objects, which are always
kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .errors import InputError

__all__ = [
    "ArithmeticInputError",
    "FpElement",
    "Fraction",
    "IntPolynomial",
    "check_prime",
    "is_prime",
    "vp_int",
]

MAX_PRIME = 1 << 16


class ArithmeticInputError(InputError):
    """Raised on invalid arithmetic input (zero division, modulus mismatch)."""


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    """Validate ``p`` as a supported prime and return it."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ArithmeticInputError(f"p must be an integer, got {p!r}")
    if not is_prime(p):
        raise ArithmeticInputError(f"{p} is not prime")
    if p >= MAX_PRIME:
        raise ArithmeticInputError(f"prime {p} exceeds supported bound {MAX_PRIME}")
    return p


def vp_int(m: int, p: int) -> int:
    """Return the exponent of the largest power of ``p`` dividing ``m``."""
    if m == 0:
        raise ArithmeticInputError("p-adic valuation of 0 is infinite")
    m = abs(m)
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


class FpElement:
    """A residue class modulo the prime ``p``."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.modulus = modulus
        self.value = value % modulus

    def _coerce(self, other) -> "FpElement":
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ArithmeticInputError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other
        if isinstance(other, int):
            return FpElement(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.modulus)

    def inv(self) -> "FpElement":
        if self.value == 0:
            raise ArithmeticInputError("inverse of zero")
        return FpElement(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return FpElement(pow(self.value, n, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def signed(self) -> int:
        """Representative in (-p/2, p/2], e.g. 3 mod 5 -> -2."""
        v = self.value
        return v - self.modulus if self.modulus - v < v else v

    def __repr__(self):
        return f"FpElement({self.value}, {self.modulus})"


Exponent = Tuple[int, ...]


class IntPolynomial:
    """Sparse polynomial with integer coefficients in ``nvars`` variables.

    Terms are stored as ``{exponent tuple: coefficient}`` with no zero
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        clean: Dict[Exponent, int] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars or any(k < 0 for k in e):
                    raise ArithmeticInputError(f"bad exponent vector {e}")
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c: int) -> "IntPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "IntPolynomial":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def _check(self, other: "IntPolynomial"):
        if other.nvars != self.nvars:
            raise ArithmeticInputError("variable count mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return IntPolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPolynomial(self.nvars)
            return IntPolynomial._raw(
                self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: Dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return IntPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ArithmeticInputError("negative polynomial power")
        result = IntPolynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, d: int) -> "IntPolynomial":
        """Divide every coefficient by ``d``; raise if any division is inexact."""
        out = {}
        for e, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                raise ArithmeticInputError(
                    f"coefficient {c} of {e} not divisible by {d}")
            out[e] = q
        return IntPolynomial._raw(self.nvars, out)

    def substitute(self, values: Mapping[int, "IntPolynomial | int"]) -> "IntPolynomial":
        """Replace variable ``i`` by ``values[i]`` (an int or polynomial)."""
        result = IntPolynomial(self.nvars)
        powers: Dict[Tuple[int, int], IntPolynomial] = {}
        for e, c in self.terms.items():
            term = IntPolynomial._raw(self.nvars, {
                tuple(0 if i in values else k for i, k in enumerate(e)): c})
            for i, k in enumerate(e):
                if k and i in values:
                    v = values[i]
                    if isinstance(v, int):
                        term = term * (v ** k)
                    else:
                        if (i, k) not in powers:
                            powers[(i, k)] = v ** k
                        term = term * powers[(i, k)]
            result = result + term
        return result

    def swap_blocks(self, n: int) -> "IntPolynomial":
        """Exchange variables ``0..n-1`` with ``n..2n-1``."""
        if self.nvars != 2 * n:
            raise ArithmeticInputError("swap_blocks needs 2n variables")
        return IntPolynomial._raw(
            self.nvars, {e[n:] + e[:n]: c for e, c in self.terms.items()})

    def reduce_mod(self, p: int) -> "IntPolynomial":
        return IntPolynomial(self.nvars, {e: c % p for e, c in self.terms.items()})

    def variables_used(self) -> set:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficients(self) -> Iterator[int]:
        return iter(self.terms.values())

    def items(self) -> Iterable[Tuple[Exponent, int]]:
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(self.nvars, other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def format(self, names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), [-k for k in t[0]])):
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"IntPolynomial({self.nvars}, {len(self.terms)} terms)"

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, int]) -> "IntPolynomial":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj
