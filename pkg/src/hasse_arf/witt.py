"""Witt vector addition and the Artin-Schreier-Witt towers it generates.

The addition polynomials ``S_0, ..., S_{n-1}`` are found from the ghost
components ``W_i(Z) = sum_{j<=i} p^j Z_j^(p^(i-j))`` by solving
``W_i(S) = W_i(X) + W_i(Y)`` one index at a time.  Each step divides by
``p^i``; the division is checked to be exact, which is the integrality
certificate of the system.

A Witt vector ``a = (a_0, ..., a_{n-1})`` over F_p((x)) gives the cyclic
extension ``Frob(f) = f +' a``, i.e. ``f_i^p = S_{i-1}(f, a)``.  A generator
of its Galois group acts by ``f -> f +' (1, 0, ..., 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from .core_arith import ArithmeticInputError, IntPolynomial, check_prime
from .errors import InputError, InvariantError
from .tower import Tower, TowerElement, TowerError

MAX_LENGTH = 4


@dataclass(frozen=True)
class WittSystem:
    p: int
    length: int
    addition_polys: Tuple[IntPolynomial, ...]

    @property
    def nvars(self) -> int:
        return 2 * self.length

    def variable_names(self) -> List[str]:
        n = self.length
        return [f"X{i}" for i in range(n)] + [f"Y{i}" for i in range(n)]

    def add(self, u: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
        """Witt sum of two vectors with integer entries, reduced mod ``p``."""
        vals = dict(enumerate(list(u) + list(v)))
        out = []
        for S in self.addition_polys:
            total = 0
            for e, c in S.items():
                term = c
                for i, k in enumerate(e):
                    if k:
                        term *= pow(vals[i], k, self.p)
                total += term
            out.append(total % self.p)
        return tuple(out)

    def integer_vector(self, k: int) -> Tuple[int, ...]:
        """The image of the integer ``k >= 0`` in W_n(F_p): ``(1,0,..,0)`` added ``k`` times."""
        if k < 0:
            raise InputError("only nonnegative multiples are supported")
        one = (1,) + (0,) * (self.length - 1)
        acc = (0,) * self.length
        for _ in range(k):
            acc = self.add(acc, one)
        return acc


def ghost_component(p: int, n: int, i: int, block: int) -> IntPolynomial:
    """``W_i`` in the variables of ``block`` (0 for X, 1 for Y) of a 2n-variable ring."""
    out = IntPolynomial(2 * n)
    for j in range(i + 1):
        var = IntPolynomial.variable(2 * n, block * n + j)
        out = out + (var ** (p ** (i - j))) * (p ** j)
    return out


@lru_cache(maxsize=None)
def witt_addition_polynomials(p: int, n: int) -> WittSystem:
    check_prime(p)
    if not 1 <= n <= MAX_LENGTH:
        raise InputError(f"Witt length must be in 1..{MAX_LENGTH}, got {n}")
    polys: List[IntPolynomial] = []
    for i in range(n):
        rhs = ghost_component(p, n, i, 0) + ghost_component(p, n, i, 1)
        for j, S in enumerate(polys):
            rhs = rhs - (S ** (p ** (i - j))) * (p ** j)
        try:
            polys.append(rhs.exact_div(p ** i))
        except ArithmeticInputError as exc:
            raise InvariantError(f"Witt polynomial S_{i} is not integral: {exc}") from exc
    return WittSystem(p, n, tuple(polys))


ElementLike = Union[str, TowerElement]


@dataclass(frozen=True)
class WittTower:
    """A tower built from a Witt vector, with the data needed for its Galois action."""

    tower: Tower
    vector: Tuple[TowerElement, ...]
    system: WittSystem
    raw_equations: Tuple[TowerElement, ...] = field(default=())

    @property
    def p(self) -> int:
        return self.tower.p


def _coerce_vector(p: int, vector: Sequence[ElementLike]) -> Tuple[TowerElement, ...]:
    from .parsing import parse_expression

    base = Tower(p)
    out = []
    for a in vector:
        if isinstance(a, str):
            a = parse_expression(a, p, base)
        if not isinstance(a, TowerElement) or a.tower.p != p:
            raise InputError(f"Witt component {a!r} is not an element over F_{p}")
        if a.level != 0 or any(k % a.tower._M for k in a.terms):
            raise InputError("Witt components must lie in the base field F_p((x))")
        out.append(base._wrap(dict(a.terms), 0))
    return tuple(out)


def _check_base_component(a0: TowerElement):
    p = a0.tower.p
    if not a0.terms:
        raise TowerError("base Witt component not ramified (it is zero)")
    v = a0.valuation(0)
    if v >= 0 or v % p == 0:
        raise TowerError(f"base Witt component not ramified (valuation {v})")


def build_witt_tower(p: int, vector: Sequence[ElementLike]) -> WittTower:
    """Build the tower ``Frob(f) = f +' a`` level by level, normalizing as needed."""
    check_prime(p)
    a = _coerce_vector(p, vector)
    n = len(a)
    if not 1 <= n <= MAX_LENGTH:
        raise InputError(f"Witt vector length must be in 1..{MAX_LENGTH}")
    _check_base_component(a[0])
    system = witt_addition_polynomials(p, n)
    tower = Tower(p)
    raw = []
    for i in range(1, n + 1):
        values = _values(tower, i - 1, n, list(a))
        S = system.addition_polys[i - 1] - IntPolynomial.variable(2 * n, i - 1)
        D = tower.evaluate(S, values)
        raw.append(D)
        tower = tower.add_level(D)
    return WittTower(tower, tuple(tower._wrap(dict(x.terms), 0) for x in a), system, tuple(raw))


def _values(tower: Tower, known: int, n: int, second: List) -> List[TowerElement]:
    # X_j -> original f_{j+1} for j < known, the rest never occur in S_{known}
    xs = [tower.original_generator(j + 1) for j in range(known)]
    xs += [tower.zero()] * (n - known)
    ys = [y if isinstance(y, TowerElement) else tower.constant(y) for y in second]
    return xs + ys


def derive_tower_equations(p: int, vector: Sequence[ElementLike]) -> List[TowerElement]:
    """Defining elements ``D_1..D_n`` before normalization, in normal form."""
    return list(build_witt_tower(p, vector).raw_equations)


def shift_images(wt: WittTower, shift: Sequence[int]) -> List[TowerElement]:
    """Images of the normalized generators under ``f -> f +' shift``.

    ``shift`` is a Witt vector over F_p.  For ``f_i = fbar_i + s_i`` the image
    of ``fbar_i`` is ``S_{i-1}(f, shift) - sigma(s_i)``.
    """
    tower, system = wt.tower, wt.system
    n = system.length
    if len(shift) != n:
        raise InputError("shift vector has the wrong length")
    images: List[TowerElement] = []
    for i in range(1, n + 1):
        values = _values(tower, i, n, [int(s) % wt.p for s in shift])
        image = tower.evaluate(system.addition_polys[i - 1], values)
        correction = tower.original_generator(i) - tower.gen(i)
        if correction:
            image = image - tower.substitute(correction, images)
        images.append(image)
    return images


def galois_generator_images(wt: WittTower, power: int = 1) -> List[TowerElement]:
    """Images of ``fbar_1..fbar_n`` under ``sigma^power``, where ``sigma`` adds
    ``(1, 0, ..., 0)``; the power is taken inside W_n(F_p)."""
    if not isinstance(wt, WittTower):
        raise InputError("Galois action is only defined for Witt-generated towers")
    return shift_images(wt, wt.system.integer_vector(power))


def compose_images(tower: Tower, outer: Sequence[TowerElement],
                   inner: Sequence[TowerElement]) -> List[TowerElement]:
    """Images for ``outer o inner`` given the generator images of each map."""
    return [tower.substitute(e, outer) for e in inner]


def identity_images(tower: Tower) -> List[TowerElement]:
    return [tower.gen(j) for j in range(1, tower.height + 1)]
