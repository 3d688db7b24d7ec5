"""Ramification jumps, the Herbrand function and the Hasse-Arf criterion.

Conventions: ``i_G(sigma) = v_F((sigma(pi) - pi) / pi)``, so
``G_i = {sigma : i_G(sigma) >= i}``.  This is one less than the ``i_G`` of
Serre's *Local Fields*.  The group is the wild part only: ``G = G_0 = G_1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import InputError, InvariantError
from .tower import INFINITY, Tower, TowerElement, TowerError
from .witt import WittTower, galois_generator_images, identity_images


@dataclass(frozen=True)
class JumpData:
    p: int
    multiplicities: Tuple[int, ...]
    lower_jumps: Tuple[int, ...]

    def __post_init__(self):
        if len(self.multiplicities) != len(self.lower_jumps):
            raise InputError("one multiplicity per jump is required")
        if not self.lower_jumps:
            raise InputError("at least one jump is required")
        if any(n < 1 for n in self.multiplicities):
            raise InputError("multiplicities must be >= 1")
        prev = 0
        for b in self.lower_jumps:
            if b <= prev:
                raise InputError(f"lower jumps must be positive and strictly increasing: {self.lower_jumps}")
            if b % self.p == 0:
                raise InputError(f"jump {b} is divisible by p = {self.p}")
            prev = b

    @classmethod
    def from_tower(cls, tower: Tower) -> "JumpData":
        return cls(tower.p, (1,) * tower.height, tower.jumps)

    @property
    def height(self) -> int:
        return len(self.lower_jumps)

    def index_exponent(self, i: int) -> int:
        """``n_1 + ... + n_i``, so ``[G : G_{b_(i+1)}] = p^index_exponent(i)``."""
        return sum(self.multiplicities[:i])

    def group_order(self, i: int) -> int:
        """``|G_{b_i}| = p^(n_i + ... + n_h)`` for ``1 <= i <= h``."""
        return self.p ** sum(self.multiplicities[i - 1:])


@dataclass(frozen=True)
class MinimalTermData:
    """Per level ``i >= 2``: ``v_K(kappa_i)`` and exponents ``w_1..w_{i-1}`` of the
    minimal monomial ``kappa_i f_1^w_1 ... f_{i-1}^w_{i-1}`` of ``D_i``."""

    kappa_valuations: Tuple[int, ...]
    exponents: Tuple[Tuple[int, ...], ...]

    def level(self, i: int) -> Tuple[int, Tuple[int, ...]]:
        if i < 2:
            raise InputError("the structural criterion is defined for levels i > 1")
        if i - 2 >= len(self.exponents):
            raise InputError(f"no minimal-term data for level {i}")
        return self.kappa_valuations[i - 2], self.exponents[i - 2]

    def validate(self, jd: JumpData):
        if len(self.exponents) != jd.height - 1 or len(self.kappa_valuations) != jd.height - 1:
            raise InputError("minimal-term data must cover levels 2..h")
        for i, w in enumerate(self.exponents, start=2):
            if len(w) != i - 1:
                raise InputError(f"level {i} needs {i - 1} exponents")
            if not any(w):
                raise InputError(f"level {i}: exponent vector must be nonzero")
            for j, wj in enumerate(w, start=1):
                if not 0 <= wj < jd.p ** jd.multiplicities[j - 1]:
                    raise InputError(f"level {i}: exponent w_{j} = {wj} out of range")

    @classmethod
    def from_tower(cls, tower: Tower) -> "MinimalTermData":
        kappas, exps = [], []
        for lv in tower.levels[1:]:
            _, mono = tower.minimal_term(lv.D, lv.index - 1)
            kappas.append(-mono.x_exp)
            exps.append(tuple(mono.gen_exps[:lv.index - 1]))
        return cls(tuple(kappas), tuple(exps))


def herbrand_phi(jd: JumpData, u: Union[int, Fraction]) -> Fraction:
    """Exact value of ``phi(u) = int_0^u dt / [G_0 : G_t]``."""
    u = Fraction(u)
    if u < -1:
        raise InputError(f"phi is defined for u >= -1, got {u}")
    b = jd.lower_jumps
    if u <= b[0]:
        return u
    values = upper_jumps(jd)
    i = 1
    while i < jd.height and u > b[i]:
        i += 1
    # u in (b_i, b_{i+1}], where the index of G_t is p^(n_1+...+n_i)
    return values[i - 1] + (u - b[i - 1]) / jd.p ** jd.index_exponent(i)


def upper_jumps(jd: JumpData) -> List[Fraction]:
    """``phi(b_1), ..., phi(b_h)`` from the weighted sum of jump gaps."""
    out = []
    total = 0
    prev = -1
    top = jd.group_order(1)
    for i, b in enumerate(jd.lower_jumps, start=1):
        total += (b - prev) * jd.group_order(i)
        prev = b
        out.append(Fraction(total, top) - 1)
    return out


@dataclass(frozen=True)
class DivisibilityWitness:
    level: int
    modulus: int
    difference: int

    @property
    def divides(self) -> bool:
        return self.difference % self.modulus == 0


@dataclass(frozen=True)
class HasseArfVerdict:
    holds: bool
    witnesses: Tuple[DivisibilityWitness, ...]

    def __bool__(self):
        return self.holds


def hasse_arf_check(jd: JumpData) -> HasseArfVerdict:
    """Whether ``p^(n_1+...+n_{i-1})`` divides ``b_i - b_{i-1}`` for all ``i >= 2``."""
    witnesses = tuple(
        DivisibilityWitness(i, jd.p ** jd.index_exponent(i - 1),
                            jd.lower_jumps[i - 1] - jd.lower_jumps[i - 2])
        for i in range(2, jd.height + 1))
    holds = all(w.divides for w in witnesses)
    integral = all(v.denominator == 1 for v in upper_jumps(jd))
    if holds != integral:
        raise InvariantError("divisibility test disagrees with integrality of upper jumps")
    return HasseArfVerdict(holds, witnesses)


def structural_level_check(mtd: MinimalTermData, level: int) -> bool:
    _, w = mtd.level(level)
    return all(e == 0 for e in w[:-1]) and w[-1] == 1


def structural_check(source: Union[Tower, JumpData],
                     mtd: Optional[MinimalTermData] = None) -> List[bool]:
    """Per-level verdicts for levels ``2..h``: the minimal monomial of ``D_i``
    must be ``kappa_i * f_{i-1}`` with ``kappa_i`` in the base."""
    if isinstance(source, Tower):
        if source.height < 2:
            return []
        mtd = MinimalTermData.from_tower(source)
        height = source.height
    else:
        if mtd is None:
            raise InputError("minimal-term data is required with abstract jump data")
        mtd.validate(source)
        height = source.height
    return [structural_level_check(mtd, i) for i in range(2, height + 1)]


def jumps_difference_identity(jd: JumpData, mtd: MinimalTermData, i: int) -> bool:
    """Check ``b_i - b_{i-1} = -p^(n_1+..+n_{i-1}) v_K(kappa_i)
    + sum_{j<i-1} w_j p^(n_{j+1}+..+n_{i-1}) b_j + (w_{i-1} - 1) b_{i-1}``."""
    if not 2 <= i <= jd.height:
        raise InputError(f"level {i} outside 2..{jd.height}")
    v_kappa, w = mtd.level(i)
    b, n, p = jd.lower_jumps, jd.multiplicities, jd.p
    rhs = -p ** sum(n[:i - 1]) * v_kappa
    for j in range(1, i - 1):
        rhs += w[j - 1] * p ** sum(n[j:i - 1]) * b[j - 1]
    rhs += (w[i - 2] - 1) * b[i - 2]
    return b[i - 1] - b[i - 2] == rhs


def order_function_iG(tower: Tower, images: Sequence[TowerElement],
                      f_test: Optional[TowerElement] = None) -> Union[int, float]:
    """``i_G(sigma) = v(sigma(f) - f) - v(f)`` for any ``f`` whose valuation is
    nonzero and prime to ``p``; ``f`` defaults to the top generator."""
    if f_test is None:
        f_test = tower.gen(tower.height)
    v = tower.valuation(f_test)
    if v == INFINITY or v == 0 or v % tower.p == 0:
        raise InputError(f"test element valuation {v} must be nonzero and prime to p")
    diff = tower.substitute(f_test, images) - f_test
    if not diff:
        if list(images) == identity_images(tower):
            return INFINITY
        raise InvariantError("a nontrivial automorphism fixed an element of valuation prime to p")
    return tower.valuation(diff) - v


def jumps_from_galois(wt: WittTower) -> List[int]:
    """``i_G`` of ``sigma^(p^j)`` for ``j = 0..h-1``; must reproduce the lower jumps."""
    tower = wt.tower
    out = []
    for j in range(tower.height):
        images = galois_generator_images(wt, tower.p ** j)
        out.append(order_function_iG(tower, images))
    if tuple(out) != tower.jumps:
        raise InvariantError(
            f"jump cross-validation failed: Galois {out} vs valuations {list(tower.jumps)}")
    return out


def galois_filtration(wt: WittTower) -> Dict[int, Union[int, float]]:
    """``i_G(sigma^k)`` for every ``k = 0..p^h - 1`` (debug enumeration)."""
    tower = wt.tower
    return {k: order_function_iG(tower, galois_generator_images(wt, k))
            for k in range(tower.p ** tower.height)}


@dataclass
class RamificationReport:
    p: int
    lower_jumps: Tuple[int, ...]
    upper_jumps: Tuple[Fraction, ...]
    hasse_arf: bool
    witnesses: Tuple[DivisibilityWitness, ...]
    structural: Tuple[bool, ...]
    galois_crosscheck: Optional[Tuple[int, ...]] = None
    substitutions: Tuple = ()
    notes: List[str] = field(default_factory=list)


def analyze_tower(tower: Tower, witt_tower: Optional[WittTower] = None,
                  galois_check: bool = False) -> RamificationReport:
    if tower.height == 0:
        raise TowerError("the tower has no levels")
    jd = JumpData.from_tower(tower)
    verdict = hasse_arf_check(jd)
    structural = structural_check(tower)
    mtd = MinimalTermData.from_tower(tower)
    for i in range(2, tower.height + 1):
        if not jumps_difference_identity(jd, mtd, i):
            raise InvariantError(f"jump difference identity fails at level {i}")
    if all(structural) != verdict.holds:
        raise InvariantError("structural criterion disagrees with the divisibility test")
    crosscheck = None
    if galois_check:
        if witt_tower is None:
            raise InputError("the Galois cross-check needs a Witt-generated tower")
        crosscheck = tuple(jumps_from_galois(witt_tower))
    subs = tuple(s for lv in tower.levels for s in lv.substitutions)
    return RamificationReport(
        p=tower.p,
        lower_jumps=tower.jumps,
        upper_jumps=tuple(upper_jumps(jd)),
        hasse_arf=verdict.holds,
        witnesses=verdict.witnesses,
        structural=tuple(structural),
        galois_crosscheck=crosscheck,
        substitutions=subs,
    )
