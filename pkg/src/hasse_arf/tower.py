"""Towers of Artin-Schreier extensions of F_p((x)) as exact computational objects.

A tower of height ``h`` is ``F_p((x))(f_1, ..., f_h)`` with relations
``f_j^p - f_j = D_j`` where ``D_j`` lies in the level below.  Every element is
kept in normal form: a finite F_p-combination of monomials
``x^a f_1^e_1 ... f_h^e_h`` with ``0 <= e_j < p`` (``a`` may be negative).

Valuations use the pole convention ``v(x) = -1`` on the base.  At level ``k``
(the field generated by ``f_1..f_k``) one has ``v_k(x) = -p^k`` and
``v_k(f_j) = -b_j p^(k-j)``, where ``b_j`` is the (prime to ``p``) jump
recorded when level ``j`` was added.

Internally a monomial is one integer key::

    key = a * M + e_1 + e_2 * B + ... + e_9 * B^8,    B = 2p,  M = B^9

so that multiplying two normal-form monomials is integer addition (no digit
can carry because each digit sum stays below ``2p - 1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .core_arith import FpElement, IntPolynomial, check_prime
from .errors import InputError, InvariantError
from .lucas import binom_mod_p, first_nonzero_binom_index, leading_binom_value

MAX_GENERATORS = 9
DEFAULT_MAX_ITERATIONS = 64
INFINITY = float("inf")

_MISSING = object()


class TowerError(InputError):
    """The requested tower or level cannot be built from the given data."""


@dataclass(frozen=True)
class TowerMonomial:
    x_exp: int
    gen_exps: Tuple[int, ...] = ()

    def degree_in(self, j: int) -> int:
        """Exponent of ``f_j`` (1-based); zero past the stored length."""
        return self.gen_exps[j - 1] if j <= len(self.gen_exps) else 0


@dataclass(frozen=True)
class Substitution:
    """Records ``f_i := fbar_i + coefficient * monomial``."""

    level: int
    coefficient: int
    monomial: TowerMonomial


@dataclass(frozen=True)
class Level:
    index: int
    D: "TowerElement"
    jump: int
    raw_D: "TowerElement"
    substitutions: Tuple[Substitution, ...] = ()


class Tower:
    """An immutable tower descriptor; ``add_level`` returns a new tower."""

    def __init__(self, p: int):
        check_prime(p)
        self.p = p
        self.levels: Tuple[Level, ...] = ()
        self._base = 2 * p
        self._M = self._base ** MAX_GENERATORS
        self._gen_nf: Dict[int, Optional[Dict[int, int]]] = {0: None}
        self._frob: Dict[int, Dict[int, int]] = {}

    # -- construction helpers -------------------------------------------------

    @property
    def height(self) -> int:
        return len(self.levels)

    @property
    def jumps(self) -> Tuple[int, ...]:
        return tuple(lv.jump for lv in self.levels)

    def _derive(self, level: Level) -> "Tower":
        t = Tower.__new__(Tower)
        t.p = self.p
        t.levels = self.levels + (level,)
        t._base = self._base
        t._M = self._M
        # entries only involve generators below the new one, so they stay valid
        t._gen_nf = dict(self._gen_nf)
        t._frob = dict(self._frob)
        return t

    def compatible(self, other: "Tower") -> bool:
        if self is other:
            return True
        if self.p != other.p:
            return False
        short, long_ = sorted((self.levels, other.levels), key=len)
        return all(a is b or (a.jump == b.jump and a.D.terms == b.D.terms)
                   for a, b in zip(short, long_))

    def _wrap(self, terms: Dict[int, int], level: int) -> "TowerElement":
        return TowerElement._make(self, terms, level)

    def zero(self) -> "TowerElement":
        return self._wrap({}, 0)

    def one(self) -> "TowerElement":
        return self.constant(1)

    def constant(self, c: int) -> "TowerElement":
        c %= self.p
        return self._wrap({0: c} if c else {}, 0)

    def x(self) -> "TowerElement":
        return self._wrap({self._M: 1}, 0)

    def gen(self, j: int) -> "TowerElement":
        """The (normalized) generator ``f_j``."""
        if not 1 <= j <= self.height:
            raise TowerError(f"generator f{j} not available in tower of height {self.height}")
        return self._wrap({self._base ** (j - 1): 1}, j)

    def original_generator(self, j: int) -> "TowerElement":
        """``f_j`` before normalization, i.e. ``fbar_j + sum c*g``."""
        out = self.gen(j)
        for s in self.levels[j - 1].substitutions:
            out = out + self.monomial(s.monomial, s.coefficient)
        return out

    def key_of(self, mono: TowerMonomial) -> int:
        if len(mono.gen_exps) > MAX_GENERATORS:
            raise TowerError("too many generator exponents")
        key = mono.x_exp * self._M
        for j, e in enumerate(mono.gen_exps):
            if not 0 <= e < self.p:
                raise TowerError(f"generator exponent {e} not reduced mod relations")
            key += e * self._base ** j
        return key

    def decode(self, key: int) -> Tuple[int, List[int]]:
        a, g = divmod(key, self._M)
        digits = []
        while g:
            g, d = divmod(g, self._base)
            digits.append(d)
        return a, digits

    def monomial_of(self, key: int, level: int) -> TowerMonomial:
        a, digits = self.decode(key)
        digits += [0] * (level - len(digits))
        return TowerMonomial(a, tuple(digits))

    def _level_of_key(self, key: int) -> int:
        return len(self.decode(key)[1])

    def monomial(self, mono: TowerMonomial, coefficient: int = 1) -> "TowerElement":
        level = len(mono.gen_exps)
        while level and mono.gen_exps[level - 1] == 0:
            level -= 1
        if level > self.height:
            raise TowerError(f"monomial uses f{level} beyond tower height {self.height}")
        c = coefficient % self.p
        return self._wrap({self.key_of(mono): c} if c else {}, level)

    def normal_form(self, e: Union["TowerElement", Mapping[Tuple[int, Tuple[int, ...]], int]]) -> "TowerElement":
        """Normal form of an element or of a raw ``{(x_exp, gen_exps): coef}`` map.

        Raw generator exponents may be arbitrary nonnegative integers; they
        are rewritten with ``f_j^p -> f_j + D_j``.
        """
        if isinstance(e, TowerElement):
            self._check_compatible(e)
            return e
        acc: Dict[int, int] = {}
        level = 0
        for (a, gens), c in e.items():
            if any(k < 0 for k in gens):
                raise TowerError("negative generator exponent")
            used = [j + 1 for j, k in enumerate(gens) if k]
            if used and used[-1] > self.height:
                raise TowerError(f"f{used[-1]} beyond tower height {self.height}")
            level = max(level, used[-1] if used else 0)
            term = self._wrap({a * self._M: c % self.p} if c % self.p else {}, 0)
            for j in used:
                term = term * self.gen(j) ** gens[j - 1]
            _accumulate(acc, term.terms)
        return self._wrap(_reduce(acc, self.p), level)

    # -- arithmetic kernels ---------------------------------------------------

    def _check_compatible(self, e: "TowerElement"):
        if not self.compatible(e.tower):
            raise TowerError("elements belong to incompatible towers")

    def _compute_gen_nf(self, g: int) -> Optional[Dict[int, int]]:
        p, B = self.p, self._base
        digits = []
        h = g
        while h:
            h, d = divmod(h, B)
            digits.append(d)
        top = max((j for j, d in enumerate(digits) if d >= p), default=None)
        if top is None:
            self._gen_nf[g] = None
            return None
        if top >= self.height:
            raise TowerError(f"f{top + 1} has no defining relation in this tower")
        rest = g - p * B ** top
        rest_nf = self._gen_nf.get(rest, _MISSING)
        if rest_nf is _MISSING:
            rest_nf = self._compute_gen_nf(rest)
        rest_terms = {rest: 1} if rest_nf is None else rest_nf
        relation = dict(self.levels[top].D.terms)
        w = B ** top
        relation[w] = (relation.get(w, 0) + 1) % p
        out = self._mul_terms(rest_terms, relation)
        self._gen_nf[g] = out
        return out

    def _mul_terms(self, t1: Dict[int, int], t2: Dict[int, int]) -> Dict[int, int]:
        if len(t1) > len(t2):
            t1, t2 = t2, t1
        M = self._M
        nf = self._gen_nf
        out: Dict[int, int] = {}
        get = out.get
        for k1, c1 in t1.items():
            for k2, c2 in t2.items():
                k = k1 + k2
                g = k % M
                r = nf.get(g, _MISSING)
                if r is _MISSING:
                    r = self._compute_gen_nf(g)
                if r is None:
                    out[k] = get(k, 0) + c1 * c2
                else:
                    c = c1 * c2
                    shift = k - g
                    for kk, cc in r.items():
                        kk += shift
                        out[kk] = get(kk, 0) + c * cc
        return _reduce(out, self.p)

    def _frobenius_terms(self, terms: Dict[int, int]) -> Dict[int, int]:
        # (sum c m)^p = sum c m^p in characteristic p, and c^p = c in F_p
        M, p = self._M, self.p
        out: Dict[int, int] = {}
        for k, c in terms.items():
            g = k % M
            a = (k - g) // M
            r = self._frob.get(g)
            if r is None:
                r = {0: 1}
                for j, d in enumerate(self.decode(g)[1]):
                    if d:
                        fj = {self._base ** j: 1}
                        for _ in range(p * d):
                            r = self._mul_terms(r, fj)
                self._frob[g] = r
            shift = p * a * M
            for kk, cc in r.items():
                out[kk + shift] = out.get(kk + shift, 0) + c * cc
        return _reduce(out, p)

    def pow_p(self, e: "TowerElement") -> "TowerElement":
        self._check_compatible(e)
        return self._wrap(self._frobenius_terms(e.terms), e.level)

    # -- valuations -------------------------------------------------------------

    def _weights(self, level: int) -> Tuple[int, List[int]]:
        if not 0 <= level <= self.height:
            raise TowerError(f"level {level} outside tower of height {self.height}")
        p = self.p
        wx = -(p ** level)
        wf = [-lv.jump * p ** (level - lv.index) for lv in self.levels[:level]]
        return wx, wf

    def _key_valuation(self, key: int, wx: int, wf: List[int]) -> int:
        a, digits = self.decode(key)
        if len(digits) > len(wf):
            raise TowerError("monomial involves a generator above the requested level")
        return a * wx + sum(d * w for d, w in zip(digits, wf))

    def monomial_valuation(self, mono: TowerMonomial, level: int) -> int:
        wx, wf = self._weights(level)
        used = [j for j, e in enumerate(mono.gen_exps) if e]
        if used and used[-1] >= level:
            raise TowerError("monomial does not fit the requested level")
        return mono.x_exp * wx + sum(e * w for e, w in zip(mono.gen_exps, wf))

    def _term_valuations(self, e: "TowerElement", level: Optional[int]) -> Dict[int, int]:
        self._check_compatible(e)
        if level is None:
            level = self.height
        if e.level > level:
            raise TowerError(f"element of level {e.level} queried at level {level}")
        wx, wf = self._weights(level)
        vals = {k: self._key_valuation(k, wx, wf) for k in e.terms}
        if len(set(vals.values())) != len(vals):
            raise InvariantError("two monomials of a normal-form element share a valuation")
        return vals

    def valuation(self, e: "TowerElement", level: Optional[int] = None) -> Union[int, float]:
        """Valuation at ``level`` (default: top); ``INFINITY`` for zero."""
        if not e.terms:
            self._check_compatible(e)
            return INFINITY
        return min(self._term_valuations(e, level).values())

    def minimal_term(self, e: "TowerElement", level: Optional[int] = None) -> Tuple[FpElement, TowerMonomial]:
        if not e.terms:
            raise TowerError("the zero element has no minimal term")
        vals = self._term_valuations(e, level)
        key = min(vals, key=vals.__getitem__)
        lv = self.height if level is None else level
        return FpElement(e.terms[key], self.p), self.monomial_of(key, lv)

    def valuation_table(self) -> List[List[int]]:
        """Row ``k``: valuations of ``x, f_1, ..., f_k`` at level ``k``."""
        rows = []
        for k in range(self.height + 1):
            wx, wf = self._weights(k)
            rows.append([wx] + wf)
        return rows

    # -- normalization ------------------------------------------------------------

    def diophantine_monomial(self, target: int, level: Optional[int] = None) -> Optional[TowerMonomial]:
        """The monomial ``x^a f_1^e_1..f_k^e_k`` (``a >= 0``, ``0 <= e_j < p``) of
        valuation ``-target`` at ``level``, or ``None``.

        Digits are peeled off from the top generator down: modulo ``p`` only
        the top generator's weight ``b_k`` survives, and it is a unit.
        """
        if target <= 0:
            raise TowerError("target must be positive")
        k = self.height if level is None else level
        if not 0 <= k <= self.height:
            raise TowerError(f"level {k} outside tower")
        p = self.p
        exps = [0] * k
        t = target
        for j in range(k, 0, -1):
            b = self.levels[j - 1].jump
            e = t * pow(b, -1, p) % p
            exps[j - 1] = e
            t -= e * b
            if t % p:
                raise InvariantError("digit extraction left a non-multiple of p")
            t //= p
        if t < 0:
            return None
        return TowerMonomial(t, tuple(exps))

    def add_level(self, D_raw: "TowerElement", max_iterations: int = DEFAULT_MAX_ITERATIONS) -> "Tower":
        """Adjoin ``f`` with ``f^p - f = D_raw``, normalizing ``f`` until its
        jump is prime to ``p``.  Returns a new tower."""
        if self.height >= MAX_GENERATORS:
            raise TowerError(f"at most {MAX_GENERATORS} levels are supported")
        self._check_compatible(D_raw)
        if D_raw.level > self.height:
            raise TowerError("defining element lies above the current top level")
        p, k = self.p, self.height
        D = self._wrap(dict(D_raw.terms), k)
        subs: List[Substitution] = []
        previous = None
        for _ in range(max_iterations):
            v = self.valuation(D, k)
            if v >= 0:
                raise TowerError(f"not totally ramified at this level (valuation {v})")
            if previous is not None and v <= previous:
                raise InvariantError("substitution did not raise the minimal valuation")
            if v % p:
                b = -v
                if self.levels and b <= self.levels[-1].jump:
                    raise TowerError(
                        f"lower jumps must increase strictly: got {b} after {self.levels[-1].jump}")
                level = Level(k + 1, D, b, self._wrap(dict(D_raw.terms), k), tuple(subs))
                return self._derive(level)
            c_D, _ = self.minimal_term(D, k)
            g_mono = self.diophantine_monomial(-v // p, k)
            if g_mono is None:
                raise TowerError("normalization failed: no substitution monomial exists")
            g = self.monomial(g_mono)
            gp = self.pow_p(g)
            c_gp, m_gp = self.minimal_term(gp, k)
            if self.monomial_valuation(m_gp, k) != v:
                raise InvariantError("g^p does not reach the offending valuation")
            c = (c_D / c_gp).value
            D = D - (gp - g) * c
            D = self._wrap(D.terms, k)
            subs.append(Substitution(k + 1, c, g_mono))
            previous = v
        raise TowerError(f"normalization exceeded {max_iterations} iterations")

    # -- evaluation -----------------------------------------------------------------

    def substitute(self, e: "TowerElement", images: Sequence["TowerElement"]) -> "TowerElement":
        """Apply the F_p((x))-algebra map ``f_j -> images[j-1]``."""
        self._check_compatible(e)
        M = self._M
        groups: Dict[int, Dict[int, int]] = {}
        for k, c in e.terms.items():
            g = k % M
            groups.setdefault(g, {})[k - g] = c
        powers: Dict[Tuple[int, int], TowerElement] = {}
        acc: Dict[int, int] = {}
        level = 0
        for g, xpart in groups.items():
            _, digits = self.decode(g)
            if len(digits) > len(images):
                raise TowerError("not enough generator images")
            prod = self._wrap(xpart, 0)
            for j, d in enumerate(digits):
                if d:
                    if (j, d) not in powers:
                        powers[(j, d)] = images[j] ** d
                    prod = prod * powers[(j, d)]
            level = max(level, prod.level)
            _accumulate(acc, prod.terms)
        return self._wrap(_reduce(acc, self.p), level)

    def evaluate(self, poly: IntPolynomial, values: Sequence["TowerElement"]) -> "TowerElement":
        """Evaluate an integer polynomial at tower elements (coefficients mod p)."""
        if len(values) != poly.nvars:
            raise TowerError("value count does not match polynomial variables")
        powers: Dict[Tuple[int, int], TowerElement] = {}
        acc: Dict[int, int] = {}
        level = max((v.level for v in values), default=0)
        for exps, c in poly.items():
            c %= self.p
            if not c:
                continue
            if any(k and not values[i].terms for i, k in enumerate(exps)):
                continue
            term = self.constant(c)
            for i, k in enumerate(exps):
                if k:
                    if (i, k) not in powers:
                        powers[(i, k)] = values[i] ** k
                    term = term * powers[(i, k)]
            _accumulate(acc, term.terms)
        return self._wrap(_reduce(acc, self.p), level)

    def __repr__(self):
        return f"Tower(p={self.p}, jumps={self.jumps})"


class TowerElement:
    """A normal-form element of a tower.  Immutable."""

    __slots__ = ("tower", "terms", "level")

    def __init__(self, *args, **kwargs):
        raise TypeError("build elements through a Tower (x(), gen(), monomial(), parse_expression())")

    @classmethod
    def _make(cls, tower: Tower, terms: Dict[int, int], level: int) -> "TowerElement":
        obj = object.__new__(cls)
        obj.tower = tower
        obj.terms = terms
        obj.level = level
        return obj

    def _other(self, other) -> Optional["TowerElement"]:
        if isinstance(other, TowerElement):
            if not self.tower.compatible(other.tower):
                raise TowerError("elements belong to incompatible towers")
            return other
        if isinstance(other, (int, FpElement)):
            return self.tower.constant(int(other))
        return None

    def _host(self, other: "TowerElement") -> Tower:
        return self.tower if self.tower.height >= other.tower.height else other.tower

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        p = self.tower.p
        for k, c in o.terms.items():
            s = (out.get(k, 0) + c) % p
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TowerElement._make(self._host(o), out, max(self.level, o.level))

    __radd__ = __add__

    def __neg__(self):
        p = self.tower.p
        return TowerElement._make(self.tower, {k: p - c for k, c in self.terms.items()}, self.level)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        host = self._host(o)
        return TowerElement._make(host, host._mul_terms(self.terms, o.terms), max(self.level, o.level))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) == 1:
                (k, c), = self.terms.items()
                if k % self.tower._M == 0:
                    inv = pow(c, -1, self.tower.p)
                    return TowerElement._make(self.tower, {(k // self.tower._M) * n * self.tower._M: pow(inv, -n, self.tower.p)}, 0)
            raise TowerError("negative powers are only defined for c*x^a")
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return TowerElement._make(result.tower, result.terms, self.level if self.terms else 0)

    def frobenius(self) -> "TowerElement":
        return self.tower.pow_p(self)

    def valuation(self, level: Optional[int] = None):
        return self.tower.valuation(self, level)

    def minimal_term(self, level: Optional[int] = None):
        return self.tower.minimal_term(self, level)

    def monomials(self) -> Iterator[Tuple[FpElement, TowerMonomial]]:
        p = self.tower.p
        for k, c in self.terms.items():
            yield FpElement(c, p), self.tower.monomial_of(k, self.level)

    def coefficient(self, mono: TowerMonomial) -> FpElement:
        return FpElement(self.terms.get(self.tower.key_of(mono), 0), self.tower.p)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        o = self._other(other) if isinstance(other, (int, FpElement, TowerElement)) else None
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<TowerElement p={self.tower.p} level={self.level}: {format_element(self)}>"


def _accumulate(acc: Dict[int, int], terms: Dict[int, int]):
    for k, c in terms.items():
        acc[k] = acc.get(k, 0) + c


def _reduce(terms: Dict[int, int], p: int) -> Dict[int, int]:
    out = {}
    for k, c in terms.items():
        c %= p
        if c:
            out[k] = c
    return out


def _format_monomial(mono: TowerMonomial) -> str:
    factors = []
    if mono.x_exp == 1:
        factors.append("x")
    elif mono.x_exp:
        factors.append(f"x^{mono.x_exp}")
    for j, e in enumerate(mono.gen_exps, start=1):
        if e == 1:
            factors.append(f"f{j}")
        elif e:
            factors.append(f"f{j}^{e}")
    return "*".join(factors)


def format_monomial(mono: TowerMonomial, coefficient: int = 1, p: Optional[int] = None) -> str:
    c = FpElement(coefficient, p).signed() if p else coefficient
    body = _format_monomial(mono)
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def format_element(e: TowerElement) -> str:
    """Signed-coefficient rendering, terms in increasing valuation order."""
    if not e.terms:
        return "0"
    tower = e.tower
    try:
        vals = tower._term_valuations(e, e.level)
        keys = sorted(e.terms, key=lambda k: (vals[k], k))
    except (TowerError, InvariantError):
        keys = sorted(e.terms)
    parts = []
    for k in keys:
        c = FpElement(e.terms[k], tower.p).signed()
        body = _format_monomial(tower.monomial_of(k, e.level))
        a = abs(c)
        if not body:
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        parts.append(("-" if c < 0 else "+", text))
    sign, text = parts[0]
    out = ("-" if sign == "-" else "") + text
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


def binomial_expand(a: TowerElement, m: int, trunc: int) -> TowerElement:
    """Truncated ``(1 + a)^m`` for ``a`` in the maximal ideal of F_p((x)).

    Here ``a`` is read on the uniformizer side, ``ord(x) = +1`` (the order of
    vanishing at ``x = 0``), so this never mixes with the tower's pole-side
    valuation.  Terms of x-degree above ``trunc`` are discarded.
    """
    tower = a.tower
    p = tower.p
    if a.level != 0 or any(k % tower._M for k in a.terms):
        raise TowerError("binomial_expand works in the base field only")
    if m == 0:
        raise TowerError("exponent must be nonzero")
    if not a.terms:
        return tower.one()
    order = min(k // tower._M for k in a.terms)
    if order <= 0:
        raise TowerError("binomial_expand needs a with positive order")
    lead_index = first_nonzero_binom_index(m, p)
    if trunc < lead_index * order:
        raise TowerError("truncation too coarse to certify leading term")
    limit = (trunc + 1) * tower._M

    def truncate(terms):
        return {k: c for k, c in terms.items() if k < limit}

    acc: Dict[int, int] = {0: 1}
    power: Dict[int, int] = {0: 1}
    for n in range(1, trunc // order + 1):
        power = truncate(tower._mul_terms(power, a.terms))
        c = binom_mod_p(m, n, p).value
        if c:
            for k, cc in power.items():
                acc[k] = acc.get(k, 0) + c * cc
    out = tower._wrap(_reduce(acc, p), 0)
    lead = out - 1
    if lead.terms:
        low = min(lead.terms)
        expected = (a ** lead_index).terms
        low_a = min(expected)
        if low != low_a or lead.terms[low] != (leading_binom_value(m, p).value * expected[low_a]) % p:
            raise InvariantError("leading binomial term disagrees with the Lucas prediction")
    return out


__all__ = [
    "INFINITY",
    "Level",
    "Substitution",
    "Tower",
    "TowerElement",
    "TowerError",
    "TowerMonomial",
    "binomial_expand",
    "format_element",
    "format_monomial",
]
