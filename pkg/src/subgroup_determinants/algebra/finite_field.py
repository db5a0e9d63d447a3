# Copyright 2020 QuantumBlack Visual Analytics Limited
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE, AND
# NONINFRINGEMENT. IN NO EVENT WILL THE LICENSOR OR OTHER CONTRIBUTORS
# BE LIABLE FOR ANY CLAIM, DAMAGES, OR OTHER LIABILITY, WHETHER IN AN
# ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF, OR IN
# CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
#
# The QuantumBlack Visual Analytics Limited ("QuantumBlack") name and logo
# (either separately or in combination, "QuantumBlack Trademarks") are
# trademarks of QuantumBlack. The License does not grant you any right or
# license to the QuantumBlack Trademarks. You may not use the QuantumBlack
# Trademarks or any confusingly similar mark as a trademark for your product,
# or use the QuantumBlack Trademarks in any other manner that might cause
# confusion in the marketplace, including but not limited to in advertising,
# on websites, or on software.
#
# See the License for the specific language governing permissions and
# limitations under the License.

"""Finite fields F_q, q = p^s odd, with a canonical modulus and generator.

Elements are coefficient vectors of residue-class polynomials of degree < s,
constant term first. A field context carries full discrete-log and power
tables, so it is meant for q up to a few million at most.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Sequence, Tuple, Union

from sympy import factorint, isprime, totient

from subgroup_determinants.errors import FieldParameterError

log = logging.getLogger(__name__)

DEFAULT_MAX_FIELD_SIZE = 2 ** 24

Poly = Tuple[int, ...]


def _trim(a: List[int]) -> List[int]:
    while a and not a[-1]:
        a.pop()
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    size = max(len(a), len(b))
    a = list(a) + [0] * (size - len(a))
    b = list(b) + [0] * (size - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] += x * y
    return _trim([x % p for x in c])


def _poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> List[int]:
    """Remainder of ``a`` modulo ``f``; ``f`` need not be monic."""
    f = _trim(list(f))
    if not f:
        raise ZeroDivisionError("division by zero polynomial")
    r = _trim([x % p for x in a])
    d = len(f) - 1
    lead_inv = pow(f[-1], p - 2, p)
    while len(r) - 1 >= d:
        shift = len(r) - 1 - d
        c = (r[-1] * lead_inv) % p
        for j, y in enumerate(f):
            r[shift + j] = (r[shift + j] - c * y) % p
        _trim(r)
    return r


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> List[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return _poly_mod(result, f, p)


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    if not a:
        return a
    lead_inv = pow(a[-1], p - 2, p)
    return [(x * lead_inv) % p for x in a]


def _check_characteristic(p: int, s: int) -> None:
    if s < 1:
        raise FieldParameterError(f"extension degree must be positive, got s={s}")
    if p % 2 == 0:
        raise FieldParameterError(f"characteristic must be odd, got p={p}")
    if not isprime(p):
        raise FieldParameterError(f"characteristic must be prime, got p={p}")


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Certify irreducibility of a monic ``f`` over F_p.

    ``f`` of degree s is irreducible iff x^(p^s) = x (mod f) and
    gcd(x^(p^(s/l)) - x, f) = 1 for every prime l dividing s.
    """
    s = len(f) - 1
    if s < 1:
        return False
    x = [0, 1]
    frobenius = x
    for _ in range(s):
        frobenius = _poly_powmod(frobenius, p, f, p)
    if frobenius != _poly_mod(x, f, p):
        return False
    for ell in factorint(s):
        h = x
        for _ in range(s // ell):
            h = _poly_powmod(h, p, f, p)
        if _poly_gcd(_poly_sub(h, x, p), f, p) != [1]:
            return False
    return True


def find_irreducible(p: int, s: int) -> Poly:
    """Lexicographically least monic irreducible polynomial of degree ``s``.

    Polynomials are ordered by their coefficient tuples read from the constant
    term upward. For ``s == 1`` this is ``x`` itself, which makes the field the
    plain residues mod p.
    """
    _check_characteristic(p, s)
    for low in product(range(p), repeat=s):
        candidate = low + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise FieldParameterError(f"no irreducible polynomial of degree {s} over F_{p}")


@dataclass(frozen=True)
class FieldParams:
    p: int
    s: int
    q: int
    modulus: Poly


@dataclass(frozen=True)
class FieldElement:
    coeffs: Tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


ElementLike = Union[FieldElement, int, Sequence[int]]


@dataclass(frozen=True)
class FieldCtx:
    """An immutable F_q with generator ``g`` and discrete-log tables.

    ``exp_table[e]`` is the code of g^e and ``dlog_table[code]`` its exponent
    (``-1`` at the zero element). Codes are ``sum(c_i * p**i)``.
    """

    params: FieldParams
    g: FieldElement
    exp_table: Tuple[int, ...]
    dlog_table: Tuple[int, ...]
    group_order_primes: Tuple[int, ...]

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def s(self) -> int:
        return self.params.s

    @property
    def q(self) -> int:
        return self.params.q

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.s)

    @property
    def one(self) -> FieldElement:
        return FieldElement((1,) + (0,) * (self.s - 1))

    def element(self, value: ElementLike) -> FieldElement:
        """Coerce an integer (embedded as a constant) or coefficient vector."""
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, int):
            return FieldElement((value % self.p,) + (0,) * (self.s - 1))
        coeffs = [c % self.p for c in value]
        if len(coeffs) > self.s:
            return self._reduce(coeffs)
        return FieldElement(tuple(coeffs) + (0,) * (self.s - len(coeffs)))

    def code(self, x: FieldElement) -> int:
        value = 0
        for c in reversed(x.coeffs):
            value = value * self.p + c
        return value

    def decode(self, code: int) -> FieldElement:
        coeffs = []
        for _ in range(self.s):
            code, c = divmod(code, self.p)
            coeffs.append(c)
        return FieldElement(tuple(coeffs))

    def elements(self) -> Iterator[FieldElement]:
        """All of F_q in canonical order: lex on coefficient vectors."""
        for coeffs in product(range(self.p), repeat=self.s):
            yield FieldElement(coeffs)

    def nonzero_elements(self) -> Iterator[FieldElement]:
        return (x for x in self.elements() if not x.is_zero)

    def _reduce(self, coeffs: Sequence[int]) -> FieldElement:
        r = _poly_mod(coeffs, self.params.modulus, self.p)
        return FieldElement(tuple(r) + (0,) * (self.s - len(r)))

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        p = self.p
        return FieldElement(tuple((a + b) % p for a, b in zip(x.coeffs, y.coeffs)))

    def neg(self, x: FieldElement) -> FieldElement:
        p = self.p
        return FieldElement(tuple((-a) % p for a in x.coeffs))

    def sub(self, x: FieldElement, y: FieldElement) -> FieldElement:
        p = self.p
        return FieldElement(tuple((a - b) % p for a, b in zip(x.coeffs, y.coeffs)))

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        if x.is_zero or y.is_zero:
            return self.zero
        return self.exp(self.dlog(x) + self.dlog(y))

    def inv(self, x: FieldElement) -> FieldElement:
        if x.is_zero:
            raise FieldParameterError("zero has no multiplicative inverse")
        return self.exp(-self.dlog(x))

    def pow(self, x: FieldElement, e: int) -> FieldElement:
        if x.is_zero:
            if e < 0:
                raise FieldParameterError("zero has no multiplicative inverse")
            return self.one if e == 0 else self.zero
        return self.exp(self.dlog(x) * e)

    def dlog(self, x: FieldElement) -> int:
        """Exponent e in [0, q-2] with g^e = x."""
        e = self.dlog_table[self.code(x)]
        if e < 0:
            raise FieldParameterError("discrete log of zero is undefined")
        return e

    def exp(self, e: int) -> FieldElement:
        return self.decode(self.exp_table[e % (self.q - 1)])


def _slow_mul(x: Sequence[int], y: Sequence[int], modulus: Poly, p: int) -> List[int]:
    return _poly_mod(_poly_mul(x, y, p), modulus, p)


def _slow_pow(x: Sequence[int], e: int, modulus: Poly, p: int) -> List[int]:
    return _poly_powmod(x, e, modulus, p)


def _has_full_order(
    coeffs: Sequence[int], group_order: int, primes: Sequence[int], modulus: Poly, p: int
) -> bool:
    return all(
        _slow_pow(coeffs, group_order // ell, modulus, p) != [1] for ell in primes
    )


def prime_power_parts(q: int) -> Tuple[int, int]:
    """Split an odd prime power q into (p, s)."""
    if q < 3 or q % 2 == 0:
        raise FieldParameterError(f"q must be an odd prime power, got q={q}")
    factors = factorint(q)
    if len(factors) != 1:
        raise FieldParameterError(f"q={q} is not a prime power")
    ((p, s),) = factors.items()
    return int(p), int(s)


@lru_cache(maxsize=64)
def make_field(
    p: int,
    s: int = 1,
    max_field_size: int = DEFAULT_MAX_FIELD_SIZE,
    generator_rank: int = 0,
) -> FieldCtx:
    """Build F_{p^s} with canonical modulus and generator.

    The generator is the first element of multiplicative order q - 1 in
    canonical element order; ``generator_rank`` picks a later one instead
    (``1`` is the next generator in that order).
    """
    _check_characteristic(p, s)
    q = p ** s
    if q > max_field_size:
        raise FieldParameterError(
            f"q={q} exceeds the field size guard {max_field_size}"
        )
    modulus = find_irreducible(p, s)
    primes = tuple(int(ell) for ell in factorint(q - 1))
    available = int(totient(q - 1))
    if not 0 <= generator_rank < available:
        raise FieldParameterError(
            f"F_{q} has {available} generators; rank {generator_rank} does not exist"
        )

    rank = generator_rank
    generator = None
    for coeffs in product(range(p), repeat=s):
        if not any(coeffs):
            continue
        if _has_full_order(coeffs, q - 1, primes, modulus, p):
            if rank == 0:
                generator = coeffs
                break
            rank -= 1

    params = FieldParams(p=p, s=s, q=q, modulus=modulus)

    def encode(coeffs: Sequence[int]) -> int:
        value = 0
        for c in reversed(coeffs):
            value = value * p + c
        return value

    exp_table = []
    dlog_table = [-1] * q
    power = [1]
    for e in range(q - 1):
        padded = tuple(power) + (0,) * (s - len(power))
        code = encode(padded)
        if dlog_table[code] >= 0:
            raise FieldParameterError(f"{generator} does not generate F_{q}^x")
        dlog_table[code] = e
        exp_table.append(code)
        power = _slow_mul(power, generator, modulus, p)

    ctx = FieldCtx(
        params=params,
        g=FieldElement(tuple(generator)),
        exp_table=tuple(exp_table),
        dlog_table=tuple(dlog_table),
        group_order_primes=primes,
    )
    log.debug("Built F_%d: modulus=%s, generator=%s", q, list(modulus), ctx.g)
    return ctx


def order_check(ctx: FieldCtx, x: FieldElement) -> bool:
    """True iff ``x`` generates F_q^x."""
    if x.is_zero:
        raise FieldParameterError("zero has no multiplicative order")
    n = ctx.q - 1
    return all(ctx.pow(x, n // ell) != ctx.one for ell in ctx.group_order_primes)


def subgroup_dk(ctx: FieldCtx, k: int) -> List[FieldElement]:
    """D_k in generator-power order a_i = g^(k*i), i = 0, ..., (q-1)/k - 1."""
    if k < 1 or (ctx.q - 1) % k:
        raise FieldParameterError(f"k={k} does not divide q-1={ctx.q - 1}")
    return [ctx.exp(k * i) for i in range((ctx.q - 1) // k)]
