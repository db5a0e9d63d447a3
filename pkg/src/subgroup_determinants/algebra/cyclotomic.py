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

"""Exact arithmetic in Z[zeta_n].

A ``CycInt`` is stored as a residue in Z[x]/(x^n - 1). That representation is
not unique, so equality and integrality always go through reduction modulo
the n-th cyclotomic polynomial.
"""
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import divisors

from subgroup_determinants.errors import CyclotomicMismatchError


@dataclass(frozen=True)
class CyclotomicPoly:
    n: int
    coeffs: Tuple[int, ...]  # constant term first, monic

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _exact_divide(num: Sequence[int], den: Sequence[int]) -> List[int]:
    """Quotient of integer polynomials by a monic divisor; remainder must vanish."""
    r = list(num)
    d = len(den) - 1
    quotient = [0] * (len(r) - d)
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            quotient[i - d] = c
            for j, y in enumerate(den):
                r[i - d + j] -= c * y
    if any(r[:d]):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> CyclotomicPoly:
    """Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            poly = _exact_divide(poly, cyclotomic_poly(int(d)).coeffs)
    return CyclotomicPoly(n, tuple(poly))


def _reduce(coeffs: Sequence[int], n: int) -> List[int]:
    """Remainder modulo Phi_n, padded to length deg(Phi_n)."""
    phi_n = cyclotomic_poly(n).coeffs
    d = len(phi_n) - 1
    r = list(coeffs)
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            r[i] = 0
            base = i - d
            for j in range(d):
                if phi_n[j]:
                    r[base + j] -= c * phi_n[j]
    return r[:d]


@dataclass(frozen=True, eq=False)
class CycInt:
    """sum_i coeffs[i] * zeta_n^i."""

    n: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.coeffs) != self.n:
            raise CyclotomicMismatchError(
                f"expected {self.n} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, n: int) -> "CycInt":
        return cls(n, (0,) * n)

    @classmethod
    def integer(cls, n: int, value: int) -> "CycInt":
        return cls(n, (value,) + (0,) * (n - 1))

    @classmethod
    def root(cls, n: int, exponent: int, sign: int = 1) -> "CycInt":
        coeffs = [0] * n
        coeffs[exponent % n] = sign
        return cls(n, tuple(coeffs))

    def canonical(self) -> Tuple[int, ...]:
        return tuple(_reduce(self.coeffs, self.n))

    def reduced(self) -> "CycInt":
        """An equal element whose representative has degree < deg(Phi_n)."""
        r = _reduce(self.coeffs, self.n)
        return CycInt(self.n, tuple(r) + (0,) * (self.n - len(r)))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycInt.integer(self.n, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.coeffs == other.coeffs:
            return True
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.n, self.canonical()))

    def __add__(self, other) -> "CycInt":
        return cyc_add(self, other)

    def __sub__(self, other) -> "CycInt":
        return cyc_add(self, cyc_neg(_coerce(other, self.n)))

    def __neg__(self) -> "CycInt":
        return cyc_neg(self)

    def __mul__(self, other) -> "CycInt":
        return cyc_mul(self, other)

    __radd__ = __add__
    __rmul__ = __mul__

    def conj(self) -> "CycInt":
        return conj(self)

    def galois(self, t: int) -> "CycInt":
        return galois(self, t)

    def as_integer(self) -> Optional[int]:
        return as_integer(self)

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": list(self.coeffs)}


def _coerce(value, n: int) -> CycInt:
    if isinstance(value, int):
        return CycInt.integer(n, value)
    return value


def _same_order(a: CycInt, b: CycInt) -> None:
    if a.n != b.n:
        raise CyclotomicMismatchError(f"orders differ: {a.n} != {b.n}")


def cyc_add(a: CycInt, b) -> CycInt:
    b = _coerce(b, a.n)
    _same_order(a, b)
    return CycInt(a.n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def cyc_neg(a: CycInt) -> CycInt:
    return CycInt(a.n, tuple(-x for x in a.coeffs))


def cyc_mul(a: CycInt, b) -> CycInt:
    """Cyclic convolution, indices mod n."""
    if isinstance(b, int):
        return CycInt(a.n, tuple(b * x for x in a.coeffs))
    _same_order(a, b)
    n = a.n
    out = [0] * n
    right = [(j, y) for j, y in enumerate(b.coeffs) if y]
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in right:
                out[(i + j) % n] += x * y
    return CycInt(n, tuple(out))


def conj(a: CycInt) -> CycInt:
    """Complex conjugation zeta -> zeta^-1."""
    return galois(a, -1)


def galois(a: CycInt, t: int) -> CycInt:
    """The automorphism zeta -> zeta^t, gcd(t, n) = 1."""
    n = a.n
    if gcd(t % n, n) != 1:
        raise CyclotomicMismatchError(f"gcd({t}, {n}) != 1")
    out = [0] * n
    for i, x in enumerate(a.coeffs):
        out[(t * i) % n] += x
    return CycInt(n, tuple(out))


def as_integer(a: CycInt) -> Optional[int]:
    """The rational integer equal to ``a``, or None when ``a`` is not in Z."""
    r = _reduce(a.coeffs, a.n)
    if any(r[1:]):
        return None
    return r[0] if r else 0


def cyc_product(factors: Iterable[CycInt], n: int) -> CycInt:
    """Product of many elements, reducing mod Phi_n after every step."""
    result = CycInt.integer(n, 1)
    for factor in factors:
        result = cyc_mul(result, factor).reduced()
    return result
