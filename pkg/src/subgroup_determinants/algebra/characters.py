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

"""Multiplicative characters of F_q with the convention psi(0) = 0.

chi is the generator of the character group with chi(g) = zeta_{q-1}. Values
are kept as exponent residues of a root of unity of a caller-chosen order N,
never as complex numbers.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence

from subgroup_determinants.algebra.cyclotomic import CycInt
from subgroup_determinants.algebra.finite_field import FieldCtx, FieldElement
from subgroup_determinants.errors import CharacterDomainError


def phi(ctx: FieldCtx, x: FieldElement) -> int:
    """The quadratic character: 1 on nonzero squares, -1 on non-squares, 0 at 0."""
    if x.is_zero:
        return 0
    return -1 if ctx.dlog(x) & 1 else 1


def phi_euler(ctx: FieldCtx, x: FieldElement) -> int:
    """Euler's criterion x^((q-1)/2), an independent route to ``phi``."""
    if x.is_zero:
        return 0
    power = ctx.pow(x, (ctx.q - 1) // 2)
    if power == ctx.one:
        return 1
    if power == ctx.neg(ctx.one):
        return -1
    raise ArithmeticError(f"x^((q-1)/2) = {power} is not +-1 in F_{ctx.q}")


@dataclass(frozen=True)
class CharValue:
    """``sign * zeta_order^exponent``, or zero when ``exponent`` is None."""

    order: int
    exponent: Optional[int]
    sign: int = 1

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def to_cyclotomic(self) -> CycInt:
        if self.exponent is None:
            return CycInt.zero(self.order)
        return CycInt.root(self.order, self.exponent, self.sign)


def _group_exponent(ctx: FieldCtx, m: int, x: FieldElement, order: int) -> int:
    if order < 1 or (ctx.q - 1) % order:
        raise CharacterDomainError(
            f"root order {order} does not divide q-1={ctx.q - 1}"
        )
    return (m * ctx.dlog(x)) % (ctx.q - 1)


def chi_pow(ctx: FieldCtx, m: int, x: FieldElement, order: int) -> CharValue:
    """chi^m(x) as a root of unity of order ``order``.

    Requires (q-1) | m * dlog(x) * order; anything else would leave mu_order.
    """
    if x.is_zero:
        return CharValue(order, None)
    e = _group_exponent(ctx, m, x, order)
    scaled, rest = divmod(e * order, ctx.q - 1)
    if rest:
        raise CharacterDomainError(
            f"chi^{m}({x}) is not an {order}-th root of unity in F_{ctx.q}"
        )
    return CharValue(order, scaled % order)


def chi_pow_signed(ctx: FieldCtx, m: int, x: FieldElement, order: int) -> CharValue:
    """Like ``chi_pow`` but also accepts values in -mu_order when order is odd.

    For odd N, mu_2N = mu_N u -mu_N, so zeta_2N^e with e odd equals
    -zeta_N^((e + N) / 2).
    """
    if x.is_zero:
        return CharValue(order, None)
    e = _group_exponent(ctx, m, x, order)
    scaled, rest = divmod(e * order, ctx.q - 1)
    if not rest:
        return CharValue(order, scaled % order)
    doubled, rest = divmod(2 * e * order, ctx.q - 1)
    if rest or order % 2 == 0:
        raise CharacterDomainError(
            f"chi^{m}({x}) is not a signed {order}-th root of unity in F_{ctx.q}"
        )
    return CharValue(order, ((doubled + order) // 2) % order, -1)


def character_vector(
    ctx: FieldCtx, m: int, elements: Sequence[FieldElement], order: int
) -> List[CharValue]:
    """The vector (chi^m(a_1), ..., chi^m(a_n))."""
    return [chi_pow(ctx, m, a, order) for a in elements]
