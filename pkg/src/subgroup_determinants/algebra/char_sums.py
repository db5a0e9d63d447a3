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

"""Jacobi sums, the eigenvalues lambda_m, and point counts of y^2 = x^k +- 1."""
from dataclasses import dataclass
from math import gcd
from typing import List

from subgroup_determinants.algebra.characters import chi_pow, chi_pow_signed, phi
from subgroup_determinants.algebra.cyclotomic import CycInt
from subgroup_determinants.algebra.finite_field import FieldCtx, subgroup_dk


def jacobi_sum(ctx: FieldCtx, i: int, j: int, order: int) -> CycInt:
    """J(chi^i, chi^j) = sum_x chi^i(x) chi^j(1 - x), as an element of Z[zeta_order].

    Both characters vanish at 0 (the trivial one included), so x = 0 and x = 1
    contribute nothing.
    """
    total = [0] * order
    one = ctx.one
    for x in ctx.elements():
        if x.is_zero or x == one:
            continue
        u = chi_pow_signed(ctx, i, x, order)
        v = chi_pow_signed(ctx, j, ctx.sub(one, x), order)
        total[(u.exponent + v.exponent) % order] += u.sign * v.sign
    return CycInt(order, tuple(total))


def minimal_root_order(ctx: FieldCtx, i: int, j: int) -> int:
    """Smallest N such that chi^i and chi^j both take values in +-mu_N."""
    group = ctx.q - 1
    order_i = group // gcd(i % group, group)
    order_j = group // gcd(j % group, group)
    common = order_i * order_j // gcd(order_i, order_j)
    if common % 2 == 0 and (common // 2) % 2 == 1:
        return common // 2
    return common


def eigen_weights(ctx: FieldCtx, k: int) -> List[int]:
    """w_j = phi(1 + a_j) + phi(1 - a_j) over D_k in generator-power order."""
    one = ctx.one
    return [
        phi(ctx, ctx.add(one, a)) + phi(ctx, ctx.sub(one, a)) for a in subgroup_dk(ctx, k)
    ]


def lambda_m(ctx: FieldCtx, k: int, m: int) -> CycInt:
    """lambda_m = sum_j (phi(1 + a_j) + phi(1 - a_j)) chi^m(a_j) in Z[zeta_n]."""
    elements = subgroup_dk(ctx, k)
    n = len(elements)
    total = [0] * n
    for w, a in zip(eigen_weights(ctx, k), elements):
        if w:
            total[chi_pow(ctx, m, a, n).exponent] += w
    return CycInt(n, tuple(total))


@dataclass(frozen=True)
class CurveCount:
    """Points of y^2 = x^k + sign over F_q, with exactly one point at infinity."""

    q: int
    k: int
    sign: int
    points: int

    @property
    def trace(self) -> int:
        return self.q + 1 - self.points

    @property
    def genus(self) -> int:
        return max((self.k - 1) // 2, 0)

    @property
    def weil_ok(self) -> bool:
        """Weil bound sanity check against the smooth model.

        For even k the smooth model has two points at infinity, one more than
        the count kept here, so its trace is ``trace - 1``.
        """
        smooth_trace = self.trace - (1 if self.k % 2 == 0 else 0)
        return smooth_trace * smooth_trace <= 4 * self.genus * self.genus * self.q

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "sign": self.sign,
            "points": self.points,
            "trace": self.trace,
            "genus": self.genus,
            "weil_ok": self.weil_ok,
        }


def _shifted_power(ctx: FieldCtx, x, k: int, sign: int):
    return ctx.add(ctx.pow(x, k), ctx.element(sign))


def curve_count(ctx: FieldCtx, k: int, sign: int) -> CurveCount:
    """1 + sum_x (1 + phi(x^k + sign)); the trace is c_k (sign +1) or d_k (sign -1)."""
    points = 1 + sum(1 + phi(ctx, _shifted_power(ctx, x, k, sign)) for x in ctx.elements())
    return CurveCount(ctx.q, k, sign, points)


def brute_force_points(ctx: FieldCtx, k: int, sign: int) -> int:
    """Count |{inf} u {(x, y) : y^2 = x^k + sign}| by full pair enumeration."""
    elements = list(ctx.elements())
    squares = [ctx.pow(y, 2) for y in elements]
    points = 1
    for x in elements:
        rhs = _shifted_power(ctx, x, k, sign)
        points += sum(1 for y2 in squares if y2 == rhs)
    return points


def char_sum_power(ctx: FieldCtx, k: int, sign: int) -> int:
    """sum over x in F_q^x of phi(x^k + sign)."""
    return sum(phi(ctx, _shifted_power(ctx, x, k, sign)) for x in ctx.nonzero_elements())
