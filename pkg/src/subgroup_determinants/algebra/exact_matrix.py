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

"""Exact integer determinants, the family M0 + t*J, and circulants."""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy import integer_nthroot

from subgroup_determinants.errors import DegreeGuardError


@dataclass(frozen=True)
class LinearPoly:
    """a + b*t with exact integer coefficients."""

    a: int
    b: int = 0

    def __call__(self, t: int) -> int:
        return self.a + self.b * t

    def __add__(self, other: "LinearPoly") -> "LinearPoly":
        if isinstance(other, int):
            return LinearPoly(self.a + other, self.b)
        return LinearPoly(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "LinearPoly":
        return LinearPoly(-self.a, -self.b)

    def __sub__(self, other: "LinearPoly") -> "LinearPoly":
        return self + (-other)

    def __mul__(self, c: int) -> "LinearPoly":
        return LinearPoly(self.a * c, self.b * c)

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}

    def __str__(self) -> str:
        return f"{self.b}*t {'-' if self.a < 0 else '+'} {abs(self.a)}"


@dataclass(frozen=True)
class BigIntMatrix:
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BigIntMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "BigIntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def plus_all_ones(self, t: int) -> "BigIntMatrix":
        """M0 + t*J."""
        return BigIntMatrix.from_rows([[x + t for x in row] for row in self.rows])

    def permuted(self, perm: Sequence[int]) -> "BigIntMatrix":
        """Simultaneous row and column permutation: entry (i, j) <- (perm[i], perm[j])."""
        return BigIntMatrix.from_rows(
            [[self.rows[pi][pj] for pj in perm] for pi in perm]
        )

    def row_sums(self) -> List[int]:
        return [sum(row) for row in self.rows]


def bareiss_det(matrix: BigIntMatrix) -> int:
    """Fraction-free Gaussian elimination; every division is exact.

    A zero pivot is replaced by swapping in a later column of the pivot row;
    a pivot row with no nonzero entry left means the determinant is 0.
    """
    rows = [list(row) for row in matrix.rows]
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = rows[k]
        if pivot_row[k] == 0:
            swap = next((c for c in range(k + 1, n) if pivot_row[c]), None)
            if swap is None:
                return 0
            for row in rows:
                row[k], row[swap] = row[swap], row[k]
            sign = -sign
        pivot = pivot_row[k]
        tail = pivot_row[k + 1 :]
        for i in range(k + 1, n):
            row = rows[i]
            factor = row[k]
            if factor:
                row[k + 1 :] = [
                    (pivot * x - factor * y) // prev for x, y in zip(row[k + 1 :], tail)
                ]
            else:
                row[k + 1 :] = [(pivot * x) // prev for x in row[k + 1 :]]
        prev = pivot
    return sign * rows[n - 1][n - 1]


def cofactor_det(matrix: BigIntMatrix) -> int:
    """Laplace expansion along the first row. Exponential; small matrices only."""

    def expand(rows: List[List[int]]) -> int:
        if not rows:
            return 1
        if len(rows) == 1:
            return rows[0][0]
        total = 0
        for j, x in enumerate(rows[0]):
            if x:
                minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
                total += (-1) ** j * x * expand(minor)
        return total

    return expand([list(row) for row in matrix.rows])


def det_linear(m0: BigIntMatrix) -> LinearPoly:
    """det(M0 + t*J) as a + b*t.

    The all-ones update has rank one, so the determinant is at most linear in
    t; it is interpolated from t = 0, 1 and confirmed at t = 2.
    """
    d0 = bareiss_det(m0)
    d1 = bareiss_det(m0.plus_all_ones(1))
    poly = LinearPoly(d0, d1 - d0)
    d2 = bareiss_det(m0.plus_all_ones(2))
    if poly(2) != d2:
        raise DegreeGuardError(
            f"det(M0 + 2J) = {d2} but linear interpolation predicts {poly(2)}"
        )
    return poly


Entry = Union[int, LinearPoly]


def circulant(b: Sequence[Entry]) -> BigIntMatrix:
    """C(b_0, ..., b_{n-1}) with entry (i, j) = b_{(i-j) mod n}.

    LinearPoly entries must all read c_i + t; the constant parts are returned
    and the t-part is the implicit all-ones matrix handled by ``det_linear``.
    """
    n = len(b)
    if n < 1:
        raise ValueError("circulant needs at least one entry")
    constants = []
    for entry in b:
        if isinstance(entry, LinearPoly):
            if entry.b != 1:
                raise ValueError(f"circulant entry {entry} is not of the form c + t")
            constants.append(entry.a)
        else:
            constants.append(entry)
    return BigIntMatrix.from_rows(
        [[constants[(i - j) % n] for j in range(n)] for i in range(n)]
    )


def integer_sqrt_exact(x: int) -> Optional[int]:
    """r >= 0 with r*r == x, or None."""
    if x < 0:
        return None
    root, exact = integer_nthroot(x, 2)
    return int(root) if exact else None
