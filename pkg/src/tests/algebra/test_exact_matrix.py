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

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix, Poly, symbols

from subgroup_determinants.algebra.exact_matrix import (
    BigIntMatrix,
    LinearPoly,
    bareiss_det,
    circulant,
    cofactor_det,
    det_linear,
    integer_sqrt_exact,
)
from subgroup_determinants.errors import DegreeGuardError

t = symbols("t")


@st.composite
def square_matrices(draw, max_size=5, bound=9):
    n = draw(st.integers(min_value=1, max_value=max_size))
    entries = st.integers(min_value=-bound, max_value=bound)
    rows = draw(st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n))
    return BigIntMatrix.from_rows(rows)


class TestBigIntMatrix:
    def test_must_be_square(self):
        with pytest.raises(ValueError):
            BigIntMatrix.from_rows([[1, 2], [3]])

    def test_plus_all_ones(self):
        m = BigIntMatrix.identity(2).plus_all_ones(3)
        assert m.rows == ((4, 3), (3, 4))

    def test_permuted(self):
        m = BigIntMatrix.from_rows([[1, 2], [3, 4]])
        assert m.permuted([1, 0]).rows == ((4, 3), (2, 1))

    def test_row_sums(self):
        assert BigIntMatrix.from_rows([[1, -2, 0], [0, 1, -2], [-2, 0, 1]]).row_sums() == [-1] * 3


class TestBareissDet:
    def test_empty(self):
        assert bareiss_det(BigIntMatrix(())) == 1

    def test_small_cases(self):
        assert bareiss_det(BigIntMatrix.from_rows([[1, 2], [3, 4]])) == -2
        assert bareiss_det(BigIntMatrix.identity(6)) == 1
        assert bareiss_det(BigIntMatrix.from_rows([[1, 1, 4], [2, 2, 5], [3, 3, 6]])) == 0

    def test_zero_pivot_swaps_columns(self):
        assert bareiss_det(BigIntMatrix.from_rows([[0, 1], [1, 0]])) == -1
        assert bareiss_det(BigIntMatrix.from_rows([[0, 2, 1], [1, 0, 0], [0, 1, 3]])) == -5

    def test_zero_pivot_row(self):
        assert bareiss_det(BigIntMatrix.from_rows([[0, 0], [0, 5]])) == 0

    def test_large_entries_stay_exact(self):
        big = 10 ** 40
        m = BigIntMatrix.from_rows([[big, 1], [1, big]])
        assert bareiss_det(m) == big * big - 1

    @given(square_matrices())
    def test_agrees_with_sympy(self, m):
        assert bareiss_det(m) == Matrix([list(row) for row in m.rows]).det()

    @given(square_matrices(max_size=4))
    def test_agrees_with_cofactor_expansion(self, m):
        assert bareiss_det(m) == cofactor_det(m)

    @given(square_matrices(), st.data())
    def test_invariant_under_simultaneous_permutation(self, m, data):
        perm = data.draw(st.permutations(range(m.n)))
        assert bareiss_det(m.permuted(perm)) == bareiss_det(m)


class TestDetLinear:
    def test_a2_over_f7(self):
        m0 = BigIntMatrix.from_rows([[1, -2, 0], [0, 1, -2], [-2, 0, 1]])
        assert det_linear(m0) == LinearPoly(-7, 21)

    @given(square_matrices(max_size=4))
    def test_matches_symbolic_determinant(self, m):
        symbolic = Matrix([[x + t for x in row] for row in m.rows]).det()
        coeffs = Poly(symbolic, t).all_coeffs() if symbolic.has(t) else [symbolic]
        b, a = ([0] + [int(c) for c in coeffs])[-2:]
        assert det_linear(m) == LinearPoly(a, b)

    def test_rank_one_cases(self):
        assert det_linear(BigIntMatrix.from_rows([[0]])) == LinearPoly(0, 1)
        assert det_linear(BigIntMatrix.from_rows([[0, 0], [0, 0]])) == LinearPoly(0, 0)
        assert det_linear(BigIntMatrix.from_rows([[-1]])) == LinearPoly(-1, 1)

    def test_degree_guard(self, mocker):
        mocker.patch(
            "subgroup_determinants.algebra.exact_matrix.bareiss_det", side_effect=[0, 1, 5]
        )
        with pytest.raises(DegreeGuardError):
            det_linear(BigIntMatrix.identity(2))


class TestLinearPoly:
    def test_arithmetic(self):
        p = LinearPoly(-7, 21)
        assert p(0) == -7 and p(1) == 14
        assert p + LinearPoly(7, 1) == LinearPoly(0, 22)
        assert p + 7 == LinearPoly(0, 21)
        assert p - p == LinearPoly(0, 0)
        assert (p - p).is_zero
        assert 2 * p == LinearPoly(-14, 42)

    def test_serialisation(self):
        p = LinearPoly(-7, 21)
        assert str(p) == "21*t - 7"
        assert p.to_json() == {"a": "-7", "b": "21"}


class TestCirculant:
    def test_cyclic_shift(self):
        m = circulant((0, 1, 0))
        assert m.rows == ((0, 0, 1), (1, 0, 0), (0, 1, 0))
        assert bareiss_det(m) == 1

    def test_single_entry(self):
        assert circulant((5,)).rows == ((5,),)

    @given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
    def test_row_sums(self, b):
        assert circulant(b).row_sums() == [sum(b)] * len(b)

    def test_linear_entries(self):
        m = circulant((LinearPoly(2, 1), LinearPoly(1, 1), LinearPoly(1, 1)))
        assert m == circulant((2, 1, 1))
        # eigenvalues 4 + 3t, 1, 1
        assert det_linear(m) == LinearPoly(4, 3)

    def test_rejects_other_t_coefficients(self):
        with pytest.raises(ValueError):
            circulant((LinearPoly(2, 3),))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            circulant(())


class TestIntegerSqrt:
    @pytest.mark.parametrize("x,root", [(0, 0), (1, 1), (49, 7), ((10 ** 30 + 7) ** 2, 10 ** 30 + 7)])
    def test_squares(self, x, root):
        assert integer_sqrt_exact(x) == root

    @pytest.mark.parametrize("x", [-4, 2, 50, (10 ** 30) ** 2 + 1])
    def test_non_squares(self, x):
        assert integer_sqrt_exact(x) is None
