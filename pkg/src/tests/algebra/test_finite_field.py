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
from sympy import Poly, symbols

from subgroup_determinants.algebra.finite_field import (
    FieldElement,
    find_irreducible,
    is_irreducible,
    make_field,
    order_check,
    prime_power_parts,
    subgroup_dk,
)
from subgroup_determinants.errors import FieldParameterError

F25 = make_field(5, 2)
F27 = make_field(3, 3)

codes_25 = st.integers(min_value=0, max_value=24)
codes_27 = st.integers(min_value=0, max_value=26)


def _sympy_irreducible(coeffs, p):
    x = symbols("x")
    return Poly(list(reversed(coeffs)), x, modulus=p).is_irreducible


class TestFindIrreducible:
    def test_prime_field_sentinel(self):
        assert find_irreducible(7, 1) == (0, 1)

    def test_f9_modulus(self):
        assert find_irreducible(3, 2) == (1, 0, 1)

    def test_f27_modulus(self):
        modulus = find_irreducible(3, 3)
        assert modulus == (1, 0, 2, 1)
        assert _sympy_irreducible(modulus, 3)

    @pytest.mark.parametrize("p,s", [(3, 2), (3, 4), (5, 2), (5, 3), (7, 2), (11, 2)])
    def test_agrees_with_sympy(self, p, s):
        modulus = find_irreducible(p, s)
        assert len(modulus) == s + 1 and modulus[-1] == 1
        assert _sympy_irreducible(modulus, p)

    def test_rejects_reducible(self):
        # x^2 - 1 = (x - 1)(x + 1)
        assert not is_irreducible((2, 0, 1), 3)

    @pytest.mark.parametrize("p,s", [(2, 1), (4, 1), (9, 1), (3, 0)])
    def test_bad_parameters(self, p, s):
        with pytest.raises(FieldParameterError):
            find_irreducible(p, s)


class TestMakeField:
    def test_f7_generator(self, f7):
        assert f7.g == FieldElement((3,))
        assert f7.q == 7

    def test_f3_generator(self, f3):
        assert f3.g == FieldElement((2,))

    def test_f9_generator_has_full_order(self, f9):
        assert f9.q == 9
        assert f9.g == FieldElement((1, 1))
        assert f9.pow(f9.g, 4) != f9.one
        assert f9.pow(f9.g, 8) == f9.one

    def test_dlog_is_a_bijection(self, f9):
        assert sorted(f9.dlog(f9.exp(e)) for e in range(8)) == list(range(8))

    def test_size_guard(self):
        with pytest.raises(FieldParameterError):
            make_field(7, 3, max_field_size=100)

    def test_next_generator(self):
        ctx = make_field(7, generator_rank=1)
        assert ctx.g == FieldElement((5,))

    def test_missing_generator_rank(self):
        with pytest.raises(FieldParameterError):
            make_field(7, generator_rank=2)

    @pytest.mark.parametrize("p", [4, 9, 1])
    def test_rejects_bad_characteristic(self, p):
        with pytest.raises(FieldParameterError):
            make_field(p)


class TestPrimePowerParts:
    @pytest.mark.parametrize("q,parts", [(3, (3, 1)), (27, (3, 3)), (343, (7, 3)), (25, (5, 2))])
    def test_prime_powers(self, q, parts):
        assert prime_power_parts(q) == parts

    @pytest.mark.parametrize("q", [1, 2, 8, 15, 45])
    def test_rejected(self, q):
        with pytest.raises(FieldParameterError):
            prime_power_parts(q)


class TestArithmetic:
    def test_f9_product(self, f9):
        # (x + 1)(x + 2) = x^2 + 2 = 1 modulo x^2 + 1 over F_3
        assert f9.mul(f9.element((1, 1)), f9.element((2, 1))) == f9.one

    def test_element_reduces_long_vectors(self, f9):
        assert f9.element((2, 0, 1)) == f9.element((1,))

    def test_trivial_cases(self, f7):
        assert f7.inv(f7.one) == f7.one
        assert f7.neg(f7.zero) == f7.zero
        assert f7.pow(f7.zero, 0) == f7.one

    def test_zero_has_no_inverse(self, f7):
        with pytest.raises(FieldParameterError):
            f7.inv(f7.zero)
        with pytest.raises(FieldParameterError):
            f7.dlog(f7.zero)

    def test_element_codes_round_trip(self, f9):
        assert [f9.decode(f9.code(x)) for x in f9.elements()] == list(f9.elements())

    @given(codes_25, codes_25, codes_25)
    def test_field_axioms_f25(self, a, b, c):
        x, y, z = F25.decode(a), F25.decode(b), F25.decode(c)
        assert F25.add(F25.add(x, y), z) == F25.add(x, F25.add(y, z))
        assert F25.mul(F25.mul(x, y), z) == F25.mul(x, F25.mul(y, z))
        assert F25.mul(x, F25.add(y, z)) == F25.add(F25.mul(x, y), F25.mul(x, z))
        assert F25.mul(x, y) == F25.mul(y, x)
        assert F25.sub(F25.add(x, y), y) == x
        if not x.is_zero:
            assert F25.mul(x, F25.inv(x)) == F25.one

    @given(codes_27, codes_27)
    def test_table_product_matches_polynomial_product(self, a, b):
        x, y = F27.decode(a), F27.decode(b)
        raw = [0] * 5
        for i, u in enumerate(x.coeffs):
            for j, v in enumerate(y.coeffs):
                raw[i + j] += u * v
        assert F27.mul(x, y) == F27.element(raw)

    @given(codes_27.filter(bool), codes_27.filter(bool))
    def test_dlog_is_multiplicative(self, a, b):
        x, y = F27.decode(a), F27.decode(b)
        assert F27.dlog(F27.mul(x, y)) == (F27.dlog(x) + F27.dlog(y)) % 26


class TestOrderCheck:
    def test_f7(self, f7):
        assert order_check(f7, f7.element(3))
        assert not order_check(f7, f7.element(2))
        assert not order_check(f7, f7.one)

    def test_zero(self, f7):
        with pytest.raises(FieldParameterError):
            order_check(f7, f7.zero)


class TestSubgroupDk:
    def test_squares_mod_7(self, f7):
        assert subgroup_dk(f7, 2) == [f7.element(1), f7.element(2), f7.element(4)]

    def test_trivial_subgroups(self, f7):
        assert subgroup_dk(f7, 6) == [f7.one]
        assert set(subgroup_dk(f7, 1)) == set(f7.nonzero_elements())
        assert subgroup_dk(f7, 1)[1] == f7.g

    def test_k_must_divide(self, f7):
        with pytest.raises(FieldParameterError):
            subgroup_dk(f7, 4)

    @pytest.mark.parametrize("p,s", [(3, 1), (5, 1), (3, 2), (13, 1), (5, 2), (3, 3), (31, 1)])
    def test_matches_kth_powers(self, p, s):
        ctx = make_field(p, s)
        q = ctx.q
        minus_one = ctx.neg(ctx.one)
        for k in range(1, q):
            if (q - 1) % k:
                continue
            dk = subgroup_dk(ctx, k)
            powers = {ctx.pow(x, k) for x in ctx.nonzero_elements()}
            assert len(dk) == len(set(dk)) == (q - 1) // k
            assert set(dk) == powers
            assert (minus_one in powers) == (q % (2 * k) == 1)
