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

import random

import pytest

from subgroup_determinants.errors import SweepConfigError
from subgroup_determinants.pipelines.selftest.nodes import (
    PROPERTIES,
    SelftestConfig,
    _fold,
    bareiss_oracle,
    circulant_lemma,
    classical_determinants,
    curve_counts,
    cyclotomic_identities,
    generator_independence,
    run_selftest,
    selftest_passed,
    selftest_records,
    subgroup_structure,
    summarise_selftest,
)
from subgroup_determinants.pipelines.verification.report import Check

SMALL = SelftestConfig(
    seed=0,
    random_cases=20,
    max_q=13,
    carlitz_max_p=13,
    chapman_max_p=11,
    sun_max_p=11,
    cyclotomic_max_n=64,
)


@pytest.fixture(scope="module")
def checks():
    return run_selftest(SMALL)


class TestSelftestConfig:
    def test_fields(self):
        assert [ctx.q for ctx in SMALL.fields()] == [3, 5, 7, 9, 11, 13]

    @pytest.mark.parametrize("params", [{"random_cases": 0}, {"max_q": 2}, {"cyclotomic_max_n": 0}])
    def test_invalid(self, params):
        with pytest.raises(SweepConfigError):
            SelftestConfig(**params)

    def test_unknown_parameter(self):
        with pytest.raises(SweepConfigError):
            SelftestConfig.from_params({"sead": 1})


class TestProperties:
    def test_subgroups(self):
        checks = list(subgroup_structure(SMALL, random.Random(0)))
        # two checks per divisor of q - 1 over F_3 ... F_13
        assert len(checks) == 2 * (2 + 3 + 4 + 4 + 4 + 6)
        assert all(check.passed for check in checks)

    def test_random_properties(self):
        rng = random.Random(5)
        for prop in (circulant_lemma, bareiss_oracle):
            (check,) = prop(SMALL, rng)
            assert check.passed, check.detail

    def test_classical_determinants(self):
        checks = list(classical_determinants(SMALL, random.Random(0)))
        chapman = {c.detail.split(":")[0]: c for c in checks if c.name == "chapman"}
        assert chapman["p = 3"].advisory and not chapman["p = 3"].passed
        assert chapman["p = 7"].passed and not chapman["p = 7"].advisory
        assert all(c.passed for c in checks if c.name == "carlitz_constant_term")
        assert len([c for c in checks if c.name == "sun_matrix_form"]) == 3

    def test_raised_chapman_threshold(self):
        config = SelftestConfig(carlitz_max_p=2, chapman_min_p=11, chapman_max_p=11, sun_max_p=2)
        checks = list(classical_determinants(config, random.Random(0)))
        assert [c.advisory for c in checks] == [True, True, False]

    def test_lowered_chapman_threshold(self):
        config = SelftestConfig(carlitz_max_p=2, chapman_min_p=3, chapman_max_p=7, sun_max_p=2)
        checks = list(classical_determinants(config, random.Random(0)))
        assert [(c.advisory, c.passed) for c in checks] == [(False, False), (False, True)]

    def test_char_sums_against_traces_for_both_signs(self):
        config = SelftestConfig(max_q=7)
        checks = [
            c for c in curve_counts(config, random.Random(0)) if c.name == "char_sum_trace"
        ]
        # F_3, F_5, F_7 with 2 + 3 + 4 divisors, two signs each
        assert len(checks) == 18
        assert all(c.passed for c in checks), [c.detail for c in checks if not c.passed]
        assert any(c.detail.startswith("F_3, k = 1, sign = -1") for c in checks)

    def test_cyclotomic_product_up_to_bound(self):
        config = SelftestConfig(random_cases=10, cyclotomic_max_n=30)
        checks = list(cyclotomic_identities(config, random.Random(0)))
        products = [c for c in checks if c.name == "cyclotomic_product"]
        assert len(products) == 30
        assert all(c.passed for c in checks)

    def test_exhaustive_bound(self):
        config = SelftestConfig(max_q=13, exhaustive_max_q=7)
        assert [ctx.q for ctx in config.exhaustive_fields()] == [3, 5, 7]
        # one check per divisor of q - 1 over F_3, F_5, F_7
        assert len(list(generator_independence(config, random.Random(0)))) == 2 + 3 + 4


class TestDefaults:
    def test_match_parameters(self):
        config = SelftestConfig()
        assert config.random_cases >= 1000
        assert config.max_q >= 200
        assert config.cyclotomic_max_n >= 512


class TestFold:
    def test_groups_by_name_and_advisory(self):
        folded = _fold(
            [
                Check("a", True, "x"),
                Check("a", False, "broken"),
                Check("b", False, "small", advisory=True),
                Check("b", True, "large"),
            ]
        )
        assert [(c.name, c.passed, c.advisory) for c in folded] == [
            ("a", False, False),
            ("b_advisory", False, True),
            ("b", True, False),
        ]
        assert folded[0].detail == "1/2 cases pass; first failure: broken"


class TestRunSelftest:
    def test_passes(self, checks):
        assert selftest_passed(checks)

    def test_names(self, checks):
        names = {check.name for check in checks}
        assert {
            "field_axioms",
            "discrete_log",
            "subgroup_oracle",
            "minus_one_membership",
            "phi_euler_criterion",
            "phi_multiplicative",
            "phi_is_chi_half",
            "quadratic_sums",
            "character_orthogonality",
            "cyclotomic_product",
            "as_integer_representation",
            "circulant_square_lemma",
            "bareiss_oracle",
            "jacobi_norms",
            "curve_count_oracle",
            "char_sum_trace",
            "generator_independence",
            "carlitz_constant_term",
            "chapman",
            "sun_matrix_form",
        } <= names
        assert len(names) == len(checks)

    def test_advisory_mismatches(self, checks):
        advisory = {c.name: c for c in checks if c.advisory}
        assert set(advisory) == {"carlitz_t_coefficient_advisory", "chapman_advisory"}
        assert not any(c.passed for c in advisory.values())

    def test_deterministic(self, checks):
        assert run_selftest(SMALL) == checks
        assert run_selftest(
            {
                "seed": 0,
                "random_cases": 20,
                "max_q": 13,
                "carlitz_max_p": 13,
                "chapman_max_p": 11,
                "sun_max_p": 11,
                "cyclotomic_max_n": 64,
            }
        ) == checks

    def test_every_property_contributes(self):
        rng = random.Random(0)
        assert all(list(prop(SMALL, rng)) for prop in PROPERTIES)

    def test_records(self, checks):
        records = selftest_records(checks)
        assert [r["name"] for r in records] == [c.name for c in checks]
        assert all(set(r) >= {"name", "pass", "detail"} for r in records)

    def test_summary_logs_failures(self, caplog):
        summarise_selftest([Check("field_axioms", False, "F_7: broken")])
        assert "Selftest property field_axioms failed: F_7: broken" in caplog.text
