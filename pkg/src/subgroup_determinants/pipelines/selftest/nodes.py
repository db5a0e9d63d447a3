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

"""Nodes of the 'selftest' pipeline.

Each property below runs over a family of small fields, matrices or primes
and yields named ``Check`` objects; ``run_selftest`` folds them into one
aggregated check per name. All randomness comes from a single seeded
``random.Random``, so the same seed gives the same records.
"""
import logging
import random
from collections import OrderedDict
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterator, List

from sympy import divisors, primerange

from subgroup_determinants.algebra.char_sums import (
    brute_force_points,
    char_sum_power,
    curve_count,
    jacobi_sum,
    minimal_root_order,
)
from subgroup_determinants.algebra.characters import chi_pow, phi, phi_euler
from subgroup_determinants.algebra.cyclotomic import (
    CycInt,
    as_integer,
    cyclotomic_poly,
)
from subgroup_determinants.algebra.exact_matrix import (
    BigIntMatrix,
    bareiss_det,
    cofactor_det,
)
from subgroup_determinants.algebra.finite_field import (
    FieldCtx,
    make_field,
    order_check,
    subgroup_dk,
)
from subgroup_determinants.errors import SweepConfigError
from subgroup_determinants.pipelines.verification.checks import (
    carlitz_cross_check,
    chapman_cross_check,
    sun_conjecture_cross_check,
    verify_generator_independence,
    verify_lemma_circulant_square,
)
from subgroup_determinants.pipelines.verification.nodes import enumerate_prime_powers
from subgroup_determinants.pipelines.verification.report import Check

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelftestConfig:
    seed: int = 0
    random_cases: int = 1000
    max_q: int = 200
    # generator independence and orthogonality cost O(q^3) and O(q^2 phi(q - 1))
    exhaustive_max_q: int = 81
    cyclotomic_max_n: int = 512
    carlitz_max_p: int = 100
    chapman_min_p: int = 7
    chapman_max_p: int = 100
    sun_max_p: int = 100

    def __post_init__(self):
        if self.random_cases < 1:
            raise SweepConfigError(f"random_cases must be positive, got {self.random_cases}")
        if self.max_q < 3:
            raise SweepConfigError(f"max_q must be at least 3, got {self.max_q}")
        if self.cyclotomic_max_n < 1:
            raise SweepConfigError(
                f"cyclotomic_max_n must be positive, got {self.cyclotomic_max_n}"
            )

    @classmethod
    def from_params(cls, params: Dict[str, Any]) -> "SelftestConfig":
        unknown = set(params) - set(cls.__dataclass_fields__)
        if unknown:
            raise SweepConfigError(f"unknown selftest parameters: {sorted(unknown)}")
        return cls(**params)

    def fields(self) -> List[FieldCtx]:
        return [make_field(p, s) for _, p, s in enumerate_prime_powers(3, self.max_q)]

    def exhaustive_fields(self) -> List[FieldCtx]:
        return [ctx for ctx in self.fields() if ctx.q <= self.exhaustive_max_q]


Property = Callable[[SelftestConfig, random.Random], Iterator[Check]]


def _convolve(x, y) -> List[int]:
    out = [0] * (len(x) + len(y) - 1)
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            out[i + j] += a * b
    return out


def field_axioms(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    for ctx in config.fields():
        elements = list(ctx.elements())
        bad = None
        for _ in range(config.random_cases):
            x, y, z = (rng.choice(elements) for _ in range(3))
            xy = ctx.mul(x, y)
            if (
                ctx.add(ctx.add(x, y), z) != ctx.add(x, ctx.add(y, z))
                or ctx.mul(xy, z) != ctx.mul(x, ctx.mul(y, z))
                or ctx.mul(x, ctx.add(y, z)) != ctx.add(xy, ctx.mul(x, z))
                or xy != ctx.element(_convolve(x.coeffs, y.coeffs))
                or ctx.add(x, ctx.neg(x)) != ctx.zero
                or (not x.is_zero and ctx.mul(x, ctx.inv(x)) != ctx.one)
            ):
                bad = (x, y, z)
                break
        yield Check(
            "field_axioms",
            bad is None,
            f"F_{ctx.q}: {config.random_cases} triples"
            if bad is None
            else f"F_{ctx.q}: fails at {', '.join(str(v) for v in bad)}",
        )


def discrete_logs(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    for ctx in config.fields():
        nonzero = list(ctx.nonzero_elements())
        bad = [
            (x, y)
            for x, y in (
                (rng.choice(nonzero), rng.choice(nonzero))
                for _ in range(config.random_cases)
            )
            if ctx.dlog(ctx.mul(x, y)) != (ctx.dlog(x) + ctx.dlog(y)) % (ctx.q - 1)
        ]
        yield Check(
            "discrete_log",
            not bad and order_check(ctx, ctx.g),
            f"F_{ctx.q}: g = {ctx.g}, {len(bad)} failing pairs",
        )


def subgroup_structure(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    for ctx in config.fields():
        q = ctx.q
        nonzero = list(ctx.nonzero_elements())
        minus_one = ctx.neg(ctx.one)
        for k in divisors(q - 1):
            k = int(k)
            dk = subgroup_dk(ctx, k)
            brute = {ctx.pow(x, k) for x in nonzero}
            yield Check(
                "subgroup_oracle",
                set(dk) == brute and len(dk) == len(brute),
                f"F_{q}, k = {k}: |D_k| = {len(dk)}",
            )
            yield Check(
                "minus_one_membership",
                (minus_one in brute) == (q % (2 * k) == 1),
                f"F_{q}, k = {k}",
            )


def quadratic_character(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    for ctx in config.fields():
        elements = list(ctx.elements())
        euler_ok = all(phi(ctx, x) == phi_euler(ctx, x) for x in elements)
        values = {x: phi(ctx, x) for x in elements}
        multiplicative = all(
            values[ctx.mul(x, y)] == values[x] * values[y]
            for x in elements
            for y in elements
        )
        yield Check("phi_euler_criterion", euler_ok, f"F_{ctx.q}")
        yield Check("phi_multiplicative", multiplicative, f"F_{ctx.q}: all pairs")
        half = (ctx.q - 1) // 2
        agrees = all(
            values[x] == (1 if chi_pow(ctx, half, x, 2).exponent == 0 else -1)
            for x in elements
            if not x.is_zero
        )
        yield Check("phi_is_chi_half", agrees, f"F_{ctx.q}")
        one = ctx.one
        squares = [ctx.pow(x, 2) for x in elements]
        plus = sum(values[ctx.add(x2, one)] for x2 in squares)
        minus = sum(values[ctx.sub(x2, one)] for x2 in squares)
        yield Check(
            "quadratic_sums",
            plus == -1 and minus == -1,
            f"F_{ctx.q}: sum phi(x^2+1) = {plus}, sum phi(x^2-1) = {minus}",
        )


def character_orthogonality(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    for ctx in config.exhaustive_fields():
        order = ctx.q - 1
        nonzero = list(ctx.nonzero_elements())
        wrong = []
        for m in range(order):
            total = [0] * order
            for x in nonzero:
                total[chi_pow(ctx, m, x, order).exponent] += 1
            expected = order if m == 0 else 0
            if CycInt(order, tuple(total)) != expected:
                wrong.append(m)
        yield Check(
            "character_orthogonality",
            not wrong,
            f"F_{ctx.q}: {order} characters" if not wrong else f"F_{ctx.q}: m in {wrong[:5]}",
        )


def cyclotomic_identities(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    for n in range(1, config.cyclotomic_max_n + 1):
        product = [1]
        for d in divisors(n):
            product = _convolve(product, cyclotomic_poly(int(d)).coeffs)
        yield Check(
            "cyclotomic_product",
            product == [-1] + [0] * (n - 1) + [1],
            f"prod_(d | {n}) Phi_d = x^{n} - 1",
        )
    bad = 0
    for _ in range(config.random_cases):
        n = rng.randint(1, 40)
        value = rng.randint(-50, 50)
        phi_n = cyclotomic_poly(n).coeffs
        r = [rng.randint(-5, 5) for _ in range(n - len(phi_n) + 1)]
        shifted = [0] * n
        for i, c in enumerate(_convolve(phi_n, r)):
            shifted[i % n] += c
        shifted[0] += value
        if as_integer(CycInt(n, tuple(shifted))) != value:
            bad += 1
    yield Check(
        "as_integer_representation",
        bad == 0,
        f"{config.random_cases} random c + Phi_n * r, {bad} failures",
    )


def circulant_lemma(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    failures = 0
    for _ in range(config.random_cases):
        n = rng.choice(range(1, 16, 2))
        head = [rng.randint(-10, 10) for _ in range(n // 2 + 1)]
        b = head + head[1:][::-1]
        if not verify_lemma_circulant_square(b).passed:
            failures += 1
    yield Check(
        "circulant_square_lemma",
        failures == 0,
        f"{config.random_cases} random palindromes, {failures} failures",
    )


def bareiss_oracle(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    failures = 0
    for _ in range(config.random_cases):
        n = rng.randint(1, 6)
        matrix = BigIntMatrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        )
        perm = list(range(n))
        rng.shuffle(perm)
        det = bareiss_det(matrix)
        if det != cofactor_det(matrix) or det != bareiss_det(matrix.permuted(perm)):
            failures += 1
    yield Check(
        "bareiss_oracle",
        failures == 0,
        f"{config.random_cases} random matrices, {failures} failures",
    )


def jacobi_norms(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    for ctx in config.fields():
        order = ctx.q - 1
        if order < 3:
            continue
        bad = []
        for _ in range(config.random_cases // 50 or 1):
            i = rng.randrange(1, order)
            j = rng.randrange(1, order)
            if (i + j) % order == 0:
                continue
            n = minimal_root_order(ctx, i, j)
            value = jacobi_sum(ctx, i, j, n)
            if as_integer(value * value.conj()) != ctx.q:
                bad.append((i, j))
        yield Check(
            "jacobi_norms",
            not bad,
            f"F_{ctx.q}" if not bad else f"F_{ctx.q}: |J|^2 != q at {bad[:5]}",
        )


def curve_counts(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    for ctx in config.fields():
        for k in divisors(ctx.q - 1):
            k = int(k)
            for sign in (1, -1):
                count = curve_count(ctx, k, sign)
                brute = brute_force_points(ctx, k, sign)
                yield Check(
                    "curve_count_oracle",
                    count.points == brute,
                    f"F_{ctx.q}, y^2 = x^{k} {'+' if sign > 0 else '-'} 1: "
                    f"{count.points} vs {brute}",
                )
                total = char_sum_power(ctx, k, sign)
                # x = 0 contributes phi(sign), which is -1 for sign = -1 when q = 3 (mod 4)
                at_zero = phi(ctx, ctx.element(sign))
                yield Check(
                    "char_sum_trace",
                    total == -count.trace - at_zero,
                    f"F_{ctx.q}, k = {k}, sign = {sign}: {total} vs trace {count.trace}",
                )


def generator_independence(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    for ctx in config.exhaustive_fields():
        for k in divisors(ctx.q - 1):
            yield verify_generator_independence(ctx, int(k), seed=rng.randrange(2 ** 31))


def classical_determinants(config: SelftestConfig, rng: random.Random) -> Iterator[Check]:
    for p in primerange(3, config.carlitz_max_p + 1):
        yield from carlitz_cross_check(int(p))
    for p in primerange(3, config.chapman_max_p + 1):
        if p % 4 == 3:
            yield chapman_cross_check(int(p), min_p=config.chapman_min_p)
    for p in primerange(3, config.sun_max_p + 1):
        if p % 4 == 3:
            yield sun_conjecture_cross_check(int(p))


PROPERTIES: List[Property] = [
    field_axioms,
    discrete_logs,
    subgroup_structure,
    quadratic_character,
    character_orthogonality,
    cyclotomic_identities,
    circulant_lemma,
    bareiss_oracle,
    jacobi_norms,
    curve_counts,
    generator_independence,
    classical_determinants,
]


def _fold(checks: List[Check]) -> List[Check]:
    """One check per (name, advisory); advisory groups get an ``_advisory`` suffix."""
    grouped = OrderedDict()
    for check in checks:
        grouped.setdefault((check.name, check.advisory), []).append(check)
    folded = []
    for (name, advisory), group in grouped.items():
        failing = [c for c in group if not c.passed]
        detail = f"{len(group) - len(failing)}/{len(group)} cases pass"
        if failing:
            detail += f"; first failure: {failing[0].detail}"
        if advisory and not name.endswith("_advisory"):
            name += "_advisory"
        folded.append(Check(name, not failing, detail, advisory=advisory))
    return folded


def run_selftest(selftest_params: Dict[str, Any]) -> List[Check]:
    """Run every property with one seeded generator; one folded check per name."""
    config = (
        selftest_params
        if isinstance(selftest_params, SelftestConfig)
        else SelftestConfig.from_params(selftest_params)
    )
    rng = random.Random(config.seed)
    checks = []
    for prop in PROPERTIES:
        log.debug("Running selftest property %s", prop.__name__)
        checks.extend(prop(config, rng))
    return _fold(checks)


def selftest_records(checks: List[Check]) -> List[Dict[str, Any]]:
    return [check.to_json() for check in checks]


def selftest_passed(checks: List[Check]) -> bool:
    return all(check.passed for check in checks if not check.advisory)


def summarise_selftest(checks: List[Check]) -> None:
    failed = [c for c in checks if not c.passed and not c.advisory]
    advisory = [c for c in checks if not c.passed and c.advisory]
    log.info(
        "Selftest: %d properties, %d failed, %d advisory mismatches",
        len(checks),
        len(failed),
        len(advisory),
    )
    for check in failed:
        log.warning("Selftest property %s failed: %s", check.name, check.detail)
    for check in advisory:
        log.info("Advisory %s: %s", check.name, check.detail)
