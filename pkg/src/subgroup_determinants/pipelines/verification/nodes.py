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

"""Nodes of the 'verification' pipeline: plan the (q, k) grid, verify every
pair, and turn the reports into records, a table and a summary.
"""
import logging
from dataclasses import asdict, dataclass
from multiprocessing import Pool
from typing import Any, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

import pandas as pd
from sympy import divisors, primerange

from subgroup_determinants.algebra.finite_field import DEFAULT_MAX_FIELD_SIZE, make_field
from subgroup_determinants.errors import SweepConfigError
from subgroup_determinants.pipelines.verification.checks import verify
from subgroup_determinants.pipelines.verification.report import (
    BRANCH_ALIASES,
    CSV_COLUMNS,
    UNSUPPORTED,
    VerificationReport,
    branch_for,
    summary_counts,
)

log = logging.getLogger(__name__)

KFilter = Union[str, int, Iterable[int], None]


def parse_k_filter(value: KFilter) -> Optional[Tuple[int, ...]]:
    """``"all"``/None -> None (every divisor), otherwise the explicit k values.

    Accepts an int, a list of ints or a comma-separated string such as
    ``"2"``, ``"k=2"`` or ``"2,4,6"``.
    """
    if value is None:
        return None
    if isinstance(value, int):
        values = [value]
    elif isinstance(value, str):
        text = value.strip().lower()
        if text.startswith("k="):
            text = text[2:]
        if text == "all":
            return None
        try:
            values = [int(part) for part in text.split(",") if part.strip()]
        except ValueError:
            raise SweepConfigError(f"cannot read k filter {value!r}")
    else:
        values = [int(v) for v in value]
    if not values or any(v < 1 for v in values):
        raise SweepConfigError(f"k filter must list positive integers, got {value!r}")
    return tuple(sorted(set(values)))


def _parse_branches(branches: Iterable[str]) -> Tuple[str, ...]:
    names = []
    for branch in branches:
        name = BRANCH_ALIASES.get(branch, branch)
        if name not in BRANCH_ALIASES.values():
            raise SweepConfigError(
                f"unknown branch {branch!r}; expected one of {sorted(BRANCH_ALIASES)}"
            )
        names.append(name)
    return tuple(sorted(set(names)))


@dataclass(frozen=True)
class SweepConfig:
    q_min: int = 3
    q_max: int = 100
    k: KFilter = "all"
    branches: Tuple[str, ...] = ("i", "ii", "iii")
    jobs: int = 1
    seed: int = 0
    max_field_size: int = DEFAULT_MAX_FIELD_SIZE
    independence: bool = False
    include_unsupported: bool = False

    def __post_init__(self):
        if self.q_min > self.q_max:
            raise SweepConfigError(f"q_min={self.q_min} exceeds q_max={self.q_max}")
        if self.jobs < 1:
            raise SweepConfigError(f"jobs must be at least 1, got {self.jobs}")
        if self.q_max > self.max_field_size:
            raise SweepConfigError(
                f"q_max={self.q_max} exceeds the field size guard {self.max_field_size}"
            )
        object.__setattr__(self, "k", parse_k_filter(self.k))
        object.__setattr__(self, "branches", _parse_branches(self.branches))

    @classmethod
    def from_params(cls, params: Dict[str, Any]) -> "SweepConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(params) - known
        if unknown:
            raise SweepConfigError(f"unknown sweep parameters: {sorted(unknown)}")
        return cls(**params)

    def wants(self, branch: str) -> bool:
        if branch == UNSUPPORTED:
            return self.include_unsupported or UNSUPPORTED in self.branches
        return branch in self.branches


class SweepTask(NamedTuple):
    p: int
    s: int
    k: int
    max_field_size: int
    independence: bool
    seed: int

    @property
    def q(self) -> int:
        return self.p ** self.s


def enumerate_prime_powers(q_min: int, q_max: int) -> List[Tuple[int, int, int]]:
    """All odd prime powers q = p^s in [q_min, q_max] as sorted (q, p, s)."""
    found = []
    for p in primerange(3, q_max + 1):
        p = int(p)
        q, s = p, 1
        while q <= q_max:
            if q >= q_min:
                found.append((q, p, s))
            q *= p
            s += 1
    return sorted(found)


def admissible_ks(q: int, k_filter: Optional[Tuple[int, ...]]) -> List[int]:
    """Divisors of q - 1, optionally restricted to ``k_filter``."""
    ks = [int(d) for d in divisors(q - 1)]
    if k_filter is None:
        return ks
    return [k for k in ks if k in k_filter]


def plan_sweep(sweep_params: Union[Dict[str, Any], SweepConfig]) -> List[SweepTask]:
    """Every (q, k) pair the sweep covers, in (q, k) order."""
    config = (
        sweep_params
        if isinstance(sweep_params, SweepConfig)
        else SweepConfig.from_params(sweep_params)
    )
    tasks = []
    for q, p, s in enumerate_prime_powers(config.q_min, config.q_max):
        for k in admissible_ks(q, config.k):
            if config.wants(branch_for(q, k)):
                tasks.append(
                    SweepTask(p, s, k, config.max_field_size, config.independence, config.seed)
                )
    log.info(
        "Planned %d verifications for %d <= q <= %d",
        len(tasks),
        config.q_min,
        config.q_max,
    )
    return tasks


def verify_task(task: SweepTask) -> VerificationReport:
    ctx = make_field(task.p, task.s, max_field_size=task.max_field_size)
    return verify(ctx, task.k, independence=task.independence, seed=task.seed)


def iter_reports(tasks: List[SweepTask], jobs: int = 1) -> Iterator[VerificationReport]:
    """Reports in task order; with jobs > 1 a worker pool computes them ahead."""
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield verify_task(task)
        return
    with Pool(processes=jobs) as pool:
        for report in pool.imap(verify_task, tasks, chunksize=1):
            yield report


def run_sweep(
    tasks: List[SweepTask], sweep_params: Dict[str, Any]
) -> List[VerificationReport]:
    jobs = SweepConfig.from_params(sweep_params).jobs
    return list(iter_reports(tasks, jobs))


def reports_to_records(reports: List[VerificationReport]) -> List[Dict[str, Any]]:
    return [report.to_json() for report in reports]


def reports_to_table(reports: List[VerificationReport]) -> pd.DataFrame:
    return pd.DataFrame([report.to_row() for report in reports], columns=CSV_COLUMNS)


def summarise_reports(reports: List[VerificationReport]) -> None:
    """Log the pass/fail/degenerate counts and every failing (q, k)."""
    counts = summary_counts(reports)
    log.info(
        "Verified %d pairs: %d passed, %d failed, %d degenerate",
        counts["reports"],
        counts["passed"],
        counts["failed"],
        counts["degenerate"],
    )
    for report in reports:
        if not report.passed:
            log.warning(
                "q=%d k=%d (%s) failed: %s",
                report.q,
                report.k,
                report.branch,
                ", ".join(check.name for check in report.failures),
            )


def config_as_params(config: SweepConfig) -> Dict[str, Any]:
    params = asdict(config)
    params["k"] = "all" if config.k is None else list(config.k)
    params["branches"] = list(config.branches)
    return params
