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

"""Per-(q, k) verification reports and their JSON / CSV / text renderings."""
import json
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from subgroup_determinants.algebra.exact_matrix import LinearPoly

PART_I = "part_i"
PART_II = "part_ii"
PART_III = "part_iii"
UNSUPPORTED = "unsupported"

BRANCH_ALIASES = {"i": PART_I, "ii": PART_II, "iii": PART_III, "unsupported": UNSUPPORTED}

CSV_COLUMNS = [
    "q", "p", "s", "k", "n", "branch", "det_a", "det_b", "c_k", "d_k", "u_k", "pass",
]


def branch_for(q: int, k: int) -> str:
    """Which part of the theorem covers (q, k); decided by q mod 4 and q mod 2k."""
    if q % (2 * k) == 1:
        return PART_I
    if q % 4 == 3:
        return PART_II if k == 2 else UNSUPPORTED
    return PART_III


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    advisory: bool = False

    def to_json(self) -> Dict:
        payload = OrderedDict(
            [("name", self.name), ("pass", self.passed), ("detail", self.detail)]
        )
        if self.advisory:
            payload["advisory"] = True
        return payload


def _optional_str(value: Optional[int]) -> Optional[str]:
    return None if value is None else str(value)


@dataclass
class VerificationReport:
    q: int
    p: int
    s: int
    k: int
    n: int
    branch: str
    det: Optional[LinearPoly] = None
    c_k: Optional[int] = None
    d_k: Optional[int] = None
    u_k: Optional[int] = None
    degenerate: bool = False
    checks: List[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks if not check.advisory)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed and not c.advisory]

    def add(self, name: str, passed: bool, detail: str = "", advisory: bool = False):
        self.checks.append(Check(name, bool(passed), detail, advisory))

    def extend(self, checks: List[Check]):
        self.checks.extend(checks)

    def to_json(self, timings: bool = False) -> Dict:
        payload = OrderedDict(
            q=self.q,
            p=self.p,
            s=self.s,
            k=self.k,
            n=self.n,
            branch=self.branch,
            det=None if self.det is None else self.det.to_json(),
            c_k=self.c_k,
            d_k=self.d_k,
            u_k=_optional_str(self.u_k),
            degenerate=self.degenerate,
            checks=[check.to_json() for check in self.checks],
        )
        payload["pass"] = self.passed
        if timings:
            payload["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return payload

    def to_row(self) -> Dict:
        det = self.det or LinearPoly(0, 0)
        values = [
            self.q, self.p, self.s, self.k, self.n, self.branch,
            str(det.a) if self.det else "", str(det.b) if self.det else "",
            "" if self.c_k is None else self.c_k,
            "" if self.d_k is None else self.d_k,
            _optional_str(self.u_k) or "",
            self.passed,
        ]
        return OrderedDict(zip(CSV_COLUMNS, values))

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        det = "-" if self.det is None else str(self.det)
        line = f"q={self.q} k={self.k} n={self.n} {self.branch} det={det} {status}"
        if self.u_k is not None:
            line += f" u_k={self.u_k}"
        if self.degenerate:
            line += " degenerate"
        for check in self.failures:
            line += f" [{check.name}: {check.detail}]"
        return line


def render(report: VerificationReport, fmt: str, timings: bool = False) -> str:
    """One report as a single line of json, csv or text."""
    if fmt == "json":
        return json.dumps(report.to_json(timings))
    if fmt == "csv":
        return ",".join(_csv_cell(v) for v in report.to_row().values())
    return report.to_text()


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def csv_header() -> str:
    return ",".join(CSV_COLUMNS)


def summary_counts(reports) -> Dict[str, int]:
    counts = OrderedDict(reports=0, passed=0, failed=0, degenerate=0)
    for report in reports:
        counts["reports"] += 1
        counts["passed" if report.passed else "failed"] += 1
        counts["degenerate"] += int(report.degenerate)
    return counts


def render_summary(counts: Dict[str, int], fmt: str) -> str:
    """The closing line of a report stream."""
    if fmt == "json":
        return json.dumps({"summary": counts})
    return "summary: " + " ".join(f"{key}={value}" for key, value in counts.items())
