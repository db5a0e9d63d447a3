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

import json

import pytest

from subgroup_determinants.pipelines.verification.checks import verify
from subgroup_determinants.pipelines.verification.report import (
    PART_I,
    PART_II,
    PART_III,
    UNSUPPORTED,
    Check,
    VerificationReport,
    branch_for,
    csv_header,
    render,
    render_summary,
    summary_counts,
)


@pytest.fixture
def failing_report():
    report = VerificationReport(q=7, p=7, s=1, k=2, n=3, branch=PART_II)
    report.add("closed_form", False, "forced")
    return report


class TestBranchFor:
    @pytest.mark.parametrize(
        "q,k,branch",
        [
            (5, 2, PART_I),
            (13, 3, PART_I),
            (7, 2, PART_II),
            (27, 2, PART_II),
            (7, 6, UNSUPPORTED),
            (19, 3, PART_I),
            (19, 6, UNSUPPORTED),
            (5, 4, PART_III),
            (9, 8, PART_III),
            (13, 12, PART_III),
        ],
    )
    def test_routing(self, q, k, branch):
        assert branch_for(q, k) == branch


class TestCheck:
    def test_advisory_flag_only_when_set(self):
        assert Check("a", True).to_json() == {"name": "a", "pass": True, "detail": ""}
        assert Check("a", False, "x", advisory=True).to_json()["advisory"] is True


class TestVerificationReport:
    def test_advisory_failures_do_not_fail(self):
        report = VerificationReport(q=3, p=3, s=1, k=2, n=1, branch=PART_II)
        report.add("chapman", False, advisory=True)
        assert report.passed
        assert report.failures == []

    def test_failure(self, failing_report):
        assert not failing_report.passed
        assert failing_report.to_text() == "q=7 k=2 n=3 part_ii det=- FAIL [closed_form: forced]"

    def test_json(self, f5):
        payload = verify(f5, 4).to_json()
        assert payload["det"] == {"a": "-1", "b": "1"}
        assert (payload["c_k"], payload["d_k"], payload["u_k"]) == (3, -1, "1")
        assert payload["pass"] is True
        assert "elapsed_ms" not in payload

    def test_timings(self, f7):
        payload = verify(f7, 2).to_json(timings=True)
        assert payload["elapsed_ms"] >= 0


class TestRender:
    def test_json_line(self, f7):
        line = render(verify(f7, 2), "json")
        assert "\n" not in line
        assert json.loads(line)["branch"] == PART_II

    def test_csv(self, f5, f7):
        assert csv_header() == "q,p,s,k,n,branch,det_a,det_b,c_k,d_k,u_k,pass"
        assert render(verify(f7, 2), "csv") == "7,7,1,2,3,part_ii,-7,21,,,,true"
        assert render(verify(f5, 4), "csv") == "5,5,1,4,1,part_iii,-1,1,3,-1,1,true"

    def test_text(self, f5, f7):
        assert render(verify(f7, 2), "text") == "q=7 k=2 n=3 part_ii det=21*t - 7 PASS"
        assert render(verify(f5, 4), "text") == "q=5 k=4 n=1 part_iii det=1*t - 1 PASS u_k=1"


class TestSummary:
    def test_counts(self, f7, failing_report):
        counts = summary_counts([verify(f7, 2), failing_report])
        assert counts == {"reports": 2, "passed": 1, "failed": 1, "degenerate": 0}
        assert json.loads(render_summary(counts, "json")) == {"summary": counts}
        assert render_summary(counts, "text") == (
            "summary: reports=2 passed=1 failed=1 degenerate=0"
        )
