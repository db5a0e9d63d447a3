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

from kedro.io import DataCatalog
from kedro.runner import SequentialRunner

from subgroup_determinants.pipelines.verification import create_pipeline


class TestVerificationPipeline:
    def test_node_names(self):
        pipeline = create_pipeline()
        assert {"plan_sweep", "run_sweep"} <= {node.name for node in pipeline.nodes}
        assert pipeline.inputs() == {"params:sweep"}

    def test_run(self):
        catalog = DataCatalog(
            feed_dict={"params:sweep": {"q_min": 3, "q_max": 13, "k": "all"}}
        )
        outputs = SequentialRunner().run(create_pipeline(), catalog)
        records = outputs["verification_reports"]
        table = outputs["verification_table"]
        assert len(records) == len(table) > 0
        assert all(record["pass"] for record in records)
        assert set(table["branch"]) == {"part_i", "part_ii", "part_iii"}
