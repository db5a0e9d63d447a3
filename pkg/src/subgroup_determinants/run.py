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

"""Application entry point for ``kedro run``."""
from pathlib import Path
from typing import Dict, Optional

from kedro.framework.context import KedroContext, load_package_context
from kedro.pipeline import Pipeline

from subgroup_determinants.pipeline import create_pipelines


class ProjectContext(KedroContext):
    """Kedro context of the subgroup determinant verifier."""

    project_name = "subgroup_determinants"
    # `project_version` is the version of kedro used to generate the project
    project_version = "0.16.4"
    package_name = "subgroup_determinants"

    def _get_pipelines(self) -> Dict[str, Pipeline]:
        return create_pipelines()


def run_package(pipeline_name: Optional[str] = None):
    # Entry point for running the packaged project:
    # `python -m subgroup_determinants.run`.
    project_context = load_package_context(
        project_path=Path.cwd(), package_name=Path(__file__).resolve().parent.name
    )
    project_context.run(pipeline_name=pipeline_name)


if __name__ == "__main__":
    run_package()
