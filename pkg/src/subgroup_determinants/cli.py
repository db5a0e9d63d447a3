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

"""Command line entry point: ``subgroup_determinants <command>``.

Reports go to stdout (or ``--output``); logs go to stderr. Exit codes: 0 when
every check passes, 1 when a check fails, 2 on a usage error.
"""
import json
import logging
import logging.config
import os
from pathlib import Path
from typing import Optional

import click
from kedro.config import ConfigLoader, MissingConfigException

from subgroup_determinants.algebra.char_sums import (
    char_sum_power,
    curve_count,
    jacobi_sum,
    minimal_root_order,
)
from subgroup_determinants.algebra.finite_field import (
    DEFAULT_MAX_FIELD_SIZE,
    FieldCtx,
    make_field,
    prime_power_parts,
)
from subgroup_determinants.errors import SubgroupDeterminantError
from subgroup_determinants.pipelines.selftest.nodes import (
    SelftestConfig,
    run_selftest,
    selftest_passed,
    summarise_selftest,
)
from subgroup_determinants.pipelines.verification.checks import verify
from subgroup_determinants.pipelines.verification.nodes import (
    SweepConfig,
    iter_reports,
    plan_sweep,
)
from subgroup_determinants.pipelines.verification.report import (
    csv_header,
    render,
    render_summary,
    summary_counts,
)

CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"])

LOG_LEVEL_ENV = "SUBGROUP_DET_LOG_LEVEL"
FORMATS = click.Choice(["json", "csv", "text"])

log = logging.getLogger(__name__)


def _configure_logging(project_path: Optional[Path] = None) -> None:
    """Apply the project's ``logging.yml`` when run from a Kedro project root,
    else a plain stderr handler. ``SUBGROUP_DET_LOG_LEVEL`` sets the root level.
    """
    level = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
    project_path = project_path or Path.cwd()
    conf_paths = [str(project_path / "conf" / "base"), str(project_path / "conf" / "local")]
    try:
        conf_logging = ConfigLoader(conf_paths).get("logging*", "logging*/**")
        logging.config.dictConfig(conf_logging)
    except (MissingConfigException, ValueError, OSError):
        logging.basicConfig(format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    try:
        logging.getLogger().setLevel(level)
    except ValueError:
        raise click.UsageError(f"{LOG_LEVEL_ENV}={level} is not a log level")


def _field_from_options(
    p: Optional[int], s: Optional[int], q: Optional[int], max_field_size: int
) -> FieldCtx:
    if s is not None and s < 1:
        raise click.BadParameter(f"extension degree must be at least 1, got {s}", param_hint="--s")
    try:
        if q is not None:
            qp, qs = prime_power_parts(q)
            if (p is not None and p != qp) or (s is not None and s != qs):
                raise click.UsageError(f"--q {q} is not {p}^{s}")
            p, s = qp, qs
        elif p is None:
            raise click.UsageError("give either --q or --p (and optionally --s)")
        return make_field(p, 1 if s is None else s, max_field_size=max_field_size)
    except SubgroupDeterminantError as exc:
        raise click.UsageError(str(exc))


def field_options(func):
    func = click.option("--max-field-size", type=int, default=DEFAULT_MAX_FIELD_SIZE,
                        show_default=True, help="Largest q a field table may have.")(func)
    func = click.option("--s", "s", type=int, default=None, help="Extension degree.")(func)
    func = click.option("--p", "p", type=int, default=None, help="Odd characteristic.")(func)
    func = click.option("--q", "q", type=int, default=None, help="Odd prime power p^s.")(func)
    return func


@click.group(context_settings=CONTEXT_SETTINGS, name="subgroup_determinants")
def cli():
    """Exact verification of det A_k(t) over subgroups of finite fields."""
    _configure_logging()


@cli.command("verify")
@field_options
@click.option("--k", "k", type=int, required=True, help="Subgroup index, k | q - 1.")
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@click.option("--independence", is_flag=True, help="Also recompute with another generator and order.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--timings", is_flag=True, help="Include elapsed_ms in the report.")
def verify_command(p, s, q, max_field_size, k, fmt, independence, seed, timings):
    """Verify the theorem for a single (q, k)."""
    ctx = _field_from_options(p, s, q, max_field_size)
    try:
        report = verify(ctx, k, independence=independence, seed=seed)
    except SubgroupDeterminantError as exc:
        raise click.UsageError(str(exc))
    if fmt == "csv":
        click.echo(csv_header())
    click.echo(render(report, fmt, timings))
    if not report.passed:
        click.get_current_context().exit(1)


@cli.command("sweep")
@click.option("--q-min", type=int, default=3, show_default=True)
@click.option("--q-max", type=int, default=100, show_default=True)
@click.option("--k", "k", default="all", show_default=True,
              help="'all', one k, or a comma separated list.")
@click.option("--branches", default="i,ii,iii", show_default=True,
              help="Comma separated subset of i, ii, iii.")
@click.option("--include-unsupported", is_flag=True,
              help="Also verify q = 3 (mod 4), k != 2 pairs.")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--independence", is_flag=True)
@click.option("--max-field-size", type=int, default=DEFAULT_MAX_FIELD_SIZE, show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@click.option("--output", type=click.File("w"), default="-", show_default=True)
@click.option("--timings", is_flag=True)
def sweep_command(q_min, q_max, k, branches, include_unsupported, jobs, seed,
                  independence, max_field_size, fmt, output, timings):
    """Verify every admissible (q, k) with q_min <= q <= q_max."""
    try:
        config = SweepConfig(
            q_min=q_min,
            q_max=q_max,
            k=k,
            branches=tuple(b.strip() for b in branches.split(",") if b.strip()),
            jobs=jobs,
            seed=seed,
            max_field_size=max_field_size,
            independence=independence,
            include_unsupported=include_unsupported,
        )
        tasks = plan_sweep(config)
    except SubgroupDeterminantError as exc:
        raise click.UsageError(str(exc))

    if fmt == "csv":
        click.echo(csv_header(), file=output)
    reports = []
    for report in iter_reports(tasks, config.jobs):
        reports.append(report)
        click.echo(render(report, fmt, timings), file=output)
    counts = summary_counts(reports)
    if fmt == "csv":
        click.echo(render_summary(counts, "text"), err=True)
    else:
        click.echo(render_summary(counts, fmt), file=output)
    if counts["failed"]:
        click.get_current_context().exit(1)


@cli.command("jacobi")
@field_options
@click.option("--i", "i", type=int, required=True)
@click.option("--j", "j", type=int, required=True)
@click.option("--order", type=int, default=None,
              help="Root order N of the result; defaults to the smallest that fits.")
def jacobi_command(p, s, q, max_field_size, i, j, order):
    """Print J(chi^i, chi^j) as a cyclotomic integer."""
    ctx = _field_from_options(p, s, q, max_field_size)
    n = order or minimal_root_order(ctx, i, j)
    try:
        value = jacobi_sum(ctx, i, j, n)
    except SubgroupDeterminantError as exc:
        raise click.UsageError(str(exc))
    payload = {
        "q": ctx.q,
        "i": i,
        "j": j,
        "value": value.to_json(),
        "integer": value.as_integer(),
        "norm": (value * value.conj()).as_integer(),
    }
    click.echo(json.dumps(payload))


@cli.command("curve-count")
@field_options
@click.option("--k", "k", type=int, required=True)
@click.option("--sign", type=click.Choice(["+1", "1", "-1"]), default="+1", show_default=True)
def curve_count_command(p, s, q, max_field_size, k, sign):
    """Count points of y^2 = x^k + sign, with one point at infinity."""
    ctx = _field_from_options(p, s, q, max_field_size)
    if k < 1:
        raise click.UsageError(f"k must be positive, got {k}")
    value = int(sign)
    payload = curve_count(ctx, k, value).to_json()
    payload["char_sum"] = char_sum_power(ctx, k, value)
    click.echo(json.dumps(payload))


@cli.command("selftest")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--random-cases", type=int, default=1000, show_default=True)
@click.option("--max-q", type=int, default=200, show_default=True)
@click.option("--exhaustive-max-q", type=int, default=81, show_default=True,
              help="Largest q for generator independence and character orthogonality.")
@click.option("--cyclotomic-max-n", type=int, default=512, show_default=True)
@click.option("--carlitz-max-p", type=int, default=100, show_default=True)
@click.option("--chapman-min-p", type=int, default=7, show_default=True)
@click.option("--chapman-max-p", type=int, default=100, show_default=True)
@click.option("--sun-max-p", type=int, default=100, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json",
              show_default=True)
def selftest_command(seed, random_cases, max_q, exhaustive_max_q, cyclotomic_max_n,
                     carlitz_max_p, chapman_min_p, chapman_max_p, sun_max_p, fmt):
    """Run the seeded property suite."""
    try:
        config = SelftestConfig(
            seed=seed,
            random_cases=random_cases,
            max_q=max_q,
            exhaustive_max_q=exhaustive_max_q,
            cyclotomic_max_n=cyclotomic_max_n,
            carlitz_max_p=carlitz_max_p,
            chapman_min_p=chapman_min_p,
            chapman_max_p=chapman_max_p,
            sun_max_p=sun_max_p,
        )
    except SubgroupDeterminantError as exc:
        raise click.UsageError(str(exc))
    checks = run_selftest(config)
    summarise_selftest(checks)
    for check in checks:
        if fmt == "json":
            click.echo(json.dumps(check.to_json()))
        else:
            status = "PASS" if check.passed else ("ADVISORY" if check.advisory else "FAIL")
            click.echo(f"{check.name} {status} {check.detail}")
    passed = selftest_passed(checks)
    summary = {"properties": len(checks), "pass": passed}
    if fmt == "json":
        click.echo(json.dumps({"summary": summary}))
    else:
        click.echo(f"summary: properties={len(checks)} pass={str(passed).lower()}")
    if not passed:
        click.get_current_context().exit(1)


if __name__ == "__main__":
    cli()
