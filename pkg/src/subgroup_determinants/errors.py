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

"""Exceptions raised for bad inputs.

A failing mathematical check is not an exception; it is reported as a failed
``Check`` inside a ``VerificationReport``.
"""


class SubgroupDeterminantError(Exception):
    """Base class for every error raised by this package."""


class FieldParameterError(SubgroupDeterminantError, ValueError):
    """Invalid field parameters, subgroup index or field operand."""


class CharacterDomainError(SubgroupDeterminantError, ValueError):
    """A character value would leave the requested group of roots of unity."""


class CyclotomicMismatchError(SubgroupDeterminantError, ValueError):
    """Cyclotomic integers of different orders, or a non-unit Galois twist."""


class DegreeGuardError(SubgroupDeterminantError, ArithmeticError):
    """det M(t) was not linear in t at the third evaluation point."""


class BranchMismatchError(SubgroupDeterminantError, ValueError):
    """A theorem branch was asked to verify a (q, k) pair outside its range."""


class LemmaInputError(SubgroupDeterminantError, ValueError):
    """Circulant square lemma called with even n or a non-palindromic tuple."""


class SweepConfigError(SubgroupDeterminantError, ValueError):
    """Inconsistent sweep or selftest configuration."""
