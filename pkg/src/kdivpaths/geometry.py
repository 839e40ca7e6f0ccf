# BSD 3-Clause License
#
# Copyright (c) 2025, the kdivpaths developers
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# 1. Redistributions of source code must retain the above copyright notice, this
#    list of conditions and the following disclaimer.
#
# 2. Redistributions in binary form must reproduce the above copyright notice,
#    this list of conditions and the following disclaimer in the documentation
#    and/or other materials provided with the distribution.
#
# 3. Neither the name of the copyright holder nor the names of its
#    contributors may be used to endorse or promote products derived from
#    this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

"""Exact baselines and side tests.

Every comparison here is an integer multiply and compare. Lines are stored unreduced
(rise over run) with an integer intercept, so no rational ever appears.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import UsageError
from .path_core import FamilyParams, MarkedPath, heights, require_family

########################################################################################################################
###################################################    Baseline    #####################################################
########################################################################################################################

@dataclass(frozen = True)
class Baseline:
    """The line y = intercept + (rise / run) x, with the path's initial point as origin."""
    rise: int
    run: int
    intercept: int

    def __post_init__(self):
        if self.run <= 0:
            raise UsageError(f"baseline run must be positive (got {self.run})")


class SideResult(Enum):
    ABOVE = "above"
    ON = "on"
    BELOW = "below"


def general_baseline(a: int, c: int, n: int, shift: int) -> Baseline:
    """Baseline of slope -((a - 2c)n - 2) / (an) raised by 2 * shift at x = 0."""
    return Baseline(rise = -((a - 2 * c) * n - 2), run = a * n, intercept = 2 * shift)


def shifted_baseline(params: FamilyParams, shift: int) -> Baseline:
    """Line through (0, 2 * shift); shift i is the path started at (0, -2i) seen from the origin line."""
    return general_baseline(params.k, 1, params.n, shift)


def baseline_for(params: FamilyParams, mark: int) -> Baseline:
    """Baseline of a marked path: joins (0, 2(m-1)) and (kn, -(k-2)n + 2m)."""
    if not 1 <= mark <= params.j:
        raise UsageError(f"mark must lie in 1..{params.j} for {params} (got {mark})")
    return shifted_baseline(params, mark - 1)

########################################################################################################################
##################################################    Side tests    ####################################################
########################################################################################################################

def relative_height(baseline: Baseline, x: int, y: int) -> int:
    """run * (y - intercept) - rise * x: positive above the line, zero on it, negative below."""
    return baseline.run * (y - baseline.intercept) - baseline.rise * x


def side_of_baseline(baseline: Baseline, x: int, y: int) -> SideResult:
    value = relative_height(baseline, x, y)
    if value > 0:
        return SideResult.ABOVE
    if value == 0:
        return SideResult.ON
    return SideResult.BELOW


def block_labels(length: int, block: int) -> list[int]:
    """Interior labels divisible by `block` on a path of `length` steps."""
    return list(range(block, length, block))


def interior_kdiv_labels(params: FamilyParams) -> list[int]:
    """[k, 2k, ..., (n-1)k]."""
    return block_labels(params.length, params.k)


def count_above(profile: list[int], labels: list[int], baseline: Baseline) -> int:
    return sum(1 for x in labels if relative_height(baseline, x, profile[x]) > 0)

########################################################################################################################
################################################    Statistic X    #####################################################
########################################################################################################################

def _checked(marked: MarkedPath, params: FamilyParams) -> Baseline:
    require_family(marked.path, params)
    return baseline_for(params, marked.mark)


def kdiv_verdicts(marked: MarkedPath, params: FamilyParams) -> dict[int, SideResult]:
    """Side verdict at each interior k-divisible label, keyed by label."""
    baseline = _checked(marked, params)
    profile = heights(marked.path)
    return {x: side_of_baseline(baseline, x, profile[x]) for x in interior_kdiv_labels(params)}


def statistic_x(marked: MarkedPath, params: FamilyParams) -> int:
    """Number of interior k-divisible points lying strictly above the marked baseline."""
    baseline = _checked(marked, params)
    return count_above(heights(marked.path), interior_kdiv_labels(params), baseline)


def lemma_no_kdiv_on_baseline(marked: MarkedPath, params: FamilyParams) -> bool:
    """True iff no interior k-divisible point of the path lies on its baseline."""
    return SideResult.ON not in kdiv_verdicts(marked, params).values()


def terminal_clears(params: FamilyParams, shift: int) -> bool:
    """
    True iff a family path started at (0, -2 * shift) ends weakly above the origin line.

    Every member ends at the same height, 2(j - shift - 1) relative to the line, so this
    holds exactly for shifts 0..j-1.
    """
    return relative_height(shifted_baseline(params, shift), params.length, params.ups - params.downs) >= 0
