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

"""North/east paths measured against the line y = (k-1)x: high points, the marked statistic and the final bijection."""

from collections import Counter
from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations
from typing import Callable, Iterator

from .errors import UsageError

########################################################################################################################
####################################################    NEPath    ######################################################
########################################################################################################################

class NEStep(IntEnum):
    NORTH = 0
    EAST = 1

    @property
    def symbol(self) -> str:
        return "N" if self is NEStep.NORTH else "E"


_NE_SYMBOLS = {"N": NEStep.NORTH, "E": NEStep.EAST}


@dataclass(frozen = True)
class NEParams:
    """Family of paths with n east steps and (k-1)n + j north steps."""
    n: int
    k: int
    j: int

    def __post_init__(self):
        if self.n < 1 or self.k < 2 or self.j < 1:
            raise UsageError(
                f"NE family needs n >= 1, k >= 2 and j >= 1 (got n={self.n}, k={self.k}, j={self.j})"
            )

    @property
    def norths(self) -> int:
        return (self.k - 1) * self.n + self.j

    @property
    def length(self) -> int:
        return self.k * self.n + self.j

    def as_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "j": self.j}


@dataclass(frozen = True)
class NEPath:
    steps: tuple[NEStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self):
        return render_ne_path(self)

    @property
    def easts(self) -> int:
        return sum(1 for step in self.steps if step is NEStep.EAST)


@dataclass(frozen = True)
class MarkedNEPath:
    """A path with one of its j high points marked (mark 1 is the highest)."""
    path: NEPath
    mark: int
    params: NEParams

    def __post_init__(self):
        if not 1 <= self.mark <= self.params.j:
            raise UsageError(f"high point mark must lie in 1..{self.params.j} (got {self.mark})")


def parse_ne_path(text: str) -> NEPath:
    if not text:
        raise UsageError("NE path text must be nonempty (got '')")
    try:
        return NEPath(tuple(_NE_SYMBOLS[symbol] for symbol in text))
    except KeyError as exc:
        raise UsageError(
            f"NE path text may only contain 'N' and 'E' (got {exc.args[0]!r} in {text!r})"
        ) from None


def render_ne_path(path: NEPath) -> str:
    return "".join(step.symbol for step in path.steps)


def in_ne_family(path: NEPath, params: NEParams) -> bool:
    return len(path) == params.length and path.easts == params.n

########################################################################################################################
####################################################    Heights    #####################################################
########################################################################################################################

def ne_height(x: int, y: int, k: int) -> int:
    """y - (k-1)x: a positive multiple of the perpendicular distance to y = (k-1)x."""
    return y - (k - 1) * x


def ne_points(path: NEPath) -> list[tuple[int, int]]:
    x = y = 0
    points = [(0, 0)]
    for step in path.steps:
        if step is NEStep.EAST:
            x += 1
        else:
            y += 1
        points.append((x, y))
    return points


def ne_heights(path: NEPath, k: int) -> list[int]:
    return [ne_height(x, y, k) for x, y in ne_points(path)]


def weakly_above(path: NEPath, k: int) -> bool:
    return all(height >= 0 for height in ne_heights(path, k))

########################################################################################################################
##################################################    High points    ###################################################
########################################################################################################################

def high_points(path: NEPath, j: int, k: int) -> list[int]:
    """
    Labels of the j high points: the leftmost point at each of the j largest distinct heights.

    A path ending at height j climbs through every height 1..j by unit north steps, so
    j distinct positive heights always exist.
    """
    profile = ne_heights(path, k)
    leftmost = {}
    for label, height in enumerate(profile):
        leftmost.setdefault(height, label)
    levels = sorted(leftmost, reverse = True)[:j]
    assert len(levels) == j and levels[-1] >= 1, f"fewer than {j} positive heights on {render_ne_path(path)}"
    return [leftmost[height] for height in levels]


def high_points_same_height(path: NEPath, j: int, k: int) -> list[int]:
    """The rejected reading: the first j points in order of decreasing height, ties leftmost."""
    profile = ne_heights(path, k)
    ordered = sorted(range(len(profile)), key = lambda label: (-profile[label], label))
    return ordered[:j]


def ne_statistic_x(marked: MarkedNEPath, reading: Callable = high_points) -> int:
    """Label of the marked high point, in 1..kn+j."""
    return reading(marked.path, marked.params.j, marked.params.k)[marked.mark - 1]

########################################################################################################################
#################################################    Enumeration    ####################################################
########################################################################################################################

def _ne_paths(easts: int, norths: int) -> Iterator[NEPath]:
    length = easts + norths
    for east_positions in combinations(range(length), easts):
        steps = [NEStep.NORTH] * length
        for position in east_positions:
            steps[position] = NEStep.EAST
        yield NEPath(tuple(steps))


def enumerate_ne_family(params: NEParams) -> Iterator[NEPath]:
    return _ne_paths(params.n, params.norths)


def marked_ne_objects(params: NEParams) -> Iterator[MarkedNEPath]:
    for path in enumerate_ne_family(params):
        for mark in range(1, params.j + 1):
            yield MarkedNEPath(path, mark, params)


def enumerate_weakly_above(params: NEParams) -> Iterator[NEPath]:
    """Paths of n east and (k-1)n + j - 1 north steps never dipping below y = (k-1)x."""
    for path in _ne_paths(params.n, params.norths - 1):
        if weakly_above(path, params.k):
            yield path


def weakly_above_count(params: NEParams) -> int:
    return sum(1 for _ in enumerate_weakly_above(params))


def ne_histogram(params: NEParams, reading: Callable = high_points) -> list[int]:
    """Counts of ne_statistic_x over all marked objects, for the values 1..kn+j."""
    counts = Counter(ne_statistic_x(marked, reading) for marked in marked_ne_objects(params))
    return [counts.get(value, 0) for value in range(1, params.length + 1)]

########################################################################################################################
###############################################    Final bijection    ##################################################
########################################################################################################################

def ne_final_bijection(marked: MarkedNEPath) -> NEPath:
    """Delete the last step (a north step) and rotate the rest by 180 degrees, i.e. reverse it."""
    params = marked.params
    value = ne_statistic_x(marked)
    if value != params.length:
        raise UsageError(f"final bijection needs X = {params.length} (got X = {value})")
    if marked.path.steps[-1] is not NEStep.NORTH:
        raise UsageError(f"final step of {render_ne_path(marked.path)} must be north when X = {params.length}")
    return NEPath(tuple(reversed(marked.path.steps[:-1])))
