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

"""Diagonal lattice paths: representation, parsing, family membership, enumeration and ranking.

Paths are sequences of upsteps U = (1, 1) and downsteps D = (1, -1). All orderings use
the lexicographic order with U < D, so the all-up path of a family has rank 0.
"""

import math
from dataclasses import dataclass
from enum import IntEnum
from itertools import accumulate, combinations, islice
from typing import Iterator

from .errors import UsageError

########################################################################################################################
#####################################################    Step    #######################################################
########################################################################################################################

class Step(IntEnum):
    UP = 0
    DOWN = 1

    @property
    def symbol(self) -> str:
        return "U" if self is Step.UP else "D"

    @property
    def delta(self) -> int:
        return 1 if self is Step.UP else -1


_SYMBOLS = {"U": Step.UP, "D": Step.DOWN}

########################################################################################################################
#################################################    FamilyParams    ###################################################
########################################################################################################################

@dataclass(frozen = True)
class FamilyParams:
    """
    The triple (n, k, j) of the family P(n, k, j): paths of kn steps of which n + j are upsteps.

    Valid triples satisfy n >= 1, k >= 2, j >= 1 and (k - 1) n >= j, so the downstep count
    kn - (n + j) is nonnegative.
    """
    n: int
    k: int
    j: int

    def __post_init__(self):
        if self.n < 1 or self.k < 2 or self.j < 1:
            raise UsageError(
                f"family needs n >= 1, k >= 2 and j >= 1 (got n={self.n}, k={self.k}, j={self.j})"
            )
        if (self.k - 1) * self.n < self.j:
            raise UsageError(
                f"family needs (k-1)n >= j (got n={self.n}, k={self.k}, j={self.j})"
            )

    @property
    def length(self) -> int:
        return self.k * self.n

    @property
    def ups(self) -> int:
        return self.n + self.j

    @property
    def downs(self) -> int:
        return self.length - self.ups

    @property
    def size(self) -> int:
        """|P(n, k, j)| = C(kn, n + j)."""
        return math.comb(self.length, self.ups)

    def as_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "j": self.j}

    def __str__(self):
        return f"P({self.n},{self.k},{self.j})"

########################################################################################################################
#################################################    DiagonalPath    ###################################################
########################################################################################################################

@dataclass(frozen = True)
class DiagonalPath:
    """An immutable sequence of U/D steps. Family membership is checked, not encoded."""
    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return DiagonalPath(self.steps[index])
        return self.steps[index]

    def __add__(self, other: "DiagonalPath") -> "DiagonalPath":
        return DiagonalPath(self.steps + other.steps)

    def __mul__(self, times: int) -> "DiagonalPath":
        return DiagonalPath(self.steps * times)

    def __str__(self):
        return render_path(self)

    @property
    def ups(self) -> int:
        return sum(1 for step in self.steps if step is Step.UP)

    @property
    def downs(self) -> int:
        return len(self.steps) - self.ups


@dataclass(frozen = True)
class MarkedPath:
    """A path paired with a mark m in 1..j selecting one of its j parallel baselines."""
    path: DiagonalPath
    mark: int

    def __str__(self):
        return f"({render_path(self.path)}, {self.mark})"

########################################################################################################################
##############################################    Parsing & Rendering    ###############################################
########################################################################################################################

def parse_path(text: str) -> DiagonalPath:
    """Parse a path written over the letters 'U' and 'D' (no separators)."""
    if not text:
        raise UsageError("path text must be nonempty (got '')")
    try:
        return DiagonalPath(tuple(_SYMBOLS[symbol] for symbol in text))
    except KeyError as exc:
        raise UsageError(
            f"path text may only contain 'U' and 'D' (got {exc.args[0]!r} in {text!r})"
        ) from None


def render_path(path: DiagonalPath) -> str:
    return "".join(step.symbol for step in path.steps)


def validate_family(path: DiagonalPath, params: FamilyParams) -> bool:
    """True iff `path` has kn steps of which n + j are upsteps."""
    return len(path) == params.length and path.ups == params.ups


def require_family(path: DiagonalPath, params: FamilyParams):
    if not validate_family(path, params):
        raise UsageError(
            f"path is not a member of {params}: expected {params.length} steps with {params.ups} upsteps "
            f"(got {len(path)} steps with {path.ups} upsteps)"
        )


def heights(path: DiagonalPath) -> list[int]:
    """Height profile h(0..len): h(0) = 0 and h(x + 1) - h(x) = +1 for U, -1 for D."""
    return list(accumulate((step.delta for step in path.steps), initial = 0))

########################################################################################################################
###############################################    Enumeration & Rank    ###############################################
########################################################################################################################

def enumerate_paths(length: int, ups: int, start: int = 0, stop: int | None = None) -> Iterator[DiagonalPath]:
    """
    Yield every path of `length` steps with `ups` upsteps in lexicographic order (U < D).

    `start` and `stop` restrict the stream to the rank range [start, stop), which lets
    callers partition a family deterministically.
    """
    if not 0 <= ups <= length:
        raise UsageError(f"need 0 <= ups <= length (got ups={ups}, length={length})")
    # Up-position tuples in lexicographic order are exactly the paths in U < D order.
    positions = islice(combinations(range(length), ups), start, stop)
    for up_positions in positions:
        steps = [Step.DOWN] * length
        for position in up_positions:
            steps[position] = Step.UP
        yield DiagonalPath(tuple(steps))


def enumerate_family(params: FamilyParams, start: int = 0, stop: int | None = None) -> Iterator[DiagonalPath]:
    """Yield the C(kn, n + j) members of P(n, k, j) in lexicographic order."""
    return enumerate_paths(params.length, params.ups, start, stop)


def rank_path(path: DiagonalPath) -> int:
    """0-based lexicographic index of `path` among paths with its length and upstep count."""
    rank = 0
    ups_left = path.ups
    for position, step in enumerate(path.steps):
        if step is Step.DOWN:
            # Skip every completion that would have put an upstep here instead.
            if ups_left > 0:
                rank += math.comb(len(path) - position - 1, ups_left - 1)
        else:
            ups_left -= 1
    return rank


def unrank_path(rank: int, length: int, ups: int) -> DiagonalPath:
    """Inverse of `rank_path` for paths of `length` steps with `ups` upsteps."""
    total = math.comb(length, ups)
    if not 0 <= rank < total:
        raise UsageError(f"rank must lie in [0, {total}) (got {rank})")
    steps = []
    ups_left = ups
    for position in range(length):
        lead = math.comb(length - position - 1, ups_left - 1) if ups_left > 0 else 0
        if rank < lead:
            steps.append(Step.UP)
            ups_left -= 1
        else:
            rank -= lead
            steps.append(Step.DOWN)
    return DiagonalPath(tuple(steps))


def rank(path: DiagonalPath) -> int:
    return rank_path(path)


def unrank(r: int, params: FamilyParams) -> DiagonalPath:
    return unrank_path(r, params.length, params.ups)
