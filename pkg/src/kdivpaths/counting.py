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

"""Exact counting: binomials, the j/n C(kn, n+j) family, the unified (ad-bc)/(an+b) formula and sequences.

Each formula is computed twice, as an exact quotient and as a difference of binomials,
and the two are compared. Python integers are arbitrary precision, so nothing overflows.
"""

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import IntegralityError, UsageError, exact_div
from .path_core import FamilyParams

OEIS_IDS = {
    (2, 1): "A000108",
    (3, 1): "A007226",
    (4, 1): "A007228",
}

########################################################################################################################
###################################################    Binomial    #####################################################
########################################################################################################################

def binomial(m: int, r: int) -> int:
    """C(m, r), zero outside 0 <= r <= m."""
    if m < 0:
        raise UsageError(f"binomial needs m >= 0 (got m={m})")
    if r < 0 or r > m:
        return 0
    return math.comb(m, r)

########################################################################################################################
##############################################    Family formulas    ###################################################
########################################################################################################################

def count_formula(params: FamilyParams) -> int:
    """(k-1) C(kn-1, n+j-1) - C(kn-1, n+j), checked against j C(kn, n+j) / n."""
    n, k, j = params.n, params.k, params.j
    difference = (k - 1) * binomial(k * n - 1, n + j - 1) - binomial(k * n - 1, n + j)
    quotient = exact_div(j * binomial(k * n, n + j), n, f"j*C(kn,n+j)/n for {params}")
    if difference != quotient:
        raise IntegralityError(
            f"binomial difference disagrees with the quotient for {params} "
            f"(got {difference} and {quotient})"
        )
    return quotient


def single_baseline_count(n: int, k: int) -> int:
    return count_formula(FamilyParams(n, k, 1))


def catalan(n: int) -> int:
    return single_baseline_count(n, 2)


def first_valid_n(k: int, j: int) -> int:
    """Least n with (k-1) n >= j."""
    return max(1, -(-j // (k - 1)))


def sequence(k: int, j: int, n_max: int) -> list[tuple[int, int]]:
    """Pairs (n, j/n C(kn, n+j)) for every valid n up to n_max."""
    if k < 2 or j < 1:
        raise UsageError(f"sequence needs k >= 2 and j >= 1 (got k={k}, j={j})")
    return [(n, count_formula(FamilyParams(n, k, j))) for n in range(first_valid_n(k, j), n_max + 1)]


def bfile_lines(pairs: Iterable[tuple[int, int]]) -> list[str]:
    """OEIS b-file text: one 'n value' line per term."""
    return [f"{n} {value}" for n, value in pairs]


def oeis_id(k: int, j: int) -> str | None:
    return OEIS_IDS.get((k, j))

########################################################################################################################
##############################################    Unified formula    ###################################################
########################################################################################################################

@dataclass(frozen = True)
class GeneralParams:
    """Parameters (a, b, c, d, n) of (ad - bc)/(an + b) C(an + b, cn + d)."""
    a: int
    b: int
    c: int
    d: int
    n: int

    def __post_init__(self):
        if self.a < 2 or self.b < 0 or self.c < 1 or self.d < 1 or self.n < 1:
            raise UsageError(
                f"need a >= 2, b >= 0, c >= 1, d >= 1, n >= 1 (got {self.as_dict()})"
            )
        if self.a * self.n + self.b < self.c * self.n + self.d:
            raise UsageError(f"need an + b >= cn + d (got {self.as_dict()})")

    @property
    def weight(self) -> int:
        return self.a * self.d - self.b * self.c

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d, "n": self.n}


def unified_formula(g: GeneralParams) -> int:
    """(a-c) C(an+b-1, cn+d-1) - c C(an+b-1, cn+d), checked against (ad-bc) C(an+b, cn+d) / (an+b)."""
    if g.weight <= 0:
        raise UsageError(f"unified formula needs ad - bc > 0 (got {g.weight})")
    top = g.a * g.n + g.b
    bottom = g.c * g.n + g.d
    difference = (g.a - g.c) * binomial(top - 1, bottom - 1) - g.c * binomial(top - 1, bottom)
    quotient = exact_div(g.weight * binomial(top, bottom), top, f"unified formula at {g.as_dict()}")
    if difference != quotient:
        raise IntegralityError(
            f"binomial difference disagrees with the quotient at {g.as_dict()} "
            f"(got {difference} and {quotient})"
        )
    return quotient


def count_general_a(a: int, c: int, d: int, n: int) -> int:
    """d/n C(an, cn+d): the unified formula with b = 0."""
    return unified_formula(GeneralParams(a, 0, c, d, n))


def count_ne(n: int, k: int, j: int) -> int:
    """j/(kn+j) C(kn+j, n)."""
    if n < 1 or k < 2 or j < 1:
        raise UsageError(f"need n >= 1, k >= 2, j >= 1 (got n={n}, k={k}, j={j})")
    total = k * n + j
    return exact_div(j * binomial(total, n), total, f"j*C(kn+j,n)/(kn+j) at n={n}, k={k}, j={j}")
