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

import warp as wp

########################################################################################################################
##################################################    Side counts    ###################################################
########################################################################################################################

@wp.func
def kdiv_side_counts(
    rank: wp.int64,
    length: int,
    ups: int,
    block: int,
    rise: int,
    run: int,
    shift: int,
    binomials: wp.array2d(dtype = wp.int64),
):
    """
    Unrank one path and test its interior block-divisible points against one baseline.

    The path is rebuilt step by step from its lexicographic rank (U < D): an upstep is taken
    while the rank is below C(remaining - 1, ups_left - 1), read from `binomials[u, d] = C(u + d, u)`.
    The baseline is y = 2 * shift + (rise / run) x.
    
    Returns:
        (above, on): how many interior block-divisible points lie strictly above / exactly on the line.
    """
    r = wp.int64(rank)
    u = int(ups)
    d = int(length - ups)
    h = int(0)
    above = int(0)
    on = int(0)
    
    for pos in range(length):
        up = int(0)
        if u > 0:
            lead = binomials[u - 1, d]
            if r < lead:
                up = 1
            else:
                r = r - lead
        
        if up == 1:
            h = h + 1
            u = u - 1
        else:
            h = h - 1
            d = d - 1
        
        # Only interior labels that are multiples of the block size are tested.
        x = pos + 1
        if x < length and x % block == 0:
            side = run * (h - 2 * shift) - rise * x
            if side > 0:
                above = above + 1
            if side == 0:
                on = on + 1
    
    return above, on

########################################################################################################################
################################################    Portable kernels    ################################################
########################################################################################################################

@wp.kernel
def mark_histogram_kernel(
    length: int,
    ups: int,
    block: int,
    rise: int,
    run: int,
    marks: int,
    binomials: wp.array2d(dtype = wp.int64),
    # outputs
    histogram: wp.array(dtype = int),
    on_flags: wp.array(dtype = int),
):
    """
    One thread per path: accumulate X for every mark into `histogram` and flag ON verdicts.
    
    Each thread only writes its own `on_flags` slot, and histogram bins are updated with
    integer atomics, so the result does not depend on scheduling.
    """
    tid = wp.tid()
    
    for m in range(marks):
        above, on = kdiv_side_counts(wp.int64(tid), length, ups, block, rise, run, m, binomials)
        wp.atomic_add(histogram, above, 1)
        if on > 0:
            on_flags[tid] = 1


@wp.kernel
def count_all_above_kernel(
    length: int,
    ups: int,
    block: int,
    rise: int,
    run: int,
    shift: int,
    interior: int,
    binomials: wp.array2d(dtype = wp.int64),
    # outputs
    total: wp.array(dtype = int),
):
    """Count paths whose interior block-divisible points all lie strictly above the shifted line."""
    tid = wp.tid()
    above, on = kdiv_side_counts(wp.int64(tid), length, ups, block, rise, run, shift, binomials)
    if above == interior:
        wp.atomic_add(total, 0, 1)
