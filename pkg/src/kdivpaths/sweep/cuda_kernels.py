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
from ..reduce import warp_reduce_sum
from ..intrinsic import grid_dim, block_dim, lane_id
from .kernels import kdiv_side_counts

########################################################################################################################
##################################################    CUDA kernels    ##################################################
########################################################################################################################

# Kept apart from the portable kernels: Warp builds a whole Python module per device,
# and the native intrinsics below only exist on CUDA.

@wp.kernel
def count_all_above_cuda_kernel(
    count: int,
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
    """
    Grid-strided count of all-above paths with one atomic per warp.
    
    This kernel:
        1. Each thread walks a strided subset of ranks and counts its own all-above paths.
        2. `warp_reduce_sum` folds the 32 partial counts of a warp together.
        3. Lane 0 of each warp adds the warp total to `total[0]`.
    
    Every thread of the launch reaches the reduction, so full-mask shuffles are safe.
    """
    tid = wp.tid()
    local = int(0)
    
    while tid < count:
        above, on = kdiv_side_counts(wp.int64(tid), length, ups, block, rise, run, shift, binomials)
        if above == interior:
            local = local + 1
        tid += grid_dim() * block_dim()   # jump by total threads in the grid
    
    local = warp_reduce_sum(local)
    
    if lane_id() == 0:
        wp.atomic_add(total, 0, local)
