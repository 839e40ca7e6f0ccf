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

import logging
import math

import numpy as np
import warp as wp

from ..errors import UsageError
from ..path_core import FamilyParams
from .kernels import count_all_above_kernel, mark_histogram_kernel

logger = logging.getLogger(__name__)

# One thread per rank, and Warp thread indices are 32-bit.
MAX_SWEEP_SIZE = 2**31 - 1

########################################################################################################################
##################################################    FamilySweep    ###################################################
########################################################################################################################

class FamilySweep:
    """
    Exhaustive data-parallel sweep over every U/D path with `length` steps and `ups` upsteps.
    
    Each Warp thread owns one lexicographic rank. It rebuilds its path from a device-resident
    binomial table and runs the exact integer side test at every interior label divisible by
    `block`, against the line y = 2 * shift + (rise / run) x.
    
    Covers both the family P(n, k, j) (block k, rise -((k-2)n-2), run kn) and its
    generalization to paths of cn + d upsteps among an steps (block a, rise -((a-2c)n-2), run an).
    """
    
    def __init__(
        self,
        length: int,
        ups: int,
        block: int,
        rise: int,
        run: int,
        device = None,
    ):
        """
        Parameters
        ----------
        length, ups : int
            Path length and upstep count; the sweep covers C(length, ups) paths.
        block : int
            Label spacing of the tested points. Must divide `length`.
        rise, run : int
            Unreduced baseline slope, run > 0.
        device : str or None
            Warp device. None selects Warp's default device.
        """
        if not 0 <= ups <= length:
            raise UsageError(f"need 0 <= ups <= length (got ups={ups}, length={length})")
        if block < 1 or length % block != 0:
            raise UsageError(f"block must divide the path length (got block={block}, length={length})")
        if run <= 0:
            raise UsageError(f"run must be positive (got {run})")
        
        self.length = length
        self.ups = ups
        self.block = block
        self.rise = rise
        self.run = run
        self.interior = length // block - 1
        self.count = math.comb(length, ups)
        if self.count > MAX_SWEEP_SIZE:
            raise UsageError(
                f"sweep size must fit a 32-bit launch (got {self.count} paths)"
            )
        
        self.device = wp.get_device(device)
        
        # binomials[u, d] = C(u + d, u); every entry is at most C(length, ups).
        downs = length - ups
        table = np.zeros((ups + 1, downs + 1), dtype = np.int64)
        for u in range(ups + 1):
            for d in range(downs + 1):
                table[u, d] = math.comb(u + d, u)
        self.binomials = wp.array(table, dtype = wp.int64, device = self.device)
        
        logger.debug(
            "sweep of %d paths (length %d, ups %d, block %d) on %s",
            self.count, length, ups, block, self.device,
        )
    
    @classmethod
    def from_family(cls, params: FamilyParams, device = None) -> "FamilySweep":
        return cls(
            params.length,
            params.ups,
            params.k,
            -((params.k - 2) * params.n - 2),
            params.length,
            device = device,
        )
    
    @classmethod
    def from_general(cls, a: int, c: int, d: int, n: int, device = None) -> "FamilySweep":
        return cls(a * n, c * n + d, a, -((a - 2 * c) * n - 2), a * n, device = device)
    
    def mark_histogram(self, marks: int) -> tuple[list[int], list[int]]:
        """
        Histogram of X over (path, shift) for shifts 0..marks-1, plus the ranks with any ON verdict.
        
        Returns
        -------
        bins : list[int]
            bins[x] counts the pairs whose X equals x, for x in 0..interior.
        on_ranks : list[int]
            Sorted ranks of the paths with an interior block-divisible point on some baseline.
        """
        histogram = wp.zeros(self.interior + 1, dtype = int, device = self.device)
        on_flags = wp.zeros(self.count, dtype = int, device = self.device)
        
        wp.launch(
            mark_histogram_kernel,
            inputs = [self.length, self.ups, self.block, self.rise, self.run, marks, self.binomials],
            outputs = [histogram, on_flags],
            dim = self.count,
            device = self.device,
        )
        
        bins = [int(value) for value in histogram.numpy()]
        on_ranks = [int(rank) for rank in np.flatnonzero(on_flags.numpy())]
        return bins, on_ranks
    
    def count_all_above(self, shift: int) -> int:
        """Number of paths whose interior block-divisible points all lie strictly above the shifted line."""
        total = wp.zeros(1, dtype = int, device = self.device)
        
        if self.device.is_cuda:
            # Imported lazily: the CUDA-only module must never be built for the CPU.
            from .cuda_kernels import count_all_above_cuda_kernel
            
            wp.launch(
                count_all_above_cuda_kernel,
                dim = min(self.device.sm_count * 2, (self.count + 63) // 64) * 64,
                inputs = [
                    self.count,
                    self.length,
                    self.ups,
                    self.block,
                    self.rise,
                    self.run,
                    shift,
                    self.interior,
                    self.binomials,
                ],
                outputs = [total],
                device = self.device,
                block_dim = 64,
            )
        else:
            wp.launch(
                count_all_above_kernel,
                inputs = [
                    self.length,
                    self.ups,
                    self.block,
                    self.rise,
                    self.run,
                    shift,
                    self.interior,
                    self.binomials,
                ],
                outputs = [total],
                dim = self.count,
                device = self.device,
            )
        
        return int(total.numpy()[0])
