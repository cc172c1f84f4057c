"""Backend-dispatched kernel entry points.

Imports the pure implementations and compiles them with numba when that
backend is active (see :mod:`rwalk._backend`).  The pure versions remain
importable from :mod:`rwalk._kernels_impl` for parity tests and benchmarks.
"""

from . import _backend
from . import _kernels_impl as _impl

greedy_best_path = _backend.jit(_impl.greedy_best_path)
longest_rainbow_dfs = _backend.jit(_impl.longest_rainbow_dfs)
rearrangeable_backtrack = _backend.jit(_impl.rearrangeable_backtrack)
local_sparsity_exact = _backend.jit(_impl.local_sparsity_exact)
robust_expander_exact = _backend.jit(_impl.robust_expander_exact)
