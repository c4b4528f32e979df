"""QR and SVD factors of a two-table join, computed without materializing the join.

The join matrix of two tables (every matching left row concatenated with every
matching right row) can be orders of magnitude larger than the tables
themselves.  Its R factor and singular values are nevertheless determined by a
much smaller matrix with the same Gram matrix, assembled directly from the
inputs via normalized row sums ("heads") and their orthogonal residuals
("tails").  This package implements that reduction, the QR/SVD finishing
steps, a brute-force materialize-then-decompose oracle, CSV IO, and a
benchmark harness comparing the two routes.

Attribute access is lazy so the command line can configure threading before
numpy is loaded.
"""

import importlib

__version__ = "0.1.0"

_EXPORTS = {
    "matmul": ".matrix",
    "gram": ".matrix",
    "max_abs_diff": ".matrix",
    "transpose": ".matrix",
    "frobenius_norm": ".matrix",
    "hconcat": ".matrix",
    "vconcat": ".matrix",
    "scale": ".matrix",
    "row_slice": ".matrix",
    "is_upper_triangular": ".matrix",
    "head": ".headtail",
    "tail": ".headtail",
    "head_tail": ".headtail",
    "Table": ".joins",
    "ReducedMatrix": ".joins",
    "reduce_cartesian": ".joins",
    "reduce_natural_join": ".joins",
    "reduce_join": ".joins",
    "householder_r": ".qr",
    "givens_r": ".qr",
    "canonicalize": ".qr",
    "figaro_r": ".qr",
    "SvdResult": ".svd",
    "svd_of_r": ".svd",
    "figaro_svd": ".svd",
    "materialize_cartesian": ".oracle",
    "materialize_natural_join": ".oracle",
    "baseline_r": ".oracle",
    "baseline_svd": ".oracle",
    "det_lu": ".oracle",
    "GenSpec": ".datagen",
    "gen_uniform": ".datagen",
    "read_table": ".tableio",
    "read_matrix": ".tableio",
    "write_matrix": ".tableio",
    "write_table": ".tableio",
    "write_svd": ".tableio",
    "BenchCell": ".bench",
    "BenchReport": ".bench",
    "run_bench": ".bench",
    "track_peak_memory": ".bench",
}


def __getattr__(name):
    try:
        module_name = _EXPORTS[name]
    except KeyError:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}") from None
    module = importlib.import_module(module_name, __name__)
    value = getattr(module, name)
    globals()[name] = value
    return value


def __dir__():
    return sorted(set(globals()) | set(_EXPORTS))
