"""Exact computations with mu-admissible and mu-permissible sets of
(extended) affine Weyl groups.

The heavy lifting lives in the C++ extension module; this package only
re-exports it.
"""

try:
    from admperm._core import *  # noqa: F401,F403  (installed layout)
    from admperm._core import __version__  # noqa: F401
except ImportError:  # in-tree build: _core sits on PYTHONPATH directly
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401

__all__ = [
    "RootDatum",
    "BudgetError",
    "build_root_datum",
    "weyl_length",
    "reduced_word",
    "bruhat_le",
    "min_coset_rep_word",
    "orbit_size",
    "stabilizer_simple_indices",
    "is_minuscule",
    "translation_im_length",
    "check_element",
    "check_pair_element",
    "verify_counterexample",
    "enumerate_sets",
    "crosscheck",
    "recheck_certificate",
]
