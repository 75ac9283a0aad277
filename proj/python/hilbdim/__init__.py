"""Exact invariants and Hilbert-scheme dimensions of scrolls and fibrations."""

import json

from ._core import (
    InvalidArgument,
    NonIntegral,
    __version__,
    chi_normal,
    derive_eb,
    dim_closed_form,
    hilbert_polynomial,
    invariants,
    ring_invariants,
    run_cli,
    sym,
)


def verify_tables():
    """Table verification report as a dict, plus the exit code."""
    code, out, _ = run_cli(["verify-tables", "--format", "json"])
    return code, json.loads(out)


__all__ = [
    "InvalidArgument",
    "NonIntegral",
    "__version__",
    "chi_normal",
    "derive_eb",
    "dim_closed_form",
    "hilbert_polynomial",
    "invariants",
    "ring_invariants",
    "run_cli",
    "sym",
    "verify_tables",
]
