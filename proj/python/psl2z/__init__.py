"""Python access to the psl2z core."""

from ._psl2z import (
    Error,
    RepModel,
    alpha,
    build_family,
    cocycle,
    intertwiner_dimension,
    is_free_point,
    make_rep,
    parse_gword,
    rewrite_to_free,
    run_cli,
    unitarily_equivalent,
    verify_axioms,
    with_lambda,
)

__all__ = [
    "Error",
    "RepModel",
    "alpha",
    "build_family",
    "cocycle",
    "intertwiner_dimension",
    "is_free_point",
    "make_rep",
    "parse_gword",
    "rewrite_to_free",
    "run_cli",
    "unitarily_equivalent",
    "verify_axioms",
    "with_lambda",
]
