# SPDX-License-Identifier: Apache-2.0
"""Numerical Kaehler geometry: curvature, the Bochner tensor, and homothety
certificates for Bochner-preserving holomorphic maps."""

try:
    from bochner._core import (  # noqa: F401
        BochnerFlat,
        NotPositiveDefinite,
        OutsideDomain,
        UnknownName,
        UnsupportedDimension,
        bochner,
        certify,
        check_random,
        curvature,
        metric,
    )
except ImportError:  # in-tree test runs: _core sits next to the package dir
    from _core import (  # noqa: F401
        BochnerFlat,
        NotPositiveDefinite,
        OutsideDomain,
        UnknownName,
        UnsupportedDimension,
        bochner,
        certify,
        check_random,
        curvature,
        metric,
    )

__all__ = [
    "metric",
    "curvature",
    "bochner",
    "certify",
    "check_random",
    "OutsideDomain",
    "NotPositiveDefinite",
    "UnknownName",
    "UnsupportedDimension",
    "BochnerFlat",
]
