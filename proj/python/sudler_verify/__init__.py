"""Certified numerics for Sudler products at badly approximable numbers.

Thin Python layer over the C++ core (`_sudler`): enclosures cross the
boundary as ``(lo, hi)`` float pairs, exact inputs as strings.
"""

from _sudler import (  # noqa: F401
    F_exact,
    G_enclosure,
    cf_str,
    cf_value,
    convergent,
    decompose_check,
    eps_prime,
    get_precision,
    limit_constant,
    ostrowski,
    set_precision,
    sudler_perturbed,
    sudler_product,
)

__all__ = [
    "F_exact",
    "G_enclosure",
    "cf_str",
    "cf_value",
    "convergent",
    "decompose_check",
    "eps_prime",
    "get_precision",
    "limit_constant",
    "ostrowski",
    "set_precision",
    "sudler_perturbed",
    "sudler_product",
]

__version__ = "0.1.0"
