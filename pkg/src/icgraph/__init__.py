"""Exact spectra of integral circulant graphs and exhaustive extremal checks."""

from .core import (
    IcgSpec,
    SymbolSet,
    bar_d_p1,
    chain_d_n_d0,
    coconnected,
    complement_divisors,
    degree,
    gcd_class,
    is_connected,
    make_spec,
    parse_spec,
    symbol_set,
)
from .extremal import (
    GraphClass,
    Objective,
    Theorem,
    enumerate_class,
    extremal_search,
    predicted_achievers,
    second_min_least,
    verify_theorem,
)
from .spectrum import Spectrum, complement_spectrum, eigenvalue, full_spectrum, least_eigenvalue, spread

__version__ = "0.1.0"
