"""Kazhdan-Lusztig polynomials, Hecke algebra characters and chromatic
quasisymmetric functions.

Permutations are given in one-line notation, either as a string ("3412") or a
sequence of ints. Polynomials come back as ``{exponent: coefficient}`` dicts.
"""

from ._core import (
    HeckeLabError,
    SymmetricFunction,
    bruhat_leq,
    ch,
    check_names,
    chi,
    codominant,
    counterexample_search,
    cprime,
    csf,
    decompose,
    hessenberg_functions,
    hessenberg_of_smooth,
    is_codominant,
    is_smooth,
    kl_polynomial,
    kl_row,
    length,
    modular_relation,
    moment_graph,
    mu,
    omega,
    run_check,
    run_cli,
    smooth_reduce,
)

__version__ = "0.3.0"


def poly_str(p):
    """Formats an ``{exponent: coefficient}`` dict as "1 + 2*q + q^2"."""
    if not p:
        return "0"
    out = []
    for e in sorted(p):
        c = p[e]
        mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
        if not mono:
            out.append(str(c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{c}*{mono}")
    return " + ".join(out)
