"""Exact fusion rings from cyclotomic S-matrices.

Everything is computed over cyclotomic fields Q(zeta_N) with rational
coefficients; no floating-point value ever feeds a reported result
(floats appear only inside certified integer-exact BLAS kernels and in
the optional high-precision cross-check oracle).

Submodules are imported lazily so that the command-line entry point can
configure BLAS thread limits before numpy loads.
"""

from __future__ import annotations

__version__ = "0.1.0"

_EXPORTS = {
    # cyclo
    "CycNum": "cyclo",
    "cyc_root": "cyclo",
    "i_power": "cyclo",
    "sqrt_e": "cyclo",
    "gauss_sum": "cyclo",
    "euler_phi": "cyclo",
    "cyclotomic_poly": "cyclo",
    "embed_complex": "cyclo",
    # combin
    "tuples": "combin",
    "schur_eval": "combin",
    "ssyt_weights": "combin",
    "SymbolRep": "combin",
    "eps_sign": "combin",
    "signed_permutations": "combin",
    # smatrix
    "ScaledMatrix": "smatrix",
    "dft_smatrix": "smatrix",
    "exterior_power": "smatrix",
    "exterior_dft": "smatrix",
    "fourier_block": "smatrix",
    "symbols_E_prime": "smatrix",
    "unit_symbol": "smatrix",
    "congruence_target": "smatrix",
    "orthogonality_check": "smatrix",
    "tensor": "smatrix",
    # fusion
    "FusionRing": "fusion",
    "verlinde": "fusion",
    "normalize_signs": "fusion",
    "based_ring_axioms": "fusion",
    "integrality_check": "fusion",
    "neg_scan": "fusion",
    "nonneg_sign_search": "fusion",
    "involution_from_conjugation": "fusion",
    "float_verlinde": "fusion",
    # modular
    "ModularDatum": "modular",
    "t_matrix_cyclic": "modular",
    "exterior_t": "modular",
    "sl2z_check": "modular",
    "gauss_sum_identity": "modular",
    # kacpeterson
    "kp_a1": "kacpeterson",
    "kp_cl": "kacpeterson",
    "weights_cl": "kacpeterson",
    "equiv_check": "kacpeterson",
    # errors
    "CycFusionError": "errors",
}

__all__ = sorted(_EXPORTS) + ["__version__"]


def __getattr__(name: str):
    module = _EXPORTS.get(name)
    if module is None:
        raise AttributeError(f"module 'cycfusion' has no attribute {name!r}")
    import importlib

    return getattr(importlib.import_module(f".{module}", __name__), name)


def __dir__():
    return __all__
