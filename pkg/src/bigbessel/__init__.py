"""bigbessel: Bessel, Hankel and Airy functions of large order and complex argument.

The main entry point is :func:`bigbessel.evaluate` (see dispatch module); the
Airy functions are exposed through :func:`bigbessel.airy_eval`.
"""

from .core import AccuracyConfig, DEFAULT_CONFIG, ScaledComplex, ln_gamma_real, scaled_add, scaled_mul

__all__ = [
    "AccuracyConfig",
    "DEFAULT_CONFIG",
    "ScaledComplex",
    "ln_gamma_real",
    "scaled_add",
    "scaled_mul",
    "airy_eval",
    "evaluate",
    "evaluate_many",
    "EvalRequest",
    "EvalResult",
]


def __getattr__(name):
    # heavier modules are imported lazily so `import bigbessel` stays light
    if name == "airy_eval":
        from .airy import airy_eval
        return airy_eval
    if name in ("evaluate", "evaluate_many", "EvalRequest", "EvalResult"):
        from . import dispatch
        return getattr(dispatch, name)
    raise AttributeError(f"module 'bigbessel' has no attribute {name}")
