"""Common zeros of finite exponential transforms of polynomial densities.

Densities are ascending coefficient lists. Each coefficient may be an int,
a rational string such as "3/4", a float (converted exactly), a Python
complex, or a dict {"re": ..., "im": ...}.
"""

import json

from . import _bezout
from ._bezout import BezoutError, ParseError

__version__ = _bezout.__version__

__all__ = [
    "BezoutError",
    "ParseError",
    "bessel_reference",
    "count_zeros",
    "decide",
    "emit_grid",
    "eval_transform",
    "kernel",
    "kernel_value",
    "locate_zeros",
    "residual_study",
    "run",
]


def _coeff(c):
    if isinstance(c, complex):
        return {"re": c.real, "im": c.imag}
    return c


def _poly(p):
    return json.dumps([_coeff(c) for c in p])


def _num(a):
    return json.dumps(_coeff(a))


def decide(psi1, psi2, a, coeff_class="rational"):
    """Symbolic verdict as a dict."""
    return json.loads(_bezout.decide(_poly(psi1), _poly(psi2), _num(a), coeff_class))


def eval_transform(psi, a, z, reflected=False):
    """F(z) = int_0^a e^{izt} conj(psi(t)) dt, or the reflected transform."""
    return _bezout.eval_transform(_poly(psi), _num(a), complex(z), reflected)


def count_zeros(psi, a, rect, reflected=False, boundary_margin=1e-3):
    return _bezout.count_zeros(_poly(psi), _num(a), list(rect), reflected, boundary_margin)


def locate_zeros(psi, a, rect, tol=1e-10, reflected=False, boundary_margin=1e-3):
    """List of (z, multiplicity, residual) sorted by (Re z, Im z)."""
    return _bezout.locate_zeros(_poly(psi), _num(a), list(rect), tol, reflected, boundary_margin)


def kernel(psi1, psi2, a):
    """Exact kernel coefficients (rational strings) of the normalized pair."""
    return json.loads(_bezout.kernel(_poly(psi1), _poly(psi2), _num(a)))


def kernel_value(psi1, psi2, a, x, t):
    return _bezout.kernel_value(_poly(psi1), _poly(psi2), _num(a), x, t)


def residual_study(psi1, psi2, a, sizes=(32, 64, 128)):
    return json.loads(_bezout.residual_study(_poly(psi1), _poly(psi2), _num(a), list(sizes)))


def run(spec, include_timing=True):
    """Runs a problem (dict or JSON text). Returns (report dict, exit code)."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    report, code = _bezout.run(text, include_timing)
    return json.loads(report), code


def emit_grid(spec, n):
    """CSV text with columns re,im,absF1,absF21."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    return _bezout.emit_grid(text, n)


def bessel_reference(n, x_max):
    return _bezout.bessel_reference(n, x_max)
