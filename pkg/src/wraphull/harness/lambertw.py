"""Principal branch of the Lambert W function on [0, inf).

W(z) solves w * exp(w) = z. Only the nonnegative real axis is needed
here, where the principal branch is well defined and smooth, so a
guarded Newton iteration converges in a handful of steps.
"""

import numpy as np

from ..errors import ValidationError

_TOL = 1e-14
_MAX_ITER = 200


def lambert_w(z):
    """W(z) for scalar z >= 0, accurate to better than 1e-12."""
    z = float(z)
    if not np.isfinite(z) or z < 0:
        raise ValidationError("lambert_w is implemented for nonnegative arguments")
    if z == 0.0:
        return 0.0
    # initial guess: log-based for large z, z itself near the origin
    if z > np.e:
        w = np.log(z)
        w = w - np.log(w)
    elif z > 0.25:
        w = 0.5
    else:
        w = z * (1.0 - z)
    for _ in range(_MAX_ITER):
        ew = np.exp(w)
        f = w * ew - z
        # derivative (w + 1) e^w never vanishes for w > -1, which holds
        # on the principal branch for z > 0
        dw = f / (ew * (w + 1.0))
        w -= dw
        if abs(dw) <= _TOL * max(1.0, abs(w)):
            break
    return float(w)
