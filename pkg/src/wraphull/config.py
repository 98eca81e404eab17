"""Central numeric tolerances.

EPSILON is the absolute tolerance, in window units, used by collinearity
and cocircularity predicates and by on-boundary point classification.
Functions read it at call time, so tests or callers can adjust it::

    from wraphull import config
    config.EPSILON = 1e-10
"""

EPSILON = 1e-12


def epsilon(override=None):
    """Return the tolerance to use: the override if given, else the default."""
    if override is None:
        return EPSILON
    return float(override)
