"""Exception types shared across the package.

Input validation failures raise ValueError (or the GeometryError subclass),
numerical failures raise NumericalError.  The command line tool maps the two
families to distinct exit codes.
"""


class GeometryError(ValueError):
    """Link geometry is unphysical, e.g. overlapping antenna spheres."""


class NumericalError(RuntimeError):
    """A quadrature, bisection, or conditioning failure in the numerics."""
