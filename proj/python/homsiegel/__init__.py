"""Bergman kernels of homogeneous Siegel domains."""

import json
from pathlib import Path

from . import _core
from ._core import BranchError, DomainError, Error, NumericalError, StructuralError

__all__ = [
    "Domain",
    "catalog",
    "load",
    "distance_disk",
    "oracle_kernel",
    "oracle_volume",
    "Error",
    "StructuralError",
    "DomainError",
    "BranchError",
    "NumericalError",
]


class Domain:
    """A domain spec, held as JSON text for the native layer."""

    def __init__(self, spec):
        self._spec = spec if isinstance(spec, str) else json.dumps(spec)

    @property
    def spec(self):
        return json.loads(self._spec)

    def validate(self):
        return json.loads(_core.validate(self._spec))

    def exponents(self, convention="calibrated"):
        return json.loads(_core.exponents(self._spec, convention))

    def base_point(self):
        return _core.base_point(self._spec)

    def random_point(self, seed=42, stream=0, spread=0.5):
        return _core.random_point(self._spec, seed, stream, spread)

    def log_kernel(self, p, q, form="ratio"):
        """log K(p, q) for points given as (Z, U) tuples."""
        return _core.kernel(self._spec, p[0], _u(p), q[0], _u(q), form)

    def kernel(self, p, q, form="ratio"):
        import cmath

        return cmath.exp(self.log_kernel(p, q, form))

    def metric(self, p):
        return _core.metric(self._spec, p[0], _u(p))

    def envelope(self, rho=1.0, samples=500, seed=42):
        return json.loads(_core.envelope(self._spec, rho, samples, seed))

    def far_field(self, rho=0.5, z_samples=20, w_samples=10000, seed=42):
        return json.loads(_core.far_field(self._spec, rho, z_samples, w_samples, seed))


def _u(p):
    return p[1] if len(p) > 1 and p[1] is not None and p[1].size else None


def catalog(name):
    return Domain(_core.catalog_spec(name))


def load(path):
    return Domain(Path(path).read_text())


def distance_disk(w1, w2, n):
    return _core.distance_disk(w1, w2, n)


def oracle_kernel(domain, degree, samples=1_000_000, seed=42, convention="calibrated"):
    return json.loads(_core.oracle_kernel(domain, degree, samples, seed, convention))


def oracle_volume(domain, samples=1_000_000, seed=42):
    return json.loads(_core.oracle_volume(domain, samples, seed))
