"""Container for surface snapshots produced by any of the solvers."""

from dataclasses import dataclass, field

import numpy as np


@dataclass
class SurfaceSeries:
    """Snapshots of the free-surface displacement over (x, t).

    f has shape (len(times), len(x)).  meta records which solver produced
    the data, the dimensionless parameters, a bed description and the unit
    system ('nondim' or 'physical').
    """

    times: np.ndarray
    x: np.ndarray
    f: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.times = np.atleast_1d(np.asarray(self.times, dtype=float))
        self.x = np.asarray(self.x, dtype=float)
        self.f = np.atleast_2d(np.asarray(self.f, dtype=float))
        if self.f.shape != (self.times.size, self.x.size):
            raise ValueError(
                f"f has shape {self.f.shape}, expected {(self.times.size, self.x.size)}"
            )

    @property
    def units(self):
        return self.meta.get("units", "nondim")
