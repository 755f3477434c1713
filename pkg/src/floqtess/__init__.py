"""Floquet codes on hyperbolic tessellations.

Construction pipeline: closed-form hyperbolic geometry (:mod:`~floqtess.hypgeo`),
combinatorial surfaces and fundamental polygons (:mod:`~floqtess.surface`),
derived tri-valent complexes (:mod:`~floqtess.derive`), three-colorings and
round schedules (:mod:`~floqtess.coloring`), stabilizer dynamics under two-body
measurements (:mod:`~floqtess.floquet`), geometric distance estimates
(:mod:`~floqtess.geodist`) and code-table generation (:mod:`~floqtess.catalog`).
"""

__version__ = "0.1.0"
