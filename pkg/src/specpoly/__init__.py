"""specpoly: exact polytope bounds on one-body quantum-marginal spectra.

Modules follow the pipeline: `ratgeom` (exact polyhedra), `lie` (root
systems and chambers), `scenarios` (physical systems on the weight basis),
`excitations` (excitation layers), `bounds` (inner/outer polytopes and the
reference catalog), `oracle` (floating-point momentum-map sampler),
`formats` (JSON/cdd serialization), `cli`.
"""

__version__ = "0.1.0"
