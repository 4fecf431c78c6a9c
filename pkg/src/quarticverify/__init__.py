"""Exact verification toolkit for nodal quartic surfaces.

The package rebuilds, from first principles, the explicit computations that
appear in classification work on quartic double solids with isolated nodes:

* exact scalar arithmetic in towers of quadratic radical extensions over a
  rational parameter field (:mod:`quarticverify.exactfield`),
* homogeneous polynomial algebra over those scalars
  (:mod:`quarticverify.multipoly`, :mod:`quarticverify.linalg`),
* projective certificates: node certification, trope detection, conics
  through point sets (:mod:`quarticverify.projgeom`),
* pencils of quadrics and their discriminant data
  (:mod:`quarticverify.quadpencil`),
* finite subgroup closures of PGL4 with orbit and semi-invariance reports
  (:mod:`quarticverify.matgroup`),
* a catalog of published coefficient families re-derived and cross-checked
  (:mod:`quarticverify.families`),
* a fixture-driven command line verifier (:mod:`quarticverify.vcli`).
"""

__version__ = "0.1.0"
