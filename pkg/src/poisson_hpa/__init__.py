"""Up-to-homotopy Poisson actions: verification, bundles, graded algebras, quantization."""

__version__ = "0.1.0"
