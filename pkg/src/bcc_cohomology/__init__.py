"""Z/2 cohomology rings of 3D binary pictures on the body-centered cubic grid."""

from .algthin import Pipeline, algebraic_thinning, betti, full_pipeline
from .contraction import ChainContraction, GeneratorComplex, compose, verify
from .cupring import CupMatrix, cocycle_of, cup_classes, cup_matrix, f_odot_f, hb1
from .grid import DigitalPicture, cubic_to_bcc, load_picture, neighbors14_bcc
from .simplicial import SimplicialComplex, build_representation, default_filtration
from .topothin import collapse, collapse_contraction

__version__ = "0.1.0"

__all__ = [
    "ChainContraction", "CupMatrix", "DigitalPicture", "GeneratorComplex", "Pipeline",
    "SimplicialComplex", "algebraic_thinning", "betti", "build_representation", "cocycle_of",
    "collapse", "collapse_contraction", "compose", "cubic_to_bcc", "cup_classes", "cup_matrix",
    "default_filtration", "f_odot_f", "full_pipeline", "hb1", "load_picture", "neighbors14_bcc",
    "verify",
]
