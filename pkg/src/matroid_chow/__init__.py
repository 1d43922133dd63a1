"""Exact Tutte polynomials, mixed Eulerian numbers and degrees in matroid Chow rings."""
from .chow import SymmetricClass, compositions, mixed_eulerian, mixed_eulerian_poly, monomial
from .corpus import corpus, corpus_names, named
from .degree import (class_degree, deg_delta_oracle, g, h_poly, phi_degree, phi_degrees,
                     sliding_count)
from .documents import ParseError, dump_matroid, load_matroid, parse_matroid
from .errors import ConsistencyError, DegenerateSampleError, DomainError
from .matroid import (BasisMatroid, GraphicMatroid, LinearMatroid, Matroid, UniformMatroid)
from .poly import BiPoly, MultiPoly, PowerSeries, UniPoly
from .schubert import (Permutation, forward_cycle_permutation, grassmann_pullback_degrees,
                       klyachko_class, schubert_poly)
from .tutte import char_poly, h_vector, reliability, tutte, tutte_one_y
from .verify import CheckReport, verify_corpus, verify_matroid

__version__ = "0.1.0"

__all__ = [
    "BasisMatroid", "BiPoly", "CheckReport", "ConsistencyError", "DegenerateSampleError",
    "DomainError", "GraphicMatroid", "LinearMatroid", "Matroid", "MultiPoly", "ParseError",
    "Permutation", "PowerSeries", "SymmetricClass", "UniPoly", "UniformMatroid",
    "char_poly", "class_degree", "compositions", "corpus", "corpus_names", "deg_delta_oracle",
    "dump_matroid", "forward_cycle_permutation", "g", "grassmann_pullback_degrees", "h_poly",
    "h_vector", "klyachko_class", "load_matroid", "mixed_eulerian", "mixed_eulerian_poly",
    "monomial", "named", "parse_matroid", "phi_degree", "phi_degrees", "reliability",
    "schubert_poly", "sliding_count", "tutte", "tutte_one_y", "verify_corpus", "verify_matroid",
]
