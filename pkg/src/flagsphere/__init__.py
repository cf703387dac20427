"""Flag simplicial spheres: constructions, stable sets, sphere certificates, rigidity."""
from .complex import (Complex, clique_complex, euler_characteristic, f_vector, from_facets,
                      is_flag, join, link, parse_facets, read_facets, skeleton_graph,
                      stellar_subdivide_edge, stellar_subdivide_facet, suspension, write_facets)
from .constructions import (ConstructionSpec, build_W, build_W4_prime, build_X, build_X4_prime,
                            build_Y, build_Y4_prime, crosspolytope, cyclic_boundary,
                            join_upper_family, neighborly_subdivided, polygon_suspension)
from .errors import (DimMismatch, FlagSphereError, Inconclusive, InvalidInput, InvalidSpec,
                     NotAFace, NotAFacet, NotPure, PreconditionFailed, SolverTimeout)
from .graph import (Graph, StableSetWitness, alpha_exact, link_recursive_stable, read_graph,
                    turan_stable, write_graph)
from .rigidity import generic_rank, rigidity_probe, stress_inequality_check
from .verify import CERTIFIED, HOMOLOGY_SPHERE, NOT_SPHERE, SphereCert, verify_sphere

__version__ = "0.1.0"
