"""
geoq: finite incidence pregeometries, their quotients by type-refining
partitions and group orbits, and exact deciders for the classical
quotient properties (flag lifting, covers, the PQ/TQ axiom families,
diagrams, coset pregeometries and shadowable lifts).
"""

from .geometry import (Pregeometry, validate, flags_of_type, is_geometry,
                       is_firm, residue, truncation, incidence_distance,
                       is_connected, is_residually_connected,
                       is_generalized_digon, INF)
from .quotient import (Partition, Projection, quotient, singleton_partition,
                       lift_flag, check_flagslift, check_jflags_lift,
                       residual_surjectivity, corank1_surjective,
                       corank1_injective, min_block_distance, is_m_cover,
                       is_cover, check_PQ1, check_PQ2, total_order_flagslift)
from .perms import (Perm, PermGroup, CapExceeded, orbit_partition,
                    stabilizer, normal_closure, transitivity,
                    is_semiregular, automorphism_group, multicover_array,
                    induced_quotient_group)
from .axioms import (OrbitQuotient, check_TQ1, check_TQ2prime,
                     check_TQ2doubleprime, check_TQ3, axioms_report)
from .cosets import (FiniteGroup, Subgroup, CosetGeometry,
                     coset_pregeometry, rank2_connectivity,
                     rank3_ft_condition, product_condition, coseteg_family,
                     is_coset_pregeometry)
from .diagram import (Diagram, basic_diagram, is_pure, direct_sum_check,
                      place_tree_flag, lift_chamber_forest,
                      star_transitive_on_paths, no_triangle_check)
from .constructions import (SimpleGraph, ssg, shadow, is_shadowable,
                            blowup, blowup_projection, shadowable_lift,
                            affine_geometry, fano_plane,
                            multipartite_geometry, grid_complement,
                            hexagon, eight_cycle, conneg_witness,
                            flnotpq1_witness, example_generators,
                            isomorphic)

__version__ = "0.1.0"
