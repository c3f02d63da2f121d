"""Matroids through their cyclic flats: G-invariants, catenary data,
configurations and constructions of matroids that the G-invariant
cannot tell apart."""

from .core import Matroid, MatroidError, PavingSpec, matroid_from_paving, uniform
from .lattice import FiniteLattice, LabeledLattice, LatticeError, find_isomorphism, labeled_isomorphic
from .zfl import RankedFamily, ValidationReport, ZAxiomError, configuration_of, matroid_from_cyclic_flats, \
    validate_Z_axioms
from .ginv import (catenary_data, chain_report, dual_transform, g_from_catenary, g_invariant,
                   g_invariant_bruteforce, inclusion_exclusion_check, verify_chain_partition)
from .constructions import (LatticeExtensionSpec, PavingPairSpec, build_lattice_extension, dualize_pair,
                            example1_family, parallel_extension, realize_extension_pair, realize_paving_pair,
                            verify_paving_hypotheses)
from .tutte import format_polynomial, tutte_deletion_contraction, tutte_polynomial
from .fileformat import MatroidFile, PavingFile, load, load_fixture

__version__ = "0.1.0"
