"""The hypoplactic monoid: quasi-ribbon tableaux, its congruence, and its identities."""
from .basis import BASIS, Derivation, apply_basis, consequence_bfs, derive_from_basis, verify_derivation
from .congruence import canonical_form, equiv_invariants, equiv_rewrite, equiv_tableau, rewrite_neighbors
from .embeddings import non_embedding_witness, phi_ij, phi_n, verify_embedding
from .errors import ParseError, ResourceLimitError
from .identities import (
    HypoTarget,
    Identity,
    enumerate_identities,
    holds_by_evaluation,
    holds_in_hypo,
    is_balanced,
    restrict_to_vars,
    shortest_identity_length,
    two_variable_form_check,
)
from .monoids import MultiplicationTable, builtin, satisfies, validate_monoid
from .tableau import QuasiRibbonTableau, insert, p_symbol, reading_word, tableau_equal
from .words import content, has_subsequence, inversions, parse_word, support

__version__ = "0.1.0"
