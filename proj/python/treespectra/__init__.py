"""Exact spectral toolkit for the Min4PC / Max4PC / 2-Steiner distance matrices of trees.

Everything is computed in exact arbitrary-precision arithmetic; matrices come
back as nested lists of ``int`` / ``fractions.Fraction`` and polynomials as
coefficient lists with index = degree.
"""

from treespectra._core import (  # noqa: F401
    TreespectraError,
    Tree,
    PairBasis,
    __version__,
    all_labeled_trees,
    analyze,
    bistar,
    build_tree,
    charpoly,
    closed_form_bistar_steiner,
    closed_form_min4pc,
    closed_form_star_steiner,
    conjecture_scan,
    determinant,
    embedding_table,
    equitable_quotient,
    inertia,
    inverse,
    min4pc_basis,
    non_edges,
    normalized_tree_coeffs,
    pair_matrix,
    path,
    path_instance,
    path_ordered_basis,
    peak_bound,
    prufer,
    quadruple_sums,
    random_tree,
    rank,
    restricted_matrix,
    schur_complement,
    star,
    steiner_basis,
    steiner_distance,
    steiner_v,
    verify_embedding,
    verify_tree,
)
