"""Homogeneous quandles with abelian inner automorphism groups.

A quandle in this class is an abelian extension of a trivial quandle and is
captured by a weighted digraph over a finite abelian group; the package
builds quandles from digraphs, extracts presentations, decides isomorphism,
classifies all orders up to 15, and verifies the icosidodecahedron
counterexample separating weight homogeneity from quandle homogeneity.
"""

from .algebra import AbelianGroup, PermGroup
from .classify import (
    burnside_count,
    burnside_details,
    classify_order,
    count_two_p,
    moduli_label,
    reproduce_table,
    write_catalog,
)
from .errors import (
    BudgetExceeded,
    CapExceeded,
    FormatError,
    NotInClass,
    resolve_budget,
)
from .extension import (
    PresentationWitness,
    build,
    inner_order_from_rows,
    presentation,
    read_witness,
    reconstruct_iso,
    write_witness,
)
from .geometry import (
    build_icosidodecahedron,
    build_qid,
    verify_no_homogeneous_weight,
    verify_qid_homogeneous,
)
from .quandle import (
    Quandle,
    check_axioms,
    inner_group,
    is_connected,
    is_homogeneous,
    quandle_isomorphic,
    read_qnd,
    write_qnd,
)
from .wdigraph import (
    WeakIso,
    WeightedDigraph,
    canonical_form,
    is_flip_homogeneous,
    is_indecomposable,
    read_wdg,
    vertex_transitive_digraphs,
    weak_isomorphism,
    write_wdg,
)

__version__ = "0.1.0"
