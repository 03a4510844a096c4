"""Sectional pseudocomplementation on finite posets.

Build a poset, compute its star table (the pseudocomplement of x in each
section [y)), extend the partial operation to a total implication-like one by
any of the bundled rules, check the resulting tables against the named axiom
systems, and verify the underlying theorems exhaustively over all small
posets.
"""

from .axioms import (
    AxiomReport,
    ImplicativityReport,
    SubalgebraReport,
    Verdict,
    check_system,
    implicativity,
    is_esp,
    is_normal,
    is_strong,
    subalgebra_closed,
    verify_lemma_suite,
)
from .enumeration import (
    VerificationReport,
    are_isomorphic,
    count_posets_naive,
    enumerate_extensions,
    enumerate_posets,
    find_counterexample,
    verify_theorem,
)
from .errors import SpposetError
from .extensions import (
    ExtensionResult,
    LocalSelection,
    UndefinedPair,
    dual_j_extension,
    i_min_extension,
    i_natural_extension,
    lb_min_extension,
    m_extension,
    mlb_extension,
    natural_extension,
    natural_min_form,
    normal_extension,
    pure_extension,
    selection_custom,
    selection_frink,
    selection_union,
)
from .fileformat import Document, Section, emit, parse, parse_path
from .poset import ElementSet, Poset, StructureReport, build_poset
from .pseudo import (
    ItemResult,
    MissingWitness,
    PartialTable,
    PropertyReport,
    TotalTable,
    clp_complement,
    restrict,
    rp_complement,
    section_top,
    sp_complement,
    star_table,
    verify_sp_properties,
    wrp_complement,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
