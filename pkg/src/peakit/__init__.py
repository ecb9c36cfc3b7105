"""Finite-model workbench for pseudo-effect algebras and their residuated duals."""

from __future__ import annotations

from .convert import (
    ExpressionMismatch,
    NotLattice,
    OrderMismatch,
    cdcip_to_pea,
    lpea_to_psa,
    pea_to_cdcip,
    psa_to_dcilattice,
    psa_to_pea,
)
from .enumerate import (
    KERNEL,
    OrderTooLarge,
    SearchOptions,
    canonical_form,
    enumerate_peas,
    isomorphic,
    search_counterexample,
)
from .io import ModelFile, ParseError, ValidationFailed, dumps, loads, read_model, write_model
from .laws import SUITES, check_law, classify, compatible, compatible_pair_count, pseudocommute
from .models import (
    CheckReport,
    NotComparable,
    ConditionalDoubleCIPoset,
    DoubleCIPoset,
    PseudoEffectAlgebra,
    PseudoSasakiAlgebra,
    UnsupportedOperation,
    ValidationError,
    Violation,
    cdcip_check,
    dcip_check,
    pea_complements,
    pea_from_table,
    pea_subtract,
    psa_check,
)
from .order import FiniteBoundedPoset, chain, from_covers, validate_poset
from .terms import Law, TermSyntaxError, parse_law, parse_term

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
