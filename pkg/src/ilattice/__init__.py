"""Finite universes with an indistinguishability partition, the closure
("cloud") operator they induce, the resulting lattice in its two meet
conventions, a law-audit engine with counterexample search, and a
propositional logic evaluated into the lattice."""

from .errors import (
    BudgetExceededError,
    FormulaSyntaxError,
    UniverseError,
    UniverseMismatchError,
    ValuationError,
)
from .formulas import (
    Bicond,
    Cond,
    Conj,
    Disj,
    Formula,
    FormulaUniverse,
    Neg,
    Var,
    atoms_of,
    formula_depth,
    generate_formulas,
    parse_formula,
    render,
    subformulas,
)
from .lattice import (
    OpMode,
    accessible,
    incompatible,
    join,
    leq,
    leq1,
    meet,
    modular_instance,
    one,
    ortho,
    orthogonal,
    orthomodular_instance,
    pairwise_orthogonal,
    zero,
)
from .semantics import (
    ConditionReport,
    ConsequenceReport,
    DeductionProbeReport,
    ModelTable,
    ValidityReport,
    Valuation,
    check_implication_conditions,
    cn,
    deduction_theorem_probe,
    eval_formula,
    is_definable_by,
    is_true,
    is_valid,
    load_valuation,
    semantic_consequence,
    syntactic_consequence,
    valuation_from_dict,
)
from .universe import (
    Atom,
    QSet,
    Universe,
    build_universe,
    enumerate_subsets,
    load_universe,
    universe_from_dict,
    universe_to_dict,
)
from .verifier import (
    AuditTable,
    CheckStrategy,
    EXHAUSTIVE,
    LawReport,
    LawSpec,
    REPORT_SCHEMA,
    audit,
    check_law,
    enumerate_partitions,
    iter_universes,
    law_by_name,
    law_registry,
    search_counterexample,
    universe_from_partition,
)

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "AuditTable",
    "Bicond",
    "BudgetExceededError",
    "CheckStrategy",
    "Cond",
    "ConditionReport",
    "Conj",
    "ConsequenceReport",
    "DeductionProbeReport",
    "Disj",
    "EXHAUSTIVE",
    "Formula",
    "FormulaSyntaxError",
    "FormulaUniverse",
    "LawReport",
    "LawSpec",
    "ModelTable",
    "Neg",
    "OpMode",
    "QSet",
    "REPORT_SCHEMA",
    "Universe",
    "UniverseError",
    "UniverseMismatchError",
    "ValidityReport",
    "Valuation",
    "ValuationError",
    "Var",
    "accessible",
    "atoms_of",
    "audit",
    "build_universe",
    "check_implication_conditions",
    "check_law",
    "cn",
    "deduction_theorem_probe",
    "enumerate_partitions",
    "enumerate_subsets",
    "eval_formula",
    "formula_depth",
    "generate_formulas",
    "incompatible",
    "is_definable_by",
    "is_true",
    "is_valid",
    "iter_universes",
    "join",
    "law_by_name",
    "law_registry",
    "leq",
    "leq1",
    "load_universe",
    "load_valuation",
    "meet",
    "modular_instance",
    "one",
    "ortho",
    "orthogonal",
    "orthomodular_instance",
    "pairwise_orthogonal",
    "parse_formula",
    "render",
    "search_counterexample",
    "semantic_consequence",
    "subformulas",
    "syntactic_consequence",
    "universe_from_dict",
    "universe_from_partition",
    "universe_to_dict",
    "valuation_from_dict",
    "zero",
]
