"""Finite multiplicative lattice engine."""

from mlat._core import (
    Allowlist,
    AxiomCheck,
    AxiomReport,
    AxiomViolation,
    CheckInfo,
    CheckResult,
    ElementProfile,
    HollowProfile,
    Lattice,
    LatticeProfile,
    LocalizationResult,
    MineResult,
    ProductResult,
    QuotientResult,
    StructureError,
    SuiteReport,
    Witness,
    canonical_digest,
    completely_strongly_hollow_elements,
    element_profile,
    element_profile_text,
    element_profiles,
    enumerate_mult_lattices,
    from_text,
    generate,
    hollow_profile,
    is_completely_strongly_hollow,
    is_prime,
    is_representable,
    is_strongly_hollow,
    isomorphic,
    kappa,
    kappa_residual,
    lattice_profile,
    lattice_profile_text,
    load_allowlist,
    load_file,
    load_manifest,
    localize,
    localize_at_prime,
    mine,
    minimal_representation,
    missed_set,
    nilradical,
    parse_allowlist,
    parse_manifest,
    product,
    quotient,
    registered_checks,
    relabel,
    replay,
    replay_violation,
    report_machine,
    report_text,
    residual,
    resolve_check_ids,
    run_suite,
    save_file,
    strongly_hollow_elements,
    suite_passes,
    to_text,
    validate,
)

__all__ = [
    "Allowlist",
    "AxiomCheck",
    "AxiomReport",
    "AxiomViolation",
    "CheckInfo",
    "CheckResult",
    "ElementProfile",
    "HollowProfile",
    "Lattice",
    "LatticeProfile",
    "LocalizationResult",
    "MineResult",
    "ProductResult",
    "QuotientResult",
    "StructureError",
    "SuiteReport",
    "Witness",
    "canonical_digest",
    "completely_strongly_hollow_elements",
    "element_profile",
    "element_profile_text",
    "element_profiles",
    "enumerate_mult_lattices",
    "from_text",
    "generate",
    "hollow_profile",
    "is_completely_strongly_hollow",
    "is_prime",
    "is_representable",
    "is_strongly_hollow",
    "isomorphic",
    "kappa",
    "kappa_residual",
    "lattice_profile",
    "lattice_profile_text",
    "load_allowlist",
    "load_file",
    "load_manifest",
    "localize",
    "localize_at_prime",
    "mine",
    "minimal_representation",
    "missed_set",
    "nilradical",
    "parse_allowlist",
    "parse_manifest",
    "product",
    "quotient",
    "registered_checks",
    "relabel",
    "replay",
    "replay_violation",
    "report_machine",
    "report_text",
    "residual",
    "resolve_check_ids",
    "run_suite",
    "save_file",
    "strongly_hollow_elements",
    "suite_passes",
    "to_text",
    "validate",
]

__version__ = "0.1.0"
