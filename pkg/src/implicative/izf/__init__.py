"""Formulas of set theory interpreted in the truncated universe, with verified realizers."""
from .axioms import (AXIOMS, DEFAULT_INSTANCES, SCHEMATA, AxiomOptions, AxiomReport, axiom_formula,
                     check_axiom, run_axiom_suite)
from .formula import ContextedFormula, Formula, parse_formula
from .interp import check_entailment, interpret, modes_equivalent, predicate, satisfies
from .realizers import (CoreRealizers, bounded_quantifier_equiv, core_realizers, subst_realizer,
                        verify_core_realizers)
