"""Brute-force finite-group ground truth: exhaustive matrix groups, exact
character tables, and restriction multiplicities for the symmetric pairs
that control distinction at residue level."""

from .abelian import abelian_verdicts, restriction_trivial
from .cache import gl_table
from .dixon import CharacterTable, check_table, dixon_table
from .groups import (ConjugacyClasses, FiniteMatrixGroup, OracleError, conjugacy_classes,
                     enumerate_gl)
from .pairs import (PairKind, SymmetricPairSpec, XiClass, build_pair, lusztig_xi,
                    multiplicity_trivial, prasad_check, twisted_multiplicity)

__all__ = [
    "CharacterTable", "ConjugacyClasses", "FiniteMatrixGroup", "OracleError", "PairKind",
    "SymmetricPairSpec", "XiClass", "abelian_verdicts", "build_pair", "check_table",
    "conjugacy_classes", "dixon_table", "enumerate_gl", "gl_table", "lusztig_xi",
    "multiplicity_trivial", "prasad_check", "restriction_trivial", "twisted_multiplicity",
]
