"""Surface Hecke algebras by noncommutative rewriting, with a wreath-product oracle at hbar=0."""

from .braids import (
    BraidContext,
    Permutation,
    Surface,
    parse_word,
    print_word,
    random_word,
    underlying_permutation,
    winding_vector,
)
from .coeff import Coefficient, Ring, coeff_add, coeff_mul, specialize, subst_hbar
from .errors import (
    AlphabetMismatch,
    CtxMismatch,
    FixtureError,
    IllegalGenerator,
    OrderViolation,
    SkeinHeckeError,
    StepCapExceeded,
    TagMismatch,
    VariantSurfaceMismatch,
    WordSyntaxError,
)
from .hecke import (
    HeckeInstance,
    build_instance,
    degenerate,
    enumerate_hecke_basis,
    hecke_mul,
    to_bsk,
)
from .index import IndexInput, fredholm_index, graded_index, hbar_degree, matching_maslov
from .rewrite import (
    MonomialOrder,
    RewriteRule,
    RewriteSystem,
    confluence_check,
    enumerate_basis,
    find_ambiguities,
    reduce,
)
from .words import AlgebraElement, Generator, Word, elem_add, elem_mul, word_concat
from .wreath import WreathElement, WreathSum, wreath_mul

__version__ = "0.1.0"
