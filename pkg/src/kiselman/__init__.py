"""Kiselman semigroups K_n: words, normal forms, structure, representations and algebras."""

from .errors import (
    InvalidContentError,
    KiselmanError,
    LetterOutOfRangeError,
    NotIdempotentError,
    NotNilpotentError,
    NotUnionClosedError,
    RankMismatchError,
    ResourceLimitError,
    StepNotApplicableError,
    WordParseError,
)
from .words import Word, content, is_canonical, length_bound, parse_word, sharpness_word
from .rewrite import confluence_check, normalize, normalize_traced
from .semigroup import (
    Element,
    SemigroupTable,
    enumerate_semigroup,
    green_classes,
    idempotent,
    idempotents,
    multiply,
    nilpotent_partition,
    nilpotent_subsemigroup,
)
from .representations import faithfulness_check, height, kappa, kappa_prime, psi
from .algebra import AlgebraElement, corner_dimensions, primitive_idempotent, projective_module

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "Element",
    "InvalidContentError",
    "KiselmanError",
    "LetterOutOfRangeError",
    "NotIdempotentError",
    "NotNilpotentError",
    "NotUnionClosedError",
    "RankMismatchError",
    "ResourceLimitError",
    "SemigroupTable",
    "StepNotApplicableError",
    "Word",
    "WordParseError",
    "confluence_check",
    "content",
    "corner_dimensions",
    "enumerate_semigroup",
    "faithfulness_check",
    "green_classes",
    "height",
    "idempotent",
    "idempotents",
    "is_canonical",
    "kappa",
    "kappa_prime",
    "length_bound",
    "multiply",
    "nilpotent_partition",
    "nilpotent_subsemigroup",
    "normalize",
    "normalize_traced",
    "parse_word",
    "primitive_idempotent",
    "projective_module",
    "psi",
    "sharpness_word",
]
