# -*- coding: utf-8 -*-

from .scalars import (
    CycScalar,
    as_scalar,
    parse_scalar,
    root_of_unity,
)

from .frobenius import (
    AlgElem,
    FrobAlg,
    check_double_dual,
    dual_basis,
    graded_piece,
    make_algebra,
)

from .catalog import (
    BUILTINS,
    builtin,
)

from .tensor import (
    TensorElem,
    WreathElem,
    tensor_space,
    wreath_algebra,
)

from .awpa import (
    AwpaElem,
    affine_wreath,
    divided_difference,
    t_element,
)

from .oracle import (
    oracle_act,
    oracle_product,
    poly_module,
)

from .structure import (
    center,
    evaluation_hom,
    graded_dimension,
    intertwiner,
    is_central,
    jucys_murphy,
    mackey_dimension_report,
)

from .automorphisms import (
    apply_automorphism,
)

from .cyclotomic import (
    CycloElem,
    cyclo_mul,
    cyclo_nakayama_check,
    cyclo_trace,
    cyclotomic_quotient,
    gram_matrix,
    make_params,
    partial_trace,
)

from .parsing import (
    parse_alg_elem,
    parse_cyclotomic,
    parse_element,
    parse_tensor,
)

from .specfile import (
    dump_algebra,
    load_algebra,
    load_quotient_params,
)

from .suite import (
    run_suite,
)

from .functions import (
    from_json,
    from_yaml,
    to_dict,
    to_json,
    to_yaml,
)

from . import dispatchers  # noqa F401

__all__ = [
    # scalars.py
    "CycScalar",
    "as_scalar",
    "parse_scalar",
    "root_of_unity",

    # frobenius.py
    "AlgElem",
    "FrobAlg",
    "check_double_dual",
    "dual_basis",
    "graded_piece",
    "make_algebra",

    # catalog.py
    "BUILTINS",
    "builtin",

    # tensor.py
    "TensorElem",
    "WreathElem",
    "tensor_space",
    "wreath_algebra",

    # awpa.py
    "AwpaElem",
    "affine_wreath",
    "divided_difference",
    "t_element",

    # oracle.py
    "oracle_act",
    "oracle_product",
    "poly_module",

    # structure.py
    "center",
    "evaluation_hom",
    "graded_dimension",
    "intertwiner",
    "is_central",
    "jucys_murphy",
    "mackey_dimension_report",

    # automorphisms.py
    "apply_automorphism",

    # cyclotomic.py
    "CycloElem",
    "cyclo_mul",
    "cyclo_nakayama_check",
    "cyclo_trace",
    "cyclotomic_quotient",
    "gram_matrix",
    "make_params",
    "partial_trace",

    # parsing.py
    "parse_alg_elem",
    "parse_cyclotomic",
    "parse_element",
    "parse_tensor",

    # specfile.py
    "dump_algebra",
    "load_algebra",
    "load_quotient_params",

    # suite.py
    "run_suite",

    # functions.py
    "from_json",
    "from_yaml",
    "to_dict",
    "to_json",
    "to_yaml",
]


__version__ = '0.1.0'

__description__ = ("affwreath: exact arithmetic in affine wreath product "
                   "algebras and their cyclotomic quotients")
__doc__ = __description__
__license__ = "MIT"
__title__ = "affwreath"
