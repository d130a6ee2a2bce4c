from .algebra import Mode, YangianAlgebra, build_algebra
from .central import (
    CentralElement,
    central_element_closed_form,
    central_series_expand,
    d_inverse_coeff,
    shifted_d2_coeff,
)
from .rules import RelationTable, RewriteRule, RuleTemplate, load_rule_file, parse_rule_text
from .series import DSeries
from .verify import (
    confluence_check,
    default_probes,
    dimension_report,
    graded_dimension,
    verify_centrality,
    verify_commutes,
    verify_polynomial_center,
)

__all__ = [
    "CentralElement",
    "DSeries",
    "Mode",
    "RelationTable",
    "RewriteRule",
    "RuleTemplate",
    "YangianAlgebra",
    "build_algebra",
    "central_element_closed_form",
    "central_series_expand",
    "confluence_check",
    "d_inverse_coeff",
    "default_probes",
    "dimension_report",
    "graded_dimension",
    "load_rule_file",
    "parse_rule_text",
    "shifted_d2_coeff",
    "verify_centrality",
    "verify_commutes",
    "verify_polynomial_center",
]
