from .certificate import Certificate, Check, certify, decide_verdict, reverify
from .checks import (
    congruence_conditions,
    congruence_scan,
    local_conditions_check,
    special_point_check,
    suggest_discriminants,
)
from .config import ScreenConfig
from ..shimura_graph.genus import genus_and_gonality

__all__ = [
    "Certificate",
    "Check",
    "ScreenConfig",
    "certify",
    "congruence_conditions",
    "congruence_scan",
    "decide_verdict",
    "genus_and_gonality",
    "local_conditions_check",
    "reverify",
    "special_point_check",
    "suggest_discriminants",
]
