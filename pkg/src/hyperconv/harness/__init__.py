"""Space enumeration, the law registry, reports and the exploratory search."""
from .enumerate import (count_preorders_bruteforce, count_topologies_bruteforce,
                        enumerate_spaces, preorders, spaces_up_to)
from .laws import IN_SCOPE_STATEMENTS, REGISTRY, LawRecord, ScopeConfig, get_law, law_ids, replay
from .report import Report, run_laws

__all__ = [
    "count_preorders_bruteforce", "count_topologies_bruteforce", "enumerate_spaces",
    "preorders", "spaces_up_to", "IN_SCOPE_STATEMENTS", "REGISTRY", "LawRecord",
    "ScopeConfig", "get_law", "law_ids", "replay", "Report", "run_laws",
]
