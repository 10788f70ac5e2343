"""
Process-wide cache of immutable transform plans, keyed by (kind, N, variant).
"""

from __future__ import annotations

from threading import Lock
from typing import Callable, Dict, List, Tuple, TypeVar

PlanKey = Tuple[str, int, int]
P = TypeVar("P")

_plans: Dict[PlanKey, object] = {}
_lock = Lock()


def get_plan(kind: str, n: int, variant: int, builder: Callable[[], P]) -> P:
    """Return the cached plan for the key, building it on first use."""
    key = (kind, n, variant)
    plan = _plans.get(key)
    if plan is not None:
        return plan  # type: ignore[return-value]
    # Built outside the lock: builders recurse into get_plan for child plans
    built = builder()
    with _lock:
        return _plans.setdefault(key, built)  # type: ignore[return-value]


def cached_plan_keys() -> List[PlanKey]:
    with _lock:
        return sorted(_plans)


def clear_plan_cache() -> None:
    with _lock:
        _plans.clear()
