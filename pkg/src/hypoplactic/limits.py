"""Resource bounds for the exhaustive procedures.

Each bound can be overridden through an environment variable; the value is
read at call time so the CLI and tests can adjust it without reimporting.
"""
import os

DEFAULTS = {
    "HYPO_CLASS_BOUND": 10**6,  # congruence class size in rewrite BFS
    "HYPO_FRONTIER_BOUND": 10**6,  # visited patterns in consequence BFS
    "HYPO_ASSIGNMENT_BOUND": 10**7,  # evaluations tried by identity checks
    "HYPO_SEARCH_BOUND": 10**6,  # patterns scanned by identity enumeration
}


def bound(name: str) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return DEFAULTS[name]
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {raw!r}")
    return value


def class_bound() -> int:
    return bound("HYPO_CLASS_BOUND")


def frontier_bound() -> int:
    return bound("HYPO_FRONTIER_BOUND")


def assignment_bound() -> int:
    return bound("HYPO_ASSIGNMENT_BOUND")


def search_bound() -> int:
    return bound("HYPO_SEARCH_BOUND")
