"""Tunable limits, overridable through the environment at call time."""

import os

DEFAULT_MAX_BDD_NODES = 1 << 22
DEFAULT_MAX_ENUM = 4096

ENV_MAX_BDD_NODES = "FAM_MAX_BDD_NODES"
ENV_MAX_ENUM = "FAM_MAX_ENUM"
ENV_PURE_PYTHON = "FAM_PURE_PYTHON"


def _read(env_name, default):
    raw = os.environ.get(env_name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{env_name} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{env_name} must be positive, got {value}")
    return value


def max_bdd_nodes():
    return _read(ENV_MAX_BDD_NODES, DEFAULT_MAX_BDD_NODES)


def max_enum():
    return _read(ENV_MAX_ENUM, DEFAULT_MAX_ENUM)


def force_pure_python():
    return os.environ.get(ENV_PURE_PYTHON, "").strip().lower() in ("1", "true", "yes", "on")
