from . import free_group, expr  # noqa: F401
