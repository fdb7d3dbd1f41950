from . import templates  # noqa: F401
