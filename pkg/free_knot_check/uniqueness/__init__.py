from . import factorization  # noqa: F401
