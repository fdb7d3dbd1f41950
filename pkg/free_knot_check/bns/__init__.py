from . import brown, svg  # noqa: F401
