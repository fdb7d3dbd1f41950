from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("free_knot_check")
except PackageNotFoundError:
    __version__ = "0.1.0"
