from . import folding, lemma5  # noqa: F401
