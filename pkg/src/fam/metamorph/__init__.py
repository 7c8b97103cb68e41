from fam.metamorph.dialect import Dialect, load_dialect, parse_dialect
from fam.metamorph.emit import emit, morph

__all__ = ["Dialect", "load_dialect", "parse_dialect", "emit", "morph"]
