"""Select the BDD kernel implementation at import time.

The compiled Cython kernel is preferred when its extension built;
otherwise (or when FAM_PURE_PYTHON is set) the pure-Python kernel with
the identical interface is used.
"""

from fam import settings
from fam.reasoner import _core

if settings.force_pure_python():
    active = _core
else:
    try:
        from fam.reasoner import _corecy as active  # type: ignore[no-redef]
    except ImportError:
        active = _core

BddKernel = active.BddKernel
IMPLEMENTATION = active.IMPLEMENTATION

FALSE = _core.FALSE
TRUE = _core.TRUE
OP_AND = _core.OP_AND
OP_OR = _core.OP_OR
OP_XOR = _core.OP_XOR
OP_IMPLIES = _core.OP_IMPLIES
OP_IFF = _core.OP_IFF


def available_kernels():
    """(name, class) pairs for every kernel importable in this process."""
    kernels = [(_core.IMPLEMENTATION, _core.BddKernel)]
    try:
        from fam.reasoner import _corecy
    except ImportError:
        pass
    else:
        kernels.append((_corecy.IMPLEMENTATION, _corecy.BddKernel))
    return kernels
