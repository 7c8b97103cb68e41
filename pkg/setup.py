"""Build hook for the optional compiled BDD kernel.

The package works without the extension (a pure-Python kernel with the
same interface is selected at import time), so a failed compile must not
fail the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "fam.reasoner._corecy",
                ["src/fam/reasoner/_corecy.pyx"],
                language="c++",
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
