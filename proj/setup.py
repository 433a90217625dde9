from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "usd._usd",
    sources=[
        "src/numerics.cpp",
        "src/states.cpp",
        "src/discrimination.cpp",
        "src/coherent.cpp",
        "src/simulate.cpp",
        "src/python/bindings.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
