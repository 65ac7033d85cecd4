"""CMake-driven build of the `_sudler` extension module.

The C++ core and the pybind11 bindings are described by the top-level
CMakeLists.txt; this shim lets `pip install -e . --no-build-isolation`
drive that build with stock setuptools.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        extdir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).parent.resolve()
        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}{os.sep}",
            f"-DPython_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DSUDLER_BUILD_TESTS=OFF",
        ]
        subprocess.run(["cmake", str(source_dir), *cmake_args], cwd=build_temp, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_sudler"], cwd=build_temp, check=True
        )


setup(
    ext_modules=[CMakeExtension("_sudler")],
    cmdclass={"build_ext": CMakeBuild},
)
