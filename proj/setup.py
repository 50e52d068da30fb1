"""Build the becent extension by delegating to the CMake project.

Standard CMake-extension shim: configure the repository with the CLI and
test targets switched off, build the pybind11 module, and drop the shared
object where setuptools expects it.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)

        configure = [
            "cmake",
            "-S", str(source_dir),
            "-B", str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DBECENT_BUILD_CLI=OFF",
            "-DBECENT_BUILD_TESTS=OFF",
            "-DBECENT_BUILD_PYTHON=ON",
            f"-DPython_EXECUTABLE={sys.executable}",
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
        ]
        env = os.environ.copy()
        subprocess.run(configure, check=True, env=env)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "becent_py", "--parallel"],
            check=True,
            env=env,
        )


setup(
    ext_modules=[CMakeExtension("becent")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
