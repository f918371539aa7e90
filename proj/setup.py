"""CMake-driven build shim for the pybind11 extension.

Configures the C++ project with only the python module enabled, builds it,
and ships python/modrad as the package with the compiled _core inside.
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def run(self):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.check_call(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                f"-DPython3_EXECUTABLE={sys.executable}",
                "-DMODRAD_BUILD_TOOLS=OFF",
                "-DMODRAD_BUILD_TESTS=OFF",
                "-DCMAKE_BUILD_TYPE=Release",
            ]
        )
        subprocess.check_call(
            ["cmake", "--build", str(build_dir), "--target", "modrad_pymodule"]
        )

        staged = build_dir / "python" / "modrad"
        self._outputs = []
        # Regular installs pick the module up from build_lib; editable
        # installs resolve the package at python/modrad, so stage both.
        for target in (Path(self.build_lib) / "modrad",
                       source_dir / "python" / "modrad"):
            target.mkdir(parents=True, exist_ok=True)
            for ext in staged.glob("_core*"):
                copied = Path(shutil.copy2(ext, target))
                self._outputs.append(str(copied))
        shutil.copy2(source_dir / "python" / "modrad" / "__init__.py",
                     Path(self.build_lib) / "modrad")

    def get_outputs(self):
        return getattr(self, "_outputs", [])


setup(
    ext_modules=[CMakeExtension("modrad._core")],
    cmdclass={"build_ext": CMakeBuild},
)
