"""CMake-driven build for the _zpfcirc extension module.

The C++ core builds with CMake; this shim runs it from setuptools so
`pip install .` (and editable installs) work without extra build tooling.
"""

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
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake-build"
        build_dir.mkdir(parents=True, exist_ok=True)
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DZPF_BUILD_PYTHON=ON",
                "-DZPF_PYTHON_ONLY=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_zpfcirc", "-j"],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("zpfcirc._zpfcirc")],
    cmdclass={"build_ext": CMakeBuild},
)
