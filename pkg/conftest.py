"""Let pytest collect the mamba specs under spec/

Each spec/*_spec.py file becomes one pytest item that runs the file with
mamba; the item fails when mamba reports a failing example.
"""

import os
import subprocess
import sys

import pytest

ROOT = os.path.dirname(os.path.abspath(__file__))


def pytest_collect_file(parent, file_path):
    if file_path.parent.name == "spec" and file_path.name.endswith("_spec.py"):
        return MambaSpecFile.from_parent(parent, path=file_path)
    return None


class MambaSpecFile(pytest.File):
    def collect(self):
        yield MambaSpecItem.from_parent(self, name=self.path.stem)


class MambaSpecItem(pytest.Item):
    def runtest(self):
        proc = subprocess.run(
            [sys.executable, "-m", "mamba.cli", "--no-color",
             "--format", "documentation",
             os.path.relpath(str(self.path), ROOT)],
            cwd=ROOT, stdout=subprocess.PIPE, stderr=subprocess.STDOUT,
            universal_newlines=True)
        if proc.returncode != 0:
            raise MambaSpecFailure(proc.stdout)

    def repr_failure(self, excinfo):
        if isinstance(excinfo.value, MambaSpecFailure):
            return str(excinfo.value)
        return super().repr_failure(excinfo)

    def reportinfo(self):
        return self.path, 0, "mamba spec: %s" % self.name


class MambaSpecFailure(Exception):
    pass
