"""Fixtures: real input files produced by the landaucs CLI.

The renderer is only allowed to touch the primary package through its
file formats, so the fixtures are generated by invoking the installed
command line, not by importing landaucs.
"""

import json
import subprocess
import sys

import pytest


def run_landaucs(args):
    proc = subprocess.run([sys.executable, "-m", "landaucs", *args],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="session")
def fig3_files(tmp_path_factory):
    """Fig. 3 style 2D-state density grid (beta = 5, zeta = 1/2)."""
    out = tmp_path_factory.mktemp("fig3") / "fig3a"
    run_landaucs(["density", "--kind", "2d", "--alpha", "2+0i",
                  "--beta", "5+0i", "--zeta", "0.5", "--omega-b", "1",
                  "--grid", "-2,16,120,-10,10,120", "--out", str(out)])
    return str(out) + ".csv", str(out) + ".meta.json"


@pytest.fixture(scope="session")
def ring_files(tmp_path_factory):
    """su(1,1) ring density (no ellipse metadata)."""
    out = tmp_path_factory.mktemp("ring") / "ring"
    run_landaucs(["density", "--kind", "su11", "--tau", "3+0i", "--mz", "1",
                  "--zeta", "1", "--omega-b", "1",
                  "--grid", "-8,8,80,-8,8,80", "--out", str(out)])
    return str(out) + ".csv", str(out) + ".meta.json"


@pytest.fixture(scope="session")
def scan_files(tmp_path_factory):
    """Fig. 8 style su(1,1) mean-energy scan over both sectors."""
    out = tmp_path_factory.mktemp("scan") / "scan"
    run_landaucs(["energy-scan", "--kind", "su11", "--start", "0",
                  "--stop", "5", "--steps", "50",
                  "--mz", "1,4,7,-1,-4,-7", "--out", str(out)])
    return str(out) + ".csv", str(out) + ".meta.json"


@pytest.fixture()
def meta_dict(fig3_files):
    with open(fig3_files[1]) as fh:
        return json.load(fh)
