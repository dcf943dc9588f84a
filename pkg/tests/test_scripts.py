"""Smoke runs of the experiment scripts."""

import csv
import json
import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def test_combinatorics_tables(tmp_path):
    subprocess.run([sys.executable, str(SCRIPTS / "combinatorics_tables.py"), "--n-max", "2",
                    "--out", str(tmp_path)], check=True, capture_output=True)
    rows = list(csv.DictReader((tmp_path / "dims_n2_r2.csv").open()))
    assert sum(int(r["std"]) ** 2 for r in rows) == 8


def test_run_verification_controls(tmp_path):
    out = subprocess.run([sys.executable, str(SCRIPTS / "run_verification.py"), "--controls-only",
                          "--out", str(tmp_path)], check=True, capture_output=True, text=True).stdout
    assert "classical-hecke" in out
    data = json.loads((tmp_path / "presentation_n2_r2_m3-3_drop-e-prefactor.json").read_text())
    assert data["summary"]["failures"] > 0
