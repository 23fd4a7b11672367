import subprocess
import sys
from pathlib import Path

SCRIPT = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"


def test_benchmark_quick_runs_and_backends_agree():
    out = subprocess.run([sys.executable, str(SCRIPT), "--quick"], capture_output=True,
                         text=True, check=True).stdout
    rows = [ln.split("\t") for ln in out.splitlines() if "\t" in ln][1:]
    assert len(rows) == 6
    assert all(r[-1] in ("True", "-") for r in rows)
