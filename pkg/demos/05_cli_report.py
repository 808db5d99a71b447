"""Drive the command-line analyzer and read its JSON report back."""

# %%
import json
import subprocess
import sys
import tempfile
from pathlib import Path

out = Path(tempfile.mkdtemp()) / "rs.json"
cmd = [sys.executable, "-m", "lsl", "analyze", "--family", "rs", "--f", "u^2", "--g", "u",
       "--domain", "u:1.1..3,v:0.1..6.2", "--grid", "8x8", "--format", "json", "--out", str(out)]
print("exit code:", subprocess.run(cmd).returncode)

# %%
report = json.loads(out.read_text())
print("schema:", report["schema"])
print("census:", report["census_histogram"])
for name, verdict in report["verdicts"].items():
    print(f"  {name:<15} {verdict['value']}")

# %% the text format is meant for a terminal
sys.stdout.flush()
subprocess.run([sys.executable, "-m", "lsl", "analyze", "--family", "rh", "--grid", "6x6", "--format", "text"])
