"""Build a code to a JSON file, verify it, then tamper with it.

Runs the ``grsdual`` command-line interface in-process.
"""

import json
import tempfile
from pathlib import Path

from grsdual import make_field
from grsdual.cli import main

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "code.json"
    print("$ grsdual build --q 9 --s 1 --t 1 --kind selfdual --out code.json")
    main(["build", "--q", "9", "--s", "1", "--t", "1", "--kind", "selfdual", "--out", str(path)])

    print("\n$ grsdual verify --in code.json")
    print("exit code", main(["verify", "--in", str(path)]))

    d = json.loads(path.read_text())
    F = make_field(3, 2)
    d["v"][1] = F.add(d["v"][1], 1)
    path.write_text(json.dumps(d))
    print("\n$ grsdual verify --in code.json   # after v[1] += 1")
    print("exit code", main(["verify", "--in", str(path), "--mds", "skip"]))
