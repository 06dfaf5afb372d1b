"""
Certificates as files
=====================

The command-line tool writes certificates as JSON with every integer as a
decimal string, and ``verify`` re-checks a file from scratch.
"""

import json
import tempfile
from pathlib import Path

from gcdcert.cli import main

tmp = Path(tempfile.mkdtemp())
main(["theorem0", "-D", "12", "-d", "2,3,4", "-o", str(tmp / "t0.json")])
print("theorem0 gcd:", json.loads((tmp / "t0.json").read_text())["gcd"])
print("verify exit:", main(["verify", str(tmp / "t0.json")]))

main(["products", "--ring", "int", "--elements", "4,6,10", "-o", str(tmp / "p.json")])
cert = json.loads((tmp / "p.json").read_text())
cert["multipliers"][0] = str(int(cert["multipliers"][0]) + 1)
(tmp / "bad.json").write_text(json.dumps(cert))
print("tampered verify exit:", main(["verify", str(tmp / "bad.json")]))
