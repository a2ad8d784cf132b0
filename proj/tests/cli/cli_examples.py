"""Runs the idealis CLI on the documented examples and checks exit codes and output."""
import re
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
failures = []


def run(*args):
    p = subprocess.run([BIN, "--quiet", *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def case(args, code, *needles):
    rc, out, err = run(*args)
    ok = rc == code and all(n in out for n in needles)
    print(("ok   " if ok else "FAIL ") + " ".join(args) + f" -> exit {rc}")
    if not ok:
        failures.append(args)
        print(out[-2000:], err[-2000:], sep="\n")
    return out


case(["arrangement", "A313", "--t-vector"], 0, "t2=54 t3=42 t4=21 t5=6 t6=1 t8=3; 127 points")
case(["arrangement", "B21", "--t-vector"], 0, "t2=72 t3=40 t4=3; 115 points")
case(["arrangement", "B21", "--charpoly"], 0, "quotient: t^2-20t+141; splits/Z: no; free: no")
case(["arrangement", "A313", "--verify-tables"], 0, "127/127 points matched")
case(["arrangement", "A313", "--model", "rational", "--t-vector"], 0, "127 points")
case(["invariants", "--molien", "12"], 0, ": 12\n")
case(["invariants", "--molien", "10", "--reynolds"], 0, "degree 10: 9", "reynolds rank in degree 10: 9")
case(["invariants", "--curve", "gamma", "--genus"], 0, "kernel dimension 1", "12/12 coefficients match",
     "degree 12, 12 nodes, g=43")
case(["containment", "dualHesse", "--m", "3", "--r", "2", "--prime", "7"], 10, "non-containment certified")
case(["containment", "dualHesse", "--m", "4", "--r", "2", "--prime", "7"], 0, "holds")
case(["containment", "A313", "--m", "3", "--r", "2", "--witness-only", "--prime", "65521"], 10,
     "witness: degree 33", "normal form modulo I^2")
case(["containment", "B21", "--m", "3", "--r", "2", "--witness-only", "--prime", "65521", "--model", "rational"], 10,
     "witness: degree 31")
case(["containment", "A312", "--m", "3", "--r", "2", "--prime", "65521"], 0, "evidence (mod p)")
case(["containment", "A313", "--prime", "65521", "--max-pairs", "5"], 11, "undecided")

# Error exits.
case(["arrangement", "no-such-file.json"], 2)
case(["containment", "dualHesse", "--prime", "9"], 2)
case(["arrangement", "A313", "--field", "q"], 3)
case(["invariants", "--curve", "gamma", "--field", "fp:5"], 3)
case(["render", "A313", "--field", "fp:13"], 5)
case(["arrangement", "A313", "--bogus"], 2)

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    # render: dashed strokes, line at infinity noted, contour present.
    for name, extra, strokes, contour in [("A313", [], 30, False), ("B21", ["--curve", "delta"], 21, True),
                                          ("triangle", [], 2, False)]:
        svg = tmp / f"{name}.svg"
        out = case(["render", name, "--out", str(svg), *extra], 0, f"{strokes} line strokes")
        text = svg.read_text()
        lines = len(re.findall(r"<line ", text))
        good = lines == strokes and ('id="curve"' in text) == contour and "stroke-dasharray" in text
        if name != "B21":
            good = good and "The line z=0 is not shown." in text
        print(("ok   " if good else "FAIL ") + f"svg {name}: {lines} strokes")
        if not good:
            failures.append(["svg", name])
    # Byte-identical output for identical configurations.
    a = run("render", "B21", "--curve", "delta")[1]
    b = run("render", "B21", "--curve", "delta")[1]
    c = run("--json", "containment", "dualHesse", "--prime", "7")[1]
    d = run("--json", "containment", "dualHesse", "--prime", "7")[1]
    same = a == b and c == d and len(a) > 0
    print(("ok   " if same else "FAIL ") + "reports are byte-identical across runs")
    if not same:
        failures.append(["determinism"])
    # Arrangement files round-trip through --dump.
    dump = tmp / "dh.json"
    dump.write_text(run("arrangement", "dualHesse", "--dump")[1])
    case(["arrangement", str(dump), "--t-vector"], 0, "t3=12; 12 points")
    case(["containment", str(dump), "--m", "3", "--r", "2"], 10)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
