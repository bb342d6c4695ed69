"""End-to-end checks of the eps command line tool: exit codes, CSV output,
payoff identities and determinism. Usage: cli_checks.py <path-to-eps>."""

import csv
import math
import subprocess
import sys
import tempfile
from pathlib import Path

EPS = sys.argv[1]
FAILURES = []


def run(*args, expect=0):
    proc = subprocess.run([EPS, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        FAILURES.append(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
            f"stderr: {proc.stderr.strip()}"
        )
    return proc


def read_csv(path):
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


def check(cond, label):
    if not cond:
        FAILURES.append(label)


def main():
    tmp = Path(tempfile.mkdtemp())

    # price: stdout shows 4 decimals, the CSV keeps full precision
    out = tmp / "price.csv"
    proc = run("price", "--config", "configs/buffer.json", "--out", str(out))
    rows = read_csv(out)
    check(len(rows) == 6, "price: expected 6 rows")
    shown = proc.stdout.splitlines()[1].split(",")
    stored = rows[0]
    check(f"{float(stored['vanilla']):.4f}" == shown[2],
          "price: stdout is not the rounded CSV value")
    check(abs(float(stored["vanilla"]) - 14.4985) < 5e-4, "price: vanilla 90 call")
    # the stored text reproduces the double exactly (>= 15 significant digits)
    check(f"{float(stored['vanilla']):.17g}" == stored["vanilla"],
          "price: CSV value does not round trip")
    check(any(len(r["series"].split(".")[-1]) > 8 for r in rows),
          "price: CSV looks rounded, not full precision")

    # hedge: legs plus one cost row per engine
    out = tmp / "hedge.csv"
    run("hedge", "--config", "configs/buffer.json", "--out", str(out))
    rows = read_csv(out)
    legs = [r for r in rows if r["type"] == "leg"]
    costs = {r["kind"]: float(r["value"]) for r in rows if r["type"] == "cost"}
    check(len(legs) == 2, "hedge: buffer needs a put and a call leg")
    for tag in ("vanilla", "at_most_one", "one_jump", "series", "random_time"):
        check(tag in costs, f"hedge: missing {tag} cost")
    lam = 0.2
    check(abs(costs["random_time"] - math.exp(-lam) * costs["vanilla"]) < 1e-10,
          "hedge: random-time cost must be e^{-lambda T} x vanilla")

    run("hedge", "--config", "configs/floor_cap.json", "--protection-only")

    # premium: all four jump treatments; fee-only contract is rejected
    out = tmp / "premium.csv"
    run("premium", "--config", "configs/buffer.json", "--out", str(out))
    rows = read_csv(out)
    check(len(rows) == 4, "premium: expected one row per jump treatment")
    for r in rows:
        lhs = float(r["adjusted_premium"])
        rhs = float(r["hedge_cost"]) + math.exp(-0.015) * float(r["default_adjustment"])
        check(abs(lhs - rhs) < 1e-12, "premium: c^D != H(0) + e^{-rT} DA")
        check(float(r["super_premium"]) >= lhs - 1e-12, "premium: c^SD < c^D")
    run("premium", "--config", "configs/market_only.json", expect=2)

    # payoff: grid CSV identities (grid=199 puts -0.30 exactly on the grid)
    out = tmp / "payoff.csv"
    run("payoff", "--config", "configs/buffer.json", "--grid", "199", "--out", str(out))
    rows = read_csv(out)
    check(len(rows) == 200, "payoff: expected 200 grid points")
    by_r = {round(float(r["return"]), 6): r for r in rows}
    check(abs(float(by_r[-0.30]["cash_flow_default"]) + 0.20) < 1e-12,
          "payoff: buffer CF^D(-0.30) != -0.20")
    for r in rows:
        check(abs(float(r["cash_flow"])) < 1e-12, "payoff: CF_T != 0 at c = H(0)")
        check(abs(float(r["hedge_payoff"]) + float(r["psi"])) < 1e-12,
              "payoff: H(T) != -psi")
        check(abs(float(r["psi"]) - float(r["psi_p"]) - float(r["psi_f"])) < 1e-12,
              "payoff: psi != psi_p + psi_f")
    worst = min(float(r["cash_flow_default"]) for r in rows)
    check(abs(worst + 0.8 * 0.95) < 1e-2, "payoff: min CF^D != -p(1 + l)")

    # mc: deterministic for a fixed seed, seed changes the estimate
    a = run("mc", "--config", "configs/market_only.json", "--paths", "50000",
            "--seed", "5")
    b = run("mc", "--config", "configs/market_only.json", "--paths", "50000",
            "--seed", "5")
    c = run("mc", "--config", "configs/market_only.json", "--paths", "50000",
            "--seed", "6")
    check(a.stdout == b.stdout, "mc: same seed must reproduce identical output")
    check(a.stdout != c.stdout, "mc: different seed must change the estimate")
    z = abs(float(a.stdout.splitlines()[1].split(",")[4]))
    check(z < 4.0, "mc: z-score against the closed form is too large")

    # tables: bundled reference passes, missing reference is a config error
    run("tables")
    run("tables", "--reference", "/does/not/exist.csv", expect=2)

    # malformed configuration
    bad = tmp / "bad.json"
    bad.write_text("{not json")
    run("price", "--config", str(bad), expect=2)
    neg = tmp / "neg.json"
    neg.write_text('{"market": {"spot": -1.0, "rate": 0.0, "sigma": 0.2, '
                   '"maturity": 1.0}}')
    run("price", "--config", str(neg), expect=2)

    if FAILURES:
        print("FAILURES:")
        for f in FAILURES:
            print(" -", f)
        sys.exit(1)
    print("cli checks passed")


if __name__ == "__main__":
    main()
