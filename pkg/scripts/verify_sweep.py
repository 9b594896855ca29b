"""Run ``hecke-braid verify`` over a grid of (n, field, alpha order) and tabulate.

    python scripts/verify_sweep.py --max-n 6
"""

import argparse
import contextlib
import io
import json

from hecke_braid.cli import main as cli

FIELDS = [("p=2,k=3,mod=AUTO", 7), ("p=3,k=2,mod=AUTO", 8), ("p=7,k=2,mod=AUTO", 8)]


def failing(report):
    out = []
    for shape in report.get("shapes", []):
        out += [f"{shape['lambda']}:{name}" for name, v in shape["checks"].items() if v is not True]
    for r, item in report.get("hooks", {}).items():
        out += [f"hook r={r}:{name}" for name, v in item.items() if v is not True]
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--heavy", action="store_true")
    args = ap.parse_args()
    print(f"{'n':>2} {'field':<18} {'ord':>3}  verdict   closures / failures")
    for n in range(3, args.max_n + 1):
        for field, order in FIELDS:
            argv = ["verify", "--n", str(n), "--field", field, "--alpha-order", str(order)]
            if args.heavy:
                argv.append("--heavy")
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                cli(argv)
            rep = json.loads(buf.getvalue())
            closures = [
                f"{s['lambda']}={s['info']['closure'].get('order', s['info']['closure']['status'])}"
                for s in rep.get("shapes", [])
                if s["info"].get("closure")
            ]
            extra = failing(rep) or closures
            print(f"{n:>2} {field:<18} {order:>3}  {rep['verdict']:<8}  {' '.join(extra) or rep.get('reason', '')}")


if __name__ == "__main__":
    main()
