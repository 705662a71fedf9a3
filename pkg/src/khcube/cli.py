"""``kh``: compute Khovanov homology and related data from the command line."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass

from . import __version__
from .checks import run_checks
from .diagram import LinkDiagram, parse_braid, parse_pd
from .errors import KhError
from .flowcat import extract, to_dict
from .homology import bigraded_homology, bockstein, graded_euler
from .khovanov import _Resolutions, build_burnside_cube, khovanov_complex, reduced_complex

log = logging.getLogger("khcube")

TASKS = ("homology", "jones", "bockstein", "verify", "flowcat")
LADYBUG_RULE = "right"


@dataclass
class RunConfig:
    pd: str | None = None
    braid: str | None = None
    tasks: tuple = ("homology",)
    coefficients: tuple = (0,)
    out: str | None = None
    jobs: int = 1
    seed: int | None = None
    reduced: bool = False
    basepoint: int | None = None

    def __post_init__(self):
        if (self.pd is None) == (self.braid is None):
            raise ValueError("exactly one of --pd and --braid is required")
        if not self.tasks:
            raise ValueError("at least one task is required")
        bad = [t for t in self.tasks if t not in TASKS]
        if bad:
            raise ValueError(f"unknown task(s): {', '.join(bad)}")
        if self.reduced != (self.basepoint is not None):
            raise ValueError("--basepoint is required exactly when --reduced is given")
        if self.jobs < 1:
            raise ValueError("--jobs must be positive")


def parse_coefficients(text: str) -> tuple:
    """``Z``, ``F2`` or ``Fp:p`` (comma separated); 0 stands for the integers."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "Z":
            out.append(0)
        elif tok == "F2":
            out.append(2)
        elif tok.startswith("Fp:"):
            p = int(tok[3:])
            if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
                raise ValueError(f"{p} is not prime")
            out.append(p)
        else:
            raise ValueError(f"unknown coefficient ring {tok!r}")
    return tuple(out)


def coefficient_name(p: int) -> str:
    return "Z" if p == 0 else "F2" if p == 2 else f"Fp:{p}"


def load_diagram(config: RunConfig) -> LinkDiagram:
    if config.braid is not None:
        return parse_braid(config.braid)
    if os.path.exists(config.pd):
        with open(config.pd, encoding="utf-8") as fh:
            return parse_pd(fh.read())
    if any(ch in config.pd for ch in "[(") or config.pd.strip() == "U":
        return parse_pd(config.pd)
    raise FileNotFoundError(config.pd)


def homology_rows(H: dict, p: int) -> list:
    rows = []
    for (i, j), g in sorted(H.items()):
        if p == 0:
            rows.append({"i": i, "j": j, "rank": g.rank, "torsion": list(g.torsion)})
        else:
            rows.append({"i": i, "j": j, "dim": g})
    return rows


def run(config: RunConfig) -> tuple:
    """Execute the configured tasks; returns ``(exit status, result record)``."""
    d = load_diagram(config)
    R = _Resolutions(d)
    result = {
        "input": {
            "source": "braid" if config.braid is not None else "pd",
            "value": config.braid if config.braid is not None else config.pd,
            "diagram": str(d),
            "crossings": d.n_crossings,
            "components": d.n_components,
            "n_plus": d.n_plus,
            "n_minus": d.n_minus,
            "reduced": config.reduced,
            "basepoint": config.basepoint,
        },
        "conventions": {
            "pd": "X[a,b,c,d] counterclockwise from the incoming under-strand",
            "braid": "generator i > 0 is a negative crossing of strands i, i+1",
            "edge_sign": "(-1)^(u_1 + ... + u_{k-1})",
            "homological_degree": "|v| - n_minus",
            "quantum_degree": "#x_plus - #x_minus + |v| + n_plus - 2 n_minus",
            "reduced": "based circle labeled x_minus, quantum degree + 1",
            "ladybug_rule": LADYBUG_RULE,
            "version": __version__,
        },
    }
    status = 0
    needs_complex = {"homology", "jones", "bockstein"} & set(config.tasks)
    C = None
    if needs_complex:
        if config.reduced:
            C = reduced_complex(d, config.basepoint, _cache=R)
        else:
            C = khovanov_complex(d, _cache=R)
    if "homology" in config.tasks:
        result["homology"] = {}
        for p in config.coefficients:
            log.info("homology over %s", coefficient_name(p))
            H = bigraded_homology(C, p, jobs=config.jobs)
            result["homology"][coefficient_name(p)] = homology_rows(H, p)
    if "jones" in config.tasks:
        result["jones"] = [[e, c] for e, c in graded_euler(C).pairs()]
    if "bockstein" in config.tasks:
        Sq = bockstein(C)
        blocks = []
        for (i, j), rows in sorted(Sq.maps.items()):
            blocks.append({
                "source": [i, j],
                "target": [i + 1, j],
                "rank": Sq.rank(i, j),
                "matrix": rows,
                "source_basis": [[str(g) for g in rep] for rep in Sq.bases[(i, j)]],
                "target_basis": [[str(g) for g in rep] for rep in Sq.bases[(i + 1, j)]],
            })
        result["sq1"] = {"squares_to_zero": Sq.squares_to_zero(), "maps": blocks}
    B = None
    if "flowcat" in config.tasks:
        B = build_burnside_cube(d, LADYBUG_RULE, R)
        result["flowcat"] = to_dict(extract(B, grading_shift=d.n_minus))
    if "verify" in config.tasks:
        checks = run_checks(d, LADYBUG_RULE, seed=config.seed)
        ok = all(c.ok for c in checks)
        result["verify"] = {"ok": ok, "checks": [c.as_dict() for c in checks]}
        if not ok:
            status = 1
    return status, result


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kh", description=__doc__)
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--pd", help="PD code file, or inline PD text")
    src.add_argument("--braid", help='braid word, e.g. "1 1 1"')
    ap.add_argument("--task", default="homology",
                    help="comma separated: " + ",".join(TASKS))
    ap.add_argument("--coeff", default="Z", help="Z, F2 or Fp:p (comma separated)")
    ap.add_argument("--reduced", action="store_true")
    ap.add_argument("--basepoint", type=int, help="arc label carrying the basepoint")
    ap.add_argument("--out", help="output path (default: standard output)")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, help="seed for the randomized perturbation check")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = RunConfig(
            pd=args.pd, braid=args.braid,
            tasks=tuple(t.strip() for t in args.task.split(",") if t.strip()),
            coefficients=parse_coefficients(args.coeff),
            out=args.out, jobs=args.jobs, seed=args.seed,
            reduced=args.reduced, basepoint=args.basepoint,
        )
    except ValueError as exc:
        ap.error(str(exc))
    try:
        status, result = run(config)
    except KhError as exc:
        print(f"kh: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"kh: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(result, sort_keys=True, indent=2) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if status:
        print("kh: verification failed", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
