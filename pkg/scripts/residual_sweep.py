"""Seeded random sweep of all consistency checks over small mode/photon grids.

Prints one key=value line per (modes, photons) cell with the worst residual
seen for each check kind, and a final summary. Useful for eyeballing how
far the constructions sit from their tolerances at desk scale.
"""

import argparse
import sys

from photonlift.verify import DEFAULT_SEED, run_sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args()

    failures = 0
    worst_overall = 0.0
    for modes in (2, 3, 4):
        for photons in (1, 2, 3):
            results = run_sweep(modes, photons, args.trials, seed=args.seed)
            worst = {"diagram": 0.0, "homomorphism": 0.0, "global_phase": 0.0}
            for kind, _, report in results:
                residual = (
                    report.residual_diagram if kind == "diagram" else report.residual
                )
                worst[kind] = max(worst[kind], residual)
                if not report.passed:
                    failures += 1
            worst_overall = max(worst_overall, *worst.values())
            print(
                f"modes={modes} photons={photons} trials={args.trials} "
                f"max_diagram={worst['diagram']:.3e} "
                f"max_homomorphism={worst['homomorphism']:.3e} "
                f"max_global_phase={worst['global_phase']:.3e}"
            )
    print(f"summary worst_residual={worst_overall:.3e} failures={failures}")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
