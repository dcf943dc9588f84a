"""Run the generator-relation verifiers over a grid of configurations.

Writes one JSON report per (suite, configuration, perturbation) into the
output directory plus a summary table on stdout.

    python3 scripts/run_verification.py --out results/verification
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from cycloschur import schurgen


@dataclass
class ExperimentConfig:
    presentation: list[tuple[int, int, tuple[int, ...]]] = field(default_factory=lambda: [
        (2, 1, (3,)), (2, 2, (3, 3)), (3, 2, (3, 3))])
    theta: list[tuple[int, int, int]] = field(default_factory=lambda: [(2, 2, 1), (3, 2, 1), (2, 1, 2)])
    iota: list[tuple[int, int]] = field(default_factory=lambda: [(1, 2), (2, 2)])
    dictionary: list[tuple[int, int]] = field(default_factory=lambda: [(2, 2), (3, 2)])
    perturbations: list[str] = field(default_factory=lambda: [
        "none", "drop-e-prefactor", "x-set-off-by-one", "classical-hecke"])
    workers: int = 1


def _perturbation(name: str) -> tuple[schurgen.Perturbation, str]:
    if name == "classical-hecke":
        return schurgen.Perturbation(), "classical"
    return schurgen.Perturbation(drop_e_prefactor=name == "drop-e-prefactor",
                                 x_set_off_by_one=name == "x-set-off-by-one"), "balanced"


def jobs(cfg: ExperimentConfig):
    for name in cfg.perturbations:
        pert, norm = _perturbation(name)
        kw = {"normalization": norm, "perturbation": pert}
        for n, r, m in cfg.presentation:
            yield ("presentation", f"n{n}_r{r}_m{'-'.join(map(str, m))}", name,
                   lambda n=n, r=r, m=m, kw=kw: schurgen.verify_presentation(n, r, m, workers=cfg.workers, **kw))
        for n, r, l in cfg.theta:
            yield ("theta", f"n{n}_r{r}_l{l}", name,
                   lambda n=n, r=r, l=l, kw=kw: schurgen.verify_theta(n, r, l_max=l, **kw))
        for n, r in cfg.iota:
            yield ("iota", f"n{n}to{n + 1}_r{r}", name, lambda n=n, r=r, kw=kw: schurgen.verify_iota(n, r, **kw))
        for n, r in cfg.dictionary:
            yield ("dictionary", f"n{n}_r{r}", name,
                   lambda n=n, r=r, kw=kw: schurgen.verify_dictionary(n, r, **kw))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results/verification"))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--controls-only", action="store_true", help="skip the unperturbed runs")
    args = ap.parse_args()
    cfg = ExperimentConfig(workers=args.workers)
    if args.controls_only:
        cfg.perturbations = cfg.perturbations[1:]
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "config.json").write_text(json.dumps(asdict(cfg), indent=2))
    print(f"{'suite':<13}{'config':<16}{'perturbation':<18}{'instances':>10}{'failures':>10}{'secs':>7}")
    for suite, tag, pert, run in jobs(cfg):
        t0 = time.perf_counter()
        reports = run()
        secs = time.perf_counter() - t0
        summ = schurgen.summarize(reports)
        path = args.out / f"{suite}_{tag}_{pert}.json"
        path.write_text(json.dumps({"summary": summ, "seconds": round(secs, 3),
                                    "reports": [r.to_json() for r in reports]}))
        print(f"{suite:<13}{tag:<16}{pert:<18}{summ['instances']:>10}{summ['failures']:>10}{secs:>7.1f}")


if __name__ == "__main__":
    main()
