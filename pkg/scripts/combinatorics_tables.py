"""Tabulate Weyl dimensions, block counts and branching data.

Produces CSV files that can be diffed across versions:

* ``dims_n{n}_r{r}.csv``: dim Delta(la) and |Std(la)| for the default bounds m = (n,..,n)
* ``blocks_e{e}_r{r}.csv``: number of blocks and largest block size per n and charge
* ``branching_r{r}.csv``: number of restriction/induction factors per la

    python3 scripts/combinatorics_tables.py --n-max 5 --out results/tables
"""

from __future__ import annotations

import argparse
import csv
import itertools
from dataclasses import dataclass
from pathlib import Path

from cycloschur import branching, fockcat
from cycloschur.combi import (
    Charge, default_bounds, enumerate_multipartitions, format_multipartition, std_count, weyl_dim,
)


@dataclass
class TableConfig:
    n_max: int = 5
    r_values: tuple[int, ...] = (1, 2, 3)
    e_values: tuple[int, ...] = (2, 3, 4)
    out: Path = Path("results/tables")


def _write(path: Path, header: list[str], rows) -> int:
    rows = list(rows)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    return len(rows)


def dims_tables(cfg: TableConfig) -> None:
    for n, r in itertools.product(range(cfg.n_max + 1), cfg.r_values):
        m = default_bounds(n, r)
        rows = [(format_multipartition(la), weyl_dim(la, m), std_count(la))
                for la in enumerate_multipartitions(n, r)]
        _write(cfg.out / f"dims_n{n}_r{r}.csv", ["lambda", "dim", "std"], rows)


def block_tables(cfg: TableConfig) -> None:
    for e, r in itertools.product(cfg.e_values, cfg.r_values):
        rows = []
        for s in itertools.product(range(e), repeat=r):
            ch = Charge(s, e)
            for n in range(cfg.n_max + 1):
                table = fockcat.blocks(n, r, ch)
                rows.append((" ".join(map(str, s)), n, len(table), max(map(len, table.values()))))
        _write(cfg.out / f"blocks_e{e}_r{r}.csv", ["charge", "n", "blocks", "largest"], rows)


def branching_tables(cfg: TableConfig) -> None:
    for r in cfg.r_values:
        rows = []
        for n in range(1, cfg.n_max + 1):
            for la in enumerate_multipartitions(n, r):
                res = branching.res_filtration(la)
                ind = branching.ind_filtration(la)
                rows.append((format_multipartition(la), len(res.factors), sum(f.dim for f in res.factors),
                             len(ind.factors), sum(f.dim for f in ind.factors)))
        _write(cfg.out / f"branching_r{r}.csv",
               ["lambda", "res_factors", "res_dim", "ind_factors", "ind_dim"], rows)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=TableConfig.n_max)
    ap.add_argument("--out", type=Path, default=TableConfig.out)
    args = ap.parse_args()
    cfg = TableConfig(n_max=args.n_max, out=args.out)
    cfg.out.mkdir(parents=True, exist_ok=True)
    dims_tables(cfg)
    block_tables(cfg)
    branching_tables(cfg)
    print(f"wrote {len(list(cfg.out.glob('*.csv')))} tables to {cfg.out}")


if __name__ == "__main__":
    main()
