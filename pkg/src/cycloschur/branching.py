"""Factor lists of the restriction / induction filtrations of Weyl modules.

Restricting Delta(la) from level n+1 to level n has a filtration whose
subquotients are Delta(la - x) over the removable nodes x, with the
largest node (in the order on (component, row)) at the top.  Inducing
Delta(mu) has subquotients Delta(mu + x) over addable nodes within the row
bounds, the smallest node first.  Dimensions attached to each factor are
semistandard tableau counts, so the reports double as numerical data.

The filtration statement assumes a field of coefficients; the factor lists
themselves are purely combinatorial and take no ring parameter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .combi import (
    Charge, MultiPartition, Node, add_node, addable_nodes, derived_bounds, enumerate_all_ssts,
    enumerate_multipartitions, is_in_gamma_image, remove_node, removable_nodes, residue,
    size, std_count, to_json, trim, weyl_dim,
)


@dataclass(frozen=True)
class Factor:
    node: Node
    shape: MultiPartition
    residue: int | None
    dim: int

    def to_json(self) -> dict:
        out = {"node": list(self.node), "shape": to_json(self.shape), "dim": self.dim}
        if self.residue is not None:
            out["residue"] = self.residue
        return out


@dataclass
class FiltrationReport:
    direction: str  # "res" or "ind"
    source: MultiPartition
    factors: list[Factor]
    bounds: tuple[int, ...]
    module: str = "standard"  # or "costandard" (same factors, reversed containment)
    refined: int | None = None  # residue class when i-refined

    def shapes(self) -> list[MultiPartition]:
        return [f.shape for f in self.factors]

    def to_json(self) -> dict:
        out = {"direction": self.direction, "lambda": to_json(self.source),
               "factors": [f.to_json() for f in self.factors], "bounds": list(self.bounds)}
        if self.module != "standard":
            out["module"] = self.module
        if self.refined is not None:
            out["i"] = self.refined
        return out


def level_bounds(n: int, r: int) -> tuple[int, ...]:
    """Default bounds for the larger algebra when comparing levels n-1 and n."""
    return (max(n, 2),) * r


def res_filtration(la: Sequence[Sequence[int]], m: Sequence[int] | None = None,
                   charge: Charge | None = None, costandard: bool = False) -> FiltrationReport:
    """Factors Delta(la - x_1), Delta(la - x_2), ... with x_1 succ x_2 succ ...

    ``m`` bounds the level of ``la``; factor dimensions use the bounds m'.
    With ``costandard`` the same list describes the costandard filtration."""
    la = trim(la)
    if size(la) == 0:
        raise ValueError("cannot restrict from the empty multipartition")
    m = tuple(m) if m is not None else level_bounds(size(la), len(la))
    mp = derived_bounds(m)
    factors = []
    for x in removable_nodes(la):
        shape = remove_node(la, x)
        res = residue(x, charge) if charge is not None else None
        factors.append(Factor(x, shape, res, weyl_dim(shape, mp)))
    return FiltrationReport("res", la, factors, m, "costandard" if costandard else "standard")


def ind_filtration(mu: Sequence[Sequence[int]], m: Sequence[int] | None = None,
                   charge: Charge | None = None) -> FiltrationReport:
    """Factors Delta(mu + x) over addable x within bounds m, smallest x first."""
    mu = trim(mu)
    m = tuple(m) if m is not None else level_bounds(size(mu) + 1, len(mu))
    factors = []
    for x in reversed(addable_nodes(mu, m)):
        shape = add_node(mu, x)
        res = residue(x, charge) if charge is not None else None
        factors.append(Factor(x, shape, res, weyl_dim(shape, m)))
    return FiltrationReport("ind", mu, factors, m)


def _refine(rep: FiltrationReport, i: int, charge: Charge) -> FiltrationReport:
    if not 0 <= i < charge.e:
        raise ValueError(f"residue class {i} outside 0..{charge.e - 1}")
    kept = [f for f in rep.factors if residue(f.node, charge) == i]
    kept = [Factor(f.node, f.shape, residue(f.node, charge), f.dim) for f in kept]
    return FiltrationReport(rep.direction, rep.source, kept, rep.bounds, rep.module, i)


def i_res_filtration(la, i: int, charge: Charge, m=None) -> FiltrationReport:
    return _refine(res_filtration(la, m, charge), i, charge)


def i_ind_filtration(mu, i: int, charge: Charge, m=None) -> FiltrationReport:
    return _refine(ind_filtration(mu, m, charge), i, charge)


def res_dim_check(la: Sequence[Sequence[int]], m: Sequence[int] | None = None,
                  m_prime: Sequence[int] | None = None) -> bool:
    """Tableaux of shape la with weight in the gamma image vs sum of factor dims."""
    la = trim(la)
    m = tuple(m) if m is not None else level_bounds(size(la), len(la))
    mp = tuple(m_prime) if m_prime is not None else derived_bounds(m)
    lhs = sum(1 for T in enumerate_all_ssts(la, m) if is_in_gamma_image(T.weight(m), m))
    rhs = sum(weyl_dim(remove_node(la, x), mp) for x in removable_nodes(la))
    return lhs == rhs


def specht_induction_failures(n_max: int, r: int) -> Iterator[MultiPartition]:
    """Multipartitions violating sum_x |Std(mu + x)| = r (n+1) |Std(mu)|."""
    for n in range(n_max + 1):
        for mu in enumerate_multipartitions(n, r):
            total = sum(std_count(add_node(mu, x)) for x in addable_nodes(mu))
            if total != r * (n + 1) * std_count(mu):
                yield mu


def specht_induction_check(n_max: int, r: int) -> bool:
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    return next(specht_induction_failures(n_max, r), None) is None


def res_multiplicity(la, mu) -> int:
    """Multiplicity of Delta(mu) among the restriction factors of Delta(la)."""
    return sum(1 for s in res_filtration(la).shapes() if s == trim(mu))


def ind_multiplicity(mu, la, m=None) -> int:
    return sum(1 for s in ind_filtration(mu, m).shapes() if s == trim(la))
