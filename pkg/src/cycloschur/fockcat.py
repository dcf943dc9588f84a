"""Level-r Fock space, residue blocks, and the i-restriction bookkeeping.

The Chevalley operators act with unit coefficients: ``e_i`` removes an
i-node, ``f_i`` adds one.  Counts and commutators are integer arithmetic on
multipartitions; nothing here needs the Hecke algebra.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from typing import Iterable, Mapping, Sequence

from .branching import i_ind_filtration, i_res_filtration, level_bounds
from .combi import (
    Charge, MultiPartition, add_node, addable_nodes, diagram, empty,
    enumerate_multipartitions, format_multipartition, remove_node, removable_nodes,
    residue, to_json, trim,
)

__all__ = [
    "Charge", "FockVector", "residue", "block_key", "blocks", "reachable_keys",
    "e_apply", "f_apply", "h_value", "commutator_check", "commutator_failures",
    "categorification_check", "categorification_failures", "operator_matrix",
    "matrix_to_json", "matrix_to_csv", "blocks_to_json",
]


class FockVector:
    """Finite integer combination of |la, s>."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Sequence[Sequence[int]], int] | None = None):
        out: dict = {}
        for la, c in (coeffs or {}).items():
            la = trim(la)
            out[la] = out.get(la, 0) + c
        self.coeffs = {la: c for la, c in out.items() if c}

    @classmethod
    def basis(cls, la) -> "FockVector":
        return cls({trim(la): 1})

    @classmethod
    def vacuum(cls, r: int) -> "FockVector":
        return cls({empty(r): 1})

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.coeffs)
        for la, c in other.coeffs.items():
            out[la] = out.get(la, 0) + c
        return FockVector(out)

    def __neg__(self) -> "FockVector":
        return FockVector({la: -c for la, c in self.coeffs.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def __rmul__(self, c: int) -> "FockVector":
        return FockVector({la: c * v for la, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def degrees(self) -> set[int]:
        return {sum(map(sum, la)) for la in self.coeffs}

    def support(self) -> list[MultiPartition]:
        return sorted(self.coeffs)

    def to_json(self) -> list[dict]:
        return [{"lambda": to_json(la), "coeff": c} for la, c in sorted(self.coeffs.items())]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}|{format_multipartition(la)}>" for la, c in sorted(self.coeffs.items()))


def block_key(la: Sequence[Sequence[int]], charge: Charge) -> tuple[int, ...]:
    """Number of nodes of each residue 0..e-1."""
    key = [0] * charge.e
    for x in diagram(la):
        key[residue(x, charge)] += 1
    return tuple(key)


def blocks(n: int, r: int, charge: Charge) -> dict[tuple[int, ...], list[MultiPartition]]:
    """Multipartitions of n grouped by block key, in order of first appearance."""
    _check_rank(charge, r)
    out: dict = {}
    for la in enumerate_multipartitions(n, r):
        out.setdefault(block_key(la, charge), []).append(la)
    return out


def reachable_keys(n: int, r: int, charge: Charge) -> list[tuple[int, ...]]:
    """R_{n,e}: the keys r(la) over all multipartitions of n, sorted."""
    return sorted(blocks(n, r, charge))


def _check_rank(charge: Charge, r: int) -> None:
    if charge.r != r:
        raise ValueError(f"charge has {charge.r} entries, expected {r}")


def e_apply(i: int, v: FockVector, charge: Charge) -> FockVector:
    out: dict = {}
    for la, c in v.coeffs.items():
        for x in removable_nodes(la):
            if residue(x, charge) == i:
                mu = remove_node(la, x)
                out[mu] = out.get(mu, 0) + c
    return FockVector(out)


def f_apply(i: int, v: FockVector, charge: Charge, m: Sequence[int] | None = None) -> FockVector:
    """Add i-nodes; with bounds m only rows up to m_k are allowed."""
    out: dict = {}
    for la, c in v.coeffs.items():
        for x in addable_nodes(la, m):
            if residue(x, charge) == i:
                mu = add_node(la, x)
                out[mu] = out.get(mu, 0) + c
    return FockVector(out)


def h_value(i: int, la, charge: Charge) -> int:
    """Addable minus removable i-nodes (unbounded rows)."""
    add = sum(1 for x in addable_nodes(la) if residue(x, charge) == i)
    rem = sum(1 for x in removable_nodes(la) if residue(x, charge) == i)
    return add - rem


def commutator_failures(i: int, j: int, n_max: int, r: int, charge: Charge):
    """Yield la where [e_i, f_j]|la> differs from delta_ij h_i(la)|la>."""
    _check_rank(charge, r)
    for n in range(n_max + 1):
        for la in enumerate_multipartitions(n, r):
            v = FockVector.basis(la)
            lhs = e_apply(i, f_apply(j, v, charge), charge) - f_apply(j, e_apply(i, v, charge), charge)
            rhs = h_value(i, la, charge) * v if i == j else FockVector()
            if lhs != rhs:
                yield la


def commutator_check(i: int, j: int, n_max: int, r: int, charge: Charge) -> bool:
    return next(commutator_failures(i, j, n_max, r, charge), None) is None


def categorification_failures(n_max: int, r: int, charge: Charge, m_schedule=None):
    """Yield (kind, la, i) where the branching lists and the Fock action disagree.

    ``m_schedule(n)`` gives the bounds used when inducing from size n to n+1
    (default: n+1 rows per component)."""
    _check_rank(charge, r)
    sched = m_schedule or (lambda n: level_bounds(n + 1, r))
    for n in range(n_max + 1):
        for la in enumerate_multipartitions(n, r):
            v = FockVector.basis(la)
            key = block_key(la, charge)
            m = tuple(sched(n))
            for i in range(charge.e):
                if n > 0:
                    shapes = Counter(i_res_filtration(la, i, charge).shapes())
                    if shapes != Counter(e_apply(i, v, charge).coeffs):
                        yield ("res", la, i)
                if n < n_max:
                    shapes = Counter(i_ind_filtration(la, i, charge, m).shapes())
                    img = f_apply(i, v, charge, m)
                    if shapes != Counter(img.coeffs):
                        yield ("ind", la, i)
                    unit = tuple(a + (1 if b == i else 0) for b, a in enumerate(key))
                    if any(block_key(mu, charge) != unit for mu in img.coeffs):
                        yield ("block", la, i)


def categorification_check(n_max: int, r: int, charge: Charge, m_schedule=None) -> bool:
    return next(categorification_failures(n_max, r, charge, m_schedule), None) is None


def operator_matrix(op: str, i: int, n: int, r: int, charge: Charge,
                    m: Sequence[int] | None = None) -> list[tuple[MultiPartition, MultiPartition, int]]:
    """Sparse triplets (row, column, value) of e_i (degree n -> n-1) or f_i (n -> n+1)."""
    _check_rank(charge, r)
    out = []
    for la in enumerate_multipartitions(n, r):
        v = FockVector.basis(la)
        if op == "e":
            img = e_apply(i, v, charge)
        elif op == "f":
            img = f_apply(i, v, charge, m)
        else:
            raise ValueError(f"unknown operator {op!r} (use 'e' or 'f')")
        for mu, c in sorted(img.coeffs.items()):
            out.append((mu, la, c))
    return out


def matrix_to_json(triplets: Iterable) -> str:
    return json.dumps([{"row": to_json(a), "col": to_json(b), "value": c} for a, b, c in triplets])


def matrix_to_csv(triplets: Iterable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "col", "value"])
    for a, b, c in triplets:
        w.writerow([format_multipartition(a), format_multipartition(b), c])
    return buf.getvalue()


def blocks_to_json(table: Mapping) -> dict:
    return {",".join(map(str, key)): [to_json(la) for la in las] for key, las in table.items()}
