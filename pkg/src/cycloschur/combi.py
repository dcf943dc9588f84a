"""Multipartitions, diagrams, nodes and tableaux.

Conventions
-----------
* A multipartition is a tuple of ``r`` tuples of positive integers, stored
  trimmed (no trailing zeros).  A multicomposition in ``Lambda_{n,r}(m)`` is
  a tuple of ``r`` tuples padded to the bound lengths ``m = (m_1..m_r)``.
* Nodes are ``(row, col, comp)``, all 1-based.
* ``Gamma(m)`` is ordered ``(1,1), ..., (m_1,1), (1,2), ...``; flattening a
  composition in that order gives its coordinates in the weight lattice.
* Permutations are 0-based one-line tuples ``w`` with ``w[j] = w(j+1) - 1``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

Composition = tuple[tuple[int, ...], ...]
MultiPartition = tuple[tuple[int, ...], ...]


class Node(NamedTuple):
    row: int
    col: int
    comp: int

    def __str__(self) -> str:
        return f"({self.row},{self.col},{self.comp})"


# ---------------------------------------------------------------------------
# basic shapes

def trim(la: Sequence[Sequence[int]]) -> MultiPartition:
    out = []
    for part in la:
        part = list(part)
        while part and part[-1] == 0:
            part.pop()
        out.append(tuple(part))
    return tuple(out)


def pad(la: Sequence[Sequence[int]], m: Sequence[int]) -> Composition:
    if len(la) != len(m):
        raise ValueError(f"{len(la)} components but {len(m)} bounds")
    out = []
    for part, mk in zip(la, m):
        part = tuple(part)
        if len(part) > mk and any(part[mk:]):
            raise ValueError(f"component {part} does not fit in {mk} rows")
        out.append(part[:mk] + (0,) * (mk - len(part)))
    return tuple(out)


def size(la: Sequence[Sequence[int]]) -> int:
    return sum(sum(p) for p in la)


def is_multipartition(la: Sequence[Sequence[int]]) -> bool:
    return all(
        all(x >= 0 for x in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))
        for p in la
    )


def check_multipartition(la: Sequence[Sequence[int]]) -> MultiPartition:
    if not is_multipartition(la):
        raise ValueError(f"{la} is not a multipartition")
    return trim(la)


def empty(r: int) -> MultiPartition:
    return ((),) * r


def flatten(mu: Composition) -> tuple[int, ...]:
    return tuple(x for p in mu for x in p)


def unflatten(vec: Sequence[int], m: Sequence[int]) -> Composition:
    out, pos = [], 0
    for mk in m:
        out.append(tuple(vec[pos:pos + mk]))
        pos += mk
    return tuple(out)


def default_bounds(n: int, r: int) -> tuple[int, ...]:
    """Smallest legal bounds m_k = n (at least 1)."""
    return (max(n, 1),) * r


def diagram(la: Sequence[Sequence[int]]) -> list[Node]:
    return [
        Node(i, j, k)
        for k, part in enumerate(la, start=1)
        for i, row in enumerate(part, start=1)
        for j in range(1, row + 1)
    ]


# ---------------------------------------------------------------------------
# enumeration

def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into ``parts`` parts, decreasing lex order."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _multipartitions(n: int, r: int) -> tuple[MultiPartition, ...]:
    out = []
    for sizes in compositions(n, r):
        for combo in itertools.product(*(list(partitions(s)) for s in sizes)):
            out.append(tuple(combo))
    return tuple(out)


def enumerate_multipartitions(n: int, r: int) -> list[MultiPartition]:
    """All r-partitions of n: component sizes in decreasing lex order, then
    each component in decreasing lex order."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    return list(_multipartitions(n, r))


@lru_cache(maxsize=None)
def _weights(n: int, m: tuple[int, ...]) -> tuple[Composition, ...]:
    return tuple(unflatten(v, m) for v in compositions(n, sum(m)))


def enumerate_compositions(n: int, m: Sequence[int]) -> list[Composition]:
    """The weight set Lambda_{n,r}(m), decreasing lex order of flat vectors."""
    return list(_weights(n, tuple(m)))


def fits_bounds(la: Sequence[Sequence[int]], m: Sequence[int] | None) -> bool:
    if m is None:
        return True
    return all(len(trim([p])[0]) <= mk for p, mk in zip(la, m))


# ---------------------------------------------------------------------------
# nodes and the order "succ"

def node_key(x: Node) -> tuple[int, int]:
    """Sort key: smaller key means larger in the order succ."""
    return (x.comp, x.row)


def node_precedes(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff x succ y, i.e. x sits in an earlier component, or the same
    component and a higher row."""
    (i, _, k), (i2, _, k2) = x, y
    return k < k2 or (k == k2 and i < i2)


def removable_nodes(la: Sequence[Sequence[int]]) -> list[Node]:
    la = trim(la)
    out = []
    for k, part in enumerate(la, start=1):
        for i, row in enumerate(part, start=1):
            nxt = part[i] if i < len(part) else 0
            if row > nxt:
                out.append(Node(i, row, k))
    return sorted(out, key=node_key)


def addable_nodes(la: Sequence[Sequence[int]], m: Sequence[int] | None = None) -> list[Node]:
    """Addable nodes, succ-descending.  With bounds ``m`` a new row may not
    exceed ``m_k``."""
    la = trim(la)
    out = []
    for k, part in enumerate(la, start=1):
        rows = len(part)
        for i in range(1, rows + 2):
            cur = part[i - 1] if i <= rows else 0
            prev = part[i - 2] if i >= 2 else None
            if prev is None or prev > cur:
                if m is not None and i > m[k - 1]:
                    continue
                out.append(Node(i, cur + 1, k))
    return sorted(out, key=node_key)


def remove_node(la: Sequence[Sequence[int]], x: Sequence[int]) -> MultiPartition:
    i, j, k = x
    la = [list(p) for p in trim(la)]
    part = la[k - 1]
    if not (i <= len(part) and part[i - 1] == j and (i == len(part) or part[i] < j)):
        raise ValueError(f"{tuple(x)} is not removable from {trim(la)}")
    part[i - 1] -= 1
    return trim(la)


def add_node(la: Sequence[Sequence[int]], x: Sequence[int]) -> MultiPartition:
    i, j, k = x
    la = [list(p) for p in trim(la)]
    part = la[k - 1]
    cur = part[i - 1] if i <= len(part) else 0
    if i > len(part) + 1 or cur != j - 1 or (i > 1 and part[i - 2] < j):
        raise ValueError(f"{tuple(x)} is not addable to {trim(la)}")
    if i == len(part) + 1:
        part.append(1)
    else:
        part[i - 1] += 1
    return trim(la)



# ---------------------------------------------------------------------------
# gamma: Lambda_{n,r}(m') -> Lambda_{n+1,r}(m)

def derived_bounds(m: Sequence[int]) -> tuple[int, ...]:
    """m' = (m_1, ..., m_{r-1}, m_r - 1)."""
    m = tuple(m)
    if m[-1] < 2:
        raise ValueError("m_r must be at least 2")
    return m[:-1] + (m[-1] - 1,)


def gamma(la: Sequence[Sequence[int]], m: Sequence[int]) -> Composition:
    """Append a final entry 1 to the last component (padded to m_r)."""
    mp = derived_bounds(m)
    la = pad(la, mp)
    return la[:-1] + (la[-1] + (1,),)


def is_in_gamma_image(mu: Sequence[Sequence[int]], m: Sequence[int]) -> bool:
    mu = pad(mu, m)
    return mu[-1][-1] == 1


def gamma_inv(mu: Sequence[Sequence[int]], m: Sequence[int]) -> Composition:
    mu = pad(mu, m)
    if mu[-1][-1] != 1:
        raise ValueError(f"{mu} is not in the image of gamma (last entry {mu[-1][-1]} != 1)")
    return mu[:-1] + (mu[-1][:-1],)


# ---------------------------------------------------------------------------
# dominance

def dominance_ge(la: Sequence[Sequence[int]], mu: Sequence[Sequence[int]],
                 m: Sequence[int] | None = None) -> bool:
    """la >= mu in the dominance order (la - mu a non-negative sum of simple roots)."""
    if m is None:
        m = tuple(max(len(a), len(b), 1) for a, b in zip(la, mu))
    a, b = flatten(pad(la, m)), flatten(pad(mu, m))
    if sum(a) != sum(b):
        raise ValueError("dominance needs equal sizes")
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


# ---------------------------------------------------------------------------
# standard tableaux

@dataclass(frozen=True)
class StdTableau:
    """A standard tableau; ``rows[k][i][j]`` is the entry at node (i+1, j+1, k+1)."""

    rows: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def shape(self) -> MultiPartition:
        return tuple(tuple(len(row) for row in comp) for comp in self.rows)

    @property
    def n(self) -> int:
        return sum(len(row) for comp in self.rows for row in comp)

    def __getitem__(self, x: Sequence[int]) -> int:
        i, j, k = x
        return self.rows[k - 1][i - 1][j - 1]

    def node_of(self, v: int) -> Node:
        for k, comp in enumerate(self.rows, start=1):
            for i, row in enumerate(comp, start=1):
                if v in row:
                    return Node(i, row.index(v) + 1, k)
        raise KeyError(v)

    def is_standard(self) -> bool:
        entries = sorted(v for comp in self.rows for row in comp for v in row)
        if entries != list(range(1, self.n + 1)):
            return False
        for comp in self.rows:
            for i, row in enumerate(comp):
                if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                    return False
                if i + 1 < len(comp):
                    below = comp[i + 1]
                    if len(below) > len(row) or any(row[j] >= below[j] for j in range(len(below))):
                        return False
        return True

    def remove_max(self) -> "StdTableau":
        """The tableau with the largest entry deleted."""
        x = self.node_of(self.n)
        rows = [list(list(r) for r in comp) for comp in self.rows]
        rows[x.comp - 1][x.row - 1].pop()
        return StdTableau(tuple(tuple(tuple(r) for r in comp if r) for comp in rows))


def superstandard(mu: Sequence[Sequence[int]]) -> StdTableau:
    """t^mu: fill the diagram of mu in reading order (components, rows, columns).

    Zero rows of a composition are skipped.
    """
    v = 0
    comps = []
    for part in mu:
        rows = []
        for row in part:
            rows.append(tuple(range(v + 1, v + row + 1)))
            v += row
        comps.append(tuple(rows))
    return StdTableau(tuple(comps))


def enumerate_std_tableaux(la: Sequence[Sequence[int]]) -> list[StdTableau]:
    """All standard tableaux of shape la; built by placing n, n-1, ... at
    removable nodes in succ order."""
    la = check_multipartition(la)
    n = size(la)
    out: list[StdTableau] = []

    def rec(shape: MultiPartition, v: int, filled: dict):
        if v == 0:
            rows = tuple(
                tuple(tuple(filled[(i, j, k)] for j in range(1, row + 1))
                      for i, row in enumerate(part, start=1))
                for k, part in enumerate(la, start=1)
            )
            out.append(StdTableau(rows))
            return
        for x in removable_nodes(shape):
            filled[tuple(x)] = v
            rec(remove_node(shape, x), v - 1, filled)
            del filled[tuple(x)]

    rec(la, n, {})
    out.sort(key=lambda t: t.rows)
    return out


@lru_cache(maxsize=None)
def _std_count(la: MultiPartition) -> int:
    if size(la) == 0:
        return 1
    return sum(_std_count(remove_node(la, x)) for x in removable_nodes(la))


def std_count(la: Sequence[Sequence[int]]) -> int:
    """|Std(la)| via the branching recursion over removable nodes."""
    return _std_count(check_multipartition(la))


def perm_inverse(w: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x] = i
    return tuple(inv)


def perm_compose(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """(u v)(j) = u(v(j))."""
    return tuple(u[x] for x in v)


def perm_length(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def tableau_perm(t: StdTableau) -> tuple[int, ...]:
    """d(t): the permutation with t(x) = d(t)(t^la(x)) for every node x."""
    ts = superstandard(t.shape)
    w = [0] * t.n
    for x in diagram(t.shape):
        w[ts[x] - 1] = t[x] - 1
    return tuple(w)


# ---------------------------------------------------------------------------
# semistandard tableaux

Label = tuple[int, int]  # (a, c): row index a in component c


def label_key(lab: Label) -> tuple[int, int]:
    """(a,c) >= (a',c') iff c > c', or c = c' and a >= a'."""
    return (lab[1], lab[0])


@dataclass(frozen=True)
class SemiStdTableau:
    """``rows[k][i][j]`` is the label (a, c) at node (i+1, j+1, k+1)."""

    rows: tuple[tuple[tuple[Label, ...], ...], ...]

    @property
    def shape(self) -> MultiPartition:
        return tuple(tuple(len(row) for row in comp) for comp in self.rows)

    def __getitem__(self, x: Sequence[int]) -> Label:
        i, j, k = x
        return self.rows[k - 1][i - 1][j - 1]

    def weight(self, m: Sequence[int]) -> Composition:
        counts = [[0] * mk for mk in m]
        for comp in self.rows:
            for row in comp:
                for a, c in row:
                    counts[c - 1][a - 1] += 1
        return tuple(tuple(p) for p in counts)

    def is_semistandard(self) -> bool:
        for k, comp in enumerate(self.rows, start=1):
            for i, row in enumerate(comp):
                if any(lab[1] < k for lab in row):
                    return False
                if any(label_key(row[j]) > label_key(row[j + 1]) for j in range(len(row) - 1)):
                    return False
                if i + 1 < len(comp):
                    below = comp[i + 1]
                    if any(label_key(row[j]) >= label_key(below[j]) for j in range(len(below))):
                        return False
        return True

    def remove_label(self, lab: Label) -> tuple["SemiStdTableau", Node]:
        """Delete the unique node carrying ``lab``; returns (tableau, node)."""
        hits = [x for x in diagram(self.shape) if self[x] == lab]
        if len(hits) != 1:
            raise ValueError(f"label {lab} occurs {len(hits)} times")
        x = hits[0]
        rows = [list(list(r) for r in comp) for comp in self.rows]
        rows[x.comp - 1][x.row - 1].pop(x.col - 1)
        return SemiStdTableau(tuple(tuple(tuple(r) for r in comp if r) for comp in rows)), x


def _labels(k: int, m: Sequence[int]) -> list[Label]:
    return sorted(((a, c) for c in range(k, len(m) + 1) for a in range(1, m[c - 1] + 1)),
                  key=label_key)


def _enumerate_ssts(la: MultiPartition, m: Sequence[int], weight: Composition | None):
    nodes = diagram(la)  # reading order: left neighbour and upper neighbour come first
    target = None
    if weight is not None:
        target = {(a, c): weight[c - 1][a - 1]
                  for c in range(1, len(m) + 1) for a in range(1, m[c - 1] + 1)}
    used: dict[Label, int] = {}
    filled: dict[tuple[int, int, int], Label] = {}
    out = []
    label_lists = {k: _labels(k, m) for k in range(1, len(m) + 1)}

    def rec(pos: int):
        if pos == len(nodes):
            rows = tuple(
                tuple(tuple(filled[(i, j, k)] for j in range(1, row + 1))
                      for i, row in enumerate(part, start=1))
                for k, part in enumerate(la, start=1)
            )
            out.append(SemiStdTableau(rows))
            return
        i, j, k = nodes[pos]
        left = filled.get((i, j - 1, k))
        up = filled.get((i - 1, j, k))
        for lab in label_lists[k]:
            key = label_key(lab)
            if left is not None and key < label_key(left):
                continue
            if up is not None and key <= label_key(up):
                continue
            if target is not None and used.get(lab, 0) >= target[lab]:
                continue
            used[lab] = used.get(lab, 0) + 1
            filled[(i, j, k)] = lab
            rec(pos + 1)
            used[lab] -= 1
            del filled[(i, j, k)]

    rec(0)
    return out


def enumerate_ssts(la: Sequence[Sequence[int]], mu: Sequence[Sequence[int]],
                   m: Sequence[int] | None = None) -> list[SemiStdTableau]:
    """T_0(la, mu): semistandard tableaux of shape la and weight mu."""
    la = check_multipartition(la)
    if m is None:
        m = tuple(len(p) for p in mu)
    mu = pad(mu, m)
    if size(mu) != size(la):
        return []
    return _enumerate_ssts(la, tuple(m), mu)


def enumerate_all_ssts(la: Sequence[Sequence[int]], m: Sequence[int]) -> list[SemiStdTableau]:
    """T_0(la): semistandard tableaux of shape la, any weight in Lambda(m)."""
    return _enumerate_ssts(check_multipartition(la), tuple(m), None)


def _hook_content(part: Sequence[int], N: int) -> int:
    """Semistandard fillings of a partition with entries from an N-element chain."""
    num, den = 1, 1
    conj = [sum(1 for p in part if p > j) for j in range(part[0])] if part else []
    for i, row in enumerate(part):
        for j in range(row):
            num *= N + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den


@lru_cache(maxsize=None)
def _weyl_dim(la: MultiPartition, m: tuple[int, ...]) -> int:
    # component k only sees labels (a, c) with c >= k, a chain of length
    # m_k + ... + m_r, and components do not interact
    out = 1
    for k, part in enumerate(la):
        out *= _hook_content(part, sum(m[k:]))
    return out


def weyl_dim(la: Sequence[Sequence[int]], m: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape la with entries bounded by m."""
    la = check_multipartition(la)
    if not fits_bounds(la, m):
        return 0
    return _weyl_dim(la, tuple(m))


def tableau_T_lambda(la: Sequence[Sequence[int]]) -> SemiStdTableau:
    """T^la: every node (i, j, k) labelled (i, k)."""
    la = check_multipartition(la)
    return SemiStdTableau(tuple(
        tuple(tuple((i, k) for _ in range(row)) for i, row in enumerate(part, start=1))
        for k, part in enumerate(la, start=1)
    ))


def weight_tableau(t: StdTableau, mu: Sequence[Sequence[int]]) -> SemiStdTableau:
    """mu(t): label node x by (a, c) when t(x) sits in row a of component c of t^mu."""
    ts = superstandard(mu)
    where = {}
    for c, comp in enumerate(ts.rows, start=1):
        # rows of t^mu skip zero parts, so recover row indices from mu
        nonzero_rows = [a for a, row in enumerate(mu[c - 1], start=1) if row]
        for a, row in zip(nonzero_rows, comp):
            for v in row:
                where[v] = (a, c)
    return SemiStdTableau(tuple(
        tuple(tuple(where[v] for v in row) for row in comp) for comp in t.rows
    ))


def special_sst(la: Sequence[Sequence[int]], x: Sequence[int], m: Sequence[int]) -> SemiStdTableau:
    """T_x^la: label (a, c) at (a, b, c), except (m_r, r) at the removable node x."""
    la = check_multipartition(la)
    x = Node(*x)
    if x not in removable_nodes(la):
        raise ValueError(f"{tuple(x)} is not a removable node of {la}")
    r = len(la)
    return SemiStdTableau(tuple(
        tuple(
            tuple((m[-1], r) if (i, j, k) == tuple(x) else (i, k) for j in range(1, row + 1))
            for i, row in enumerate(part, start=1)
        )
        for k, part in enumerate(la, start=1)
    ))


# ---------------------------------------------------------------------------
# text / JSON

def format_multipartition(la: Sequence[Sequence[int]]) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in p) + "]" for p in la) + "]"


def parse_multipartition(text: str) -> MultiPartition:
    """Parse the bracket form ``[[2,1],[1]]`` (``[]`` for an empty component)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed multipartition {text!r}: {exc}") from None
    if not isinstance(data, list) or not all(
        isinstance(p, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in p)
        for p in data
    ):
        raise ValueError(f"malformed multipartition {text!r}")
    if not data:
        raise ValueError("a multipartition needs at least one component")
    return check_multipartition(data)


def format_node(x: Sequence[int]) -> str:
    return "(" + ",".join(str(v) for v in x) + ")"


def parse_node(text: str) -> Node:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"malformed node {text!r}")
    vals = [int(v) for v in body[1:-1].split(",")]
    if len(vals) != 3 or min(vals) < 1:
        raise ValueError(f"malformed node {text!r}")
    return Node(*vals)


def to_json(la: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(p) for p in la]


def from_json(data: Sequence[Sequence[int]]) -> MultiPartition:
    """Inverse of to_json; validates the partition shape."""
    return parse_multipartition(json.dumps([list(p) for p in data]))


# ---------------------------------------------------------------------------
# residues

@dataclass(frozen=True)
class Charge:
    """Multicharge s = (s_1..s_r) with quantum characteristic e."""

    s: tuple[int, ...]
    e: int

    def __post_init__(self):
        if self.e < 2:
            raise ValueError(f"e must be at least 2, got {self.e}")
        object.__setattr__(self, "s", tuple(int(v) for v in self.s))
        if not self.s:
            raise ValueError("a charge needs at least one component")

    @property
    def r(self) -> int:
        return len(self.s)


def residue(x: Sequence[int], charge: Charge) -> int:
    """(col - row + s_comp) mod e."""
    i, j, k = x
    return (j - i + charge.s[k - 1]) % charge.e
