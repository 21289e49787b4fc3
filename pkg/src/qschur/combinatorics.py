"""Multipartitions, standard tableaux, residues and the degree statistics.

Conventions
-----------
Nodes are 1-based triples ``(row, col, comp)``.  A standard tableau is stored
as its *path*: ``path[k-1]`` is the node containing ``k``, so the restriction
``t|k`` is simply the prefix of length ``k``.

Multipartitions are totally ordered by :func:`order_key`, the lexicographic
order on the tuple of component tuples.  This refines dominance: if
``lam`` dominates ``mu`` and they differ, then ``order_key(lam) > order_key(mu)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidNode, SizeMismatch

__all__ = [
    "Node",
    "Multipartition",
    "Multicharge",
    "StandardTableau",
    "order_key",
    "enumerate_multipartitions",
    "dominates",
    "tableau_dominates",
    "conjugate",
    "initial_tableau",
    "final_tableau",
    "initial_final_tableaux",
    "residue",
    "residue_sequence",
    "node_degree_stats",
    "degree_codegree",
    "enumerate_standard",
    "graded_standard",
    "std_relative",
    "std_relative_all",
]

Components = tuple[tuple[int, ...], ...]


class Node(NamedTuple):
    row: int
    col: int
    comp: int

    def __str__(self) -> str:
        return f"({self.row},{self.col},{self.comp})"


# ---------------------------------------------------------------------------
# raw shape helpers: shapes as tuples of tuples of positive ints


@lru_cache(maxsize=1 << 16)
def _addable(comps: Components) -> tuple[Node, ...]:
    out = []
    for l, part in enumerate(comps, start=1):
        prev = None
        for r, p in enumerate(part, start=1):
            if prev is None or prev > p:
                out.append(Node(r, p + 1, l))
            prev = p
        out.append(Node(len(part) + 1, 1, l))
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _removable(comps: Components) -> tuple[Node, ...]:
    out = []
    for l, part in enumerate(comps, start=1):
        for r, p in enumerate(part, start=1):
            if r == len(part) or part[r] < p:
                out.append(Node(r, p, l))
    return tuple(out)


def _add_node(comps: Components, node: Node) -> Components:
    r, _, l = node
    part = comps[l - 1]
    if r <= len(part):
        part = part[: r - 1] + (part[r - 1] + 1,) + part[r:]
    else:
        part = part + (1,)
    return comps[: l - 1] + (part,) + comps[l:]


def _remove_node(comps: Components, node: Node) -> Components:
    r, _, l = node
    part = comps[l - 1]
    if part[r - 1] == 1:
        part = part[: r - 1]
    else:
        part = part[: r - 1] + (part[r - 1] - 1,) + part[r:]
    return comps[: l - 1] + (part,) + comps[l:]


def _dominates_raw(a: Components, b: Components) -> bool:
    ca = cb = 0
    for pa, pb in zip(a, b):
        la, lb = len(pa), len(pb)
        for i in range(max(la, lb)):
            if i < la:
                ca += pa[i]
            if i < lb:
                cb += pb[i]
            if ca < cb:
                return False
    return True


def _transpose(part: tuple[int, ...]) -> tuple[int, ...]:
    if not part:
        return ()
    return tuple(sum(1 for p in part if p > c) for c in range(part[0]))


def _below(b: Node, a: Node) -> bool:
    """True if ``b`` is strictly below ``a``: later component, or same component and lower row."""
    return b.comp > a.comp or (b.comp == a.comp and b.row > a.row)


# ---------------------------------------------------------------------------


_PART_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Multipartition:
    """An l-tuple of partitions.  Components never store zero parts."""

    components: Components
    n: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        comps = tuple(tuple(int(p) for p in part) for part in self.components)
        for part in comps:
            if any(p <= 0 for p in part):
                raise ValueError(f"partition {part} has non-positive parts")
            if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
                raise ValueError(f"partition {part} is not weakly decreasing")
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "n", sum(sum(p) for p in comps))

    @classmethod
    def parse(cls, text: str) -> "Multipartition":
        """Parse ``"2,1|4,4,2"``; accepts ``1^2`` shorthand and ``-``/``0``/empty for an empty component."""
        s = text.strip()
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        comps = []
        for chunk in s.split("|"):
            chunk = chunk.strip()
            if chunk in ("", "-", "0", "−", "∅", "\\emptyset"):
                comps.append(())
                continue
            parts: list[int] = []
            for tok in chunk.split(","):
                m = _PART_TOKEN.match(tok.strip().replace("{", "").replace("}", ""))
                if m is None:
                    raise ValueError(f"bad partition token {tok!r} in {text!r}")
                parts.extend([int(m.group(1))] * int(m.group(2) or 1))
            comps.append(tuple(p for p in parts if p))
        return cls(tuple(comps))

    @classmethod
    def from_json(cls, obj: Sequence[Sequence[int]]) -> "Multipartition":
        return cls(tuple(tuple(p) for p in obj))

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.components]

    @property
    def level(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, p)) if p else "-" for p in self.components)

    def __repr__(self) -> str:
        return f"Multipartition({str(self)!r})"

    def latex_components(self) -> list[str]:
        """Component labels in compact exponent notation (``1^2``), ``0`` when empty."""
        out = []
        for part in self.components:
            if not part:
                out.append("0")
                continue
            bits = []
            i = 0
            while i < len(part):
                j = i
                while j < len(part) and part[j] == part[i]:
                    j += 1
                bits.append(str(part[i]) if j - i == 1 else f"{part[i]}^{j - i}")
                i = j
            out.append(",".join(bits))
        return out

    def nodes(self) -> Iterator[Node]:
        for l, part in enumerate(self.components, start=1):
            for r, p in enumerate(part, start=1):
                for c in range(1, p + 1):
                    yield Node(r, c, l)

    def __contains__(self, node: Node) -> bool:
        r, c, l = node
        if not 1 <= l <= self.level or r < 1 or c < 1:
            return False
        part = self.components[l - 1]
        return r <= len(part) and c <= part[r - 1]

    def addable_nodes(self) -> list[Node]:
        return list(_addable(self.components))

    def removable_nodes(self) -> list[Node]:
        return list(_removable(self.components))

    def add(self, node: Node) -> "Multipartition":
        if node not in self.addable_nodes():
            raise InvalidNode(f"{node} is not addable to {self}")
        return Multipartition(_add_node(self.components, node))

    def remove(self, node: Node) -> "Multipartition":
        if node not in self.removable_nodes():
            raise InvalidNode(f"{node} is not removable from {self}")
        return Multipartition(_remove_node(self.components, node))

    def conjugate(self) -> "Multipartition":
        return Multipartition(tuple(_transpose(p) for p in reversed(self.components)))


def order_key(mu: Multipartition) -> Components:
    """Sort key of the total order refining dominance (bigger = more dominant)."""
    return mu.components


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Multicharge:
    """A multicharge ``kappa`` together with the quantum characteristic ``e``."""

    kappa: tuple[int, ...]
    e: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kappa", tuple(int(k) for k in self.kappa))
        if not self.kappa:
            raise ValueError("multicharge must have at least one entry")
        if self.e < 0 or self.e == 1:
            raise ValueError(f"e must be 0 or at least 2, got {self.e}")

    @classmethod
    def parse(cls, text: str, e: int = 0) -> "Multicharge":
        return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x != ""), e)

    @property
    def level(self) -> int:
        return len(self.kappa)

    def reduce(self, i: int) -> int:
        return i % self.e if self.e else i

    def supports(self, n: int) -> bool:
        """Whether the standing assumption ``e = 0 or e >= n`` holds."""
        return self.e == 0 or self.e >= n

    def conjugate(self) -> "Multicharge":
        return Multicharge(tuple(-k for k in reversed(self.kappa)), self.e)

    def weight_multiplicity(self, i: int) -> int:
        """``(Lambda, alpha_i)``: how many charges are congruent to ``i``."""
        i = self.reduce(i)
        return sum(1 for k in self.kappa if self.reduce(k) == i)

    def __str__(self) -> str:
        return ",".join(map(str, self.kappa))


def residue(node: Node, mc: Multicharge) -> int:
    r, c, l = node
    return mc.reduce(mc.kappa[l - 1] + c - r)


# ---------------------------------------------------------------------------


def enumerate_multipartitions(n: int, level: int) -> list[Multipartition]:
    """All multipartitions of ``n`` with ``level`` components, most dominant first."""
    if n < 0 or level < 1:
        raise ValueError("need n >= 0 and level >= 1")
    return [Multipartition(c) for c in _multipartitions(n, level)]


@lru_cache(maxsize=None)
def _partitions(n: int, maxpart: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _multipartitions(n: int, level: int) -> tuple[Components, ...]:
    if level == 1:
        return tuple((p,) for p in _partitions(n, n))
    out = []
    for k in range(n, -1, -1):
        for head in _partitions(k, k):
            for tail in _multipartitions(n - k, level - 1):
                out.append((head,) + tail)
    out.sort(reverse=True)
    return tuple(out)


def _check_comparable(lam: Multipartition, mu: Multipartition) -> None:
    if lam.n != mu.n or lam.level != mu.level:
        raise SizeMismatch(f"cannot compare {lam} (n={lam.n}) with {mu} (n={mu.n})")


def dominates(lam: Multipartition, mu: Multipartition) -> bool:
    """``lam`` dominates ``mu`` (reflexive)."""
    _check_comparable(lam, mu)
    return _dominates_raw(lam.components, mu.components)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StandardTableau:
    """A standard tableau stored as the sequence of nodes holding 1, 2, ..., n."""

    shape: Multipartition
    path: tuple[Node, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "path", tuple(Node(*a) for a in self.path))

    @classmethod
    def _trusted(cls, shape: Multipartition, path: tuple[Node, ...]) -> "StandardTableau":
        # skips normalisation; callers pass a tuple of Node built by the enumerators
        obj = object.__new__(cls)
        object.__setattr__(obj, "shape", shape)
        object.__setattr__(obj, "path", path)
        return obj

    @classmethod
    def from_path(cls, path: Sequence[Node], level: int) -> "StandardTableau":
        comps: Components = ((),) * level
        for node in path:
            if node not in _addable(comps):
                raise ValueError(f"path {path} is not standard at node {node}")
            comps = _add_node(comps, node)
        return cls(Multipartition(comps), tuple(path))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Sequence[int]]]) -> "StandardTableau":
        """Build from per-component row lists, e.g. ``[[[1, 2], [4]], [[3]]]``."""
        where: dict[int, Node] = {}
        for l, comp in enumerate(rows, start=1):
            for r, row in enumerate(comp, start=1):
                for c, k in enumerate(row, start=1):
                    where[int(k)] = Node(r, c, l)
        n = len(where)
        if sorted(where) != list(range(1, n + 1)):
            raise ValueError("entries must be exactly 1..n")
        return cls.from_path([where[k] for k in range(1, n + 1)], len(rows))

    @property
    def n(self) -> int:
        return len(self.path)

    @property
    def level(self) -> int:
        return self.shape.level

    def entry(self, node: Node) -> int:
        return self.path.index(node) + 1

    def rows(self) -> list[list[list[int]]]:
        out: list[list[list[int]]] = [[[0] * p for p in part] for part in self.shape.components]
        for k, (r, c, l) in enumerate(self.path, start=1):
            out[l - 1][r - 1][c - 1] = k
        return out

    def restrict(self, k: int) -> "StandardTableau":
        comps: Components = ((),) * self.level
        for node in self.path[:k]:
            comps = _add_node(comps, node)
        return StandardTableau(Multipartition(comps), self.path[:k])

    def prefix_shapes(self) -> list[Components]:
        """``Shape(t|k)`` for k = 1..n, as raw component tuples."""
        comps: Components = ((),) * self.level
        out = []
        for node in self.path:
            comps = _add_node(comps, node)
            out.append(comps)
        return out

    def components_of_entries(self) -> tuple[frozenset[int], ...]:
        sets: list[set[int]] = [set() for _ in range(self.level)]
        for k, node in enumerate(self.path, start=1):
            sets[node.comp - 1].add(k)
        return tuple(frozenset(s) for s in sets)

    def conjugate(self) -> "StandardTableau":
        level = self.level
        return StandardTableau(
            self.shape.conjugate(),
            tuple(Node(c, r, level + 1 - l) for r, c, l in self.path),
        )

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "rows": self.rows()}

    @classmethod
    def from_json(cls, obj: dict) -> "StandardTableau":
        t = cls.from_rows(obj["rows"])
        if t.shape != Multipartition.from_json(obj["shape"]):
            raise ValueError("tableau rows do not match the stated shape")
        return t

    def __str__(self) -> str:
        return "|".join(
            "/".join(",".join(map(str, row)) for row in comp) if comp else "-"
            for comp in self.rows()
        )


def conjugate(x):
    """Conjugate a multipartition or a standard tableau."""
    return x.conjugate()


def tableau_dominates(s: StandardTableau, t: StandardTableau) -> bool:
    """``Shape(s|k)`` dominates ``Shape(t|k)`` for every k."""
    if s.n != t.n or s.level != t.level:
        raise SizeMismatch("tableaux of different size or level")
    return all(_dominates_raw(a, b) for a, b in zip(s.prefix_shapes(), t.prefix_shapes()))


def initial_tableau(mu: Multipartition) -> StandardTableau:
    """The row-reading tableau: the unique dominance-maximal standard mu-tableau."""
    path = [
        Node(r, c, l)
        for l, part in enumerate(mu.components, start=1)
        for r, p in enumerate(part, start=1)
        for c in range(1, p + 1)
    ]
    return StandardTableau(mu, tuple(path))


def final_tableau(mu: Multipartition) -> StandardTableau:
    """The column-reading tableau of the components from last to first."""
    return initial_tableau(mu.conjugate()).conjugate()


def initial_final_tableaux(mu: Multipartition) -> tuple[StandardTableau, StandardTableau]:
    return initial_tableau(mu), final_tableau(mu)


def residue_sequence(t: StandardTableau, mc: Multicharge) -> tuple[int, ...]:
    return tuple(residue(node, mc) for node in t.path)


# ---------------------------------------------------------------------------
# degree statistics


def _degree_stats_raw(comps: Components, a: Node, mc: Multicharge) -> tuple[int, int]:
    i = residue(a, mc)
    below = above = 0
    for b in _addable(comps):
        if residue(b, mc) == i:
            if _below(b, a):
                below += 1
            elif _below(a, b):
                above += 1
    for b in _removable(comps):
        if residue(b, mc) == i:
            if _below(b, a):
                below -= 1
            elif _below(a, b):
                above -= 1
    return below, above


def node_degree_stats(mu: Multipartition, a: Node, mc: Multicharge) -> tuple[int, int]:
    """``(d_A(mu), d^A(mu))`` for a node ``a`` in ``mu`` or addable to it."""
    a = Node(*a)
    if a not in mu and a not in mu.addable_nodes():
        raise InvalidNode(f"{a} is neither in {mu} nor addable to it")
    return _degree_stats_raw(mu.components, a, mc)


def degree_codegree(t: StandardTableau, mc: Multicharge) -> tuple[int, int]:
    deg = codeg = 0
    comps: Components = ((),) * t.level
    for node in t.path:
        comps = _add_node(comps, node)
        d, cd = _degree_stats_raw(comps, node, mc)
        deg += d
        codeg += cd
    return deg, codeg


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _std_paths(comps: Components) -> tuple[tuple[Node, ...], ...]:
    if all(not p for p in comps):
        return ((),)
    out = []
    for a in _removable(comps):
        for path in _std_paths(_remove_node(comps, a)):
            out.append(path + (a,))
    return tuple(out)


def enumerate_standard(lam: Multipartition) -> list[StandardTableau]:
    """All standard ``lam``-tableaux, each exactly once, in a fixed order."""
    return [StandardTableau._trusted(lam, p) for p in _std_paths(lam.components)]


@lru_cache(maxsize=None)
def _graded_paths(comps: Components, mc: Multicharge) -> tuple[tuple[tuple[Node, ...], int, int], ...]:
    if all(not p for p in comps):
        return (((), 0, 0),)
    out = []
    for a in _removable(comps):
        d, cd = _degree_stats_raw(comps, a, mc)
        for path, deg, codeg in _graded_paths(_remove_node(comps, a), mc):
            out.append((path + (a,), deg + d, codeg + cd))
    return tuple(out)


def graded_standard(lam: Multipartition, mc: Multicharge) -> list[tuple[StandardTableau, int, int]]:
    """``(t, deg t, codeg t)`` for every standard ``lam``-tableau."""
    return [(StandardTableau._trusted(lam, p), d, cd) for p, d, cd in _graded_paths(lam.components, mc)]


def _relative_search(mu: Multipartition, mc: Multicharge, upper: bool, target: Components | None):
    """Depth-first search for tableaux s with s >= t^mu (upper) or t_mu >= s (lower).

    Yields ``(shape, path, deg, codeg)``.  Each step adds one node with the
    prescribed residue and prunes as soon as a prefix shape fails the
    dominance comparison.
    """
    ref = initial_tableau(mu) if upper else final_tableau(mu)
    res = residue_sequence(ref, mc)
    ref_shapes = ref.prefix_shapes()
    n = mu.n
    start: Components = ((),) * mu.level

    def inside(node: Node) -> bool:
        if target is None:
            return True
        part = target[node.comp - 1]
        return node.row <= len(part) and node.col <= part[node.row - 1]

    def walk(comps: Components, path: tuple[Node, ...], deg: int, codeg: int):
        k = len(path)
        if k == n:
            yield comps, path, deg, codeg
            return
        want = res[k]
        for a in _addable(comps):
            if residue(a, mc) != want or not inside(a):
                continue
            new = _add_node(comps, a)
            ok = _dominates_raw(new, ref_shapes[k]) if upper else _dominates_raw(ref_shapes[k], new)
            if ok:
                d, cd = _degree_stats_raw(new, a, mc)
                yield from walk(new, path + (a,), deg + d, codeg + cd)

    yield from walk(start, (), 0, 0)


def std_relative(
    mu: Multipartition, lam: Multipartition, mode: str, mc: Multicharge
) -> list[StandardTableau]:
    """``Std^mu(lam)`` (mode ``"upper"``) or ``Std_mu(lam)`` (mode ``"lower"``)."""
    _check_comparable(lam, mu)
    if mode not in ("upper", "lower"):
        raise ValueError("mode must be 'upper' or 'lower'")
    return [
        StandardTableau._trusted(lam, path)
        for _, path, _, _ in _relative_search(mu, mc, mode == "upper", lam.components)
    ]


def std_relative_all(
    mu: Multipartition, mode: str, mc: Multicharge
) -> dict[Multipartition, list[tuple[StandardTableau, int, int]]]:
    """``Std^mu(lam)`` (or ``Std_mu(lam)``) for every ``lam`` at once.

    Returns ``{lam: [(s, deg s, codeg s), ...]}``; shapes with no tableaux are absent.
    """
    if mode not in ("upper", "lower"):
        raise ValueError("mode must be 'upper' or 'lower'")
    out: dict[Multipartition, list[tuple[StandardTableau, int, int]]] = {}
    for comps, path, deg, codeg in _relative_search(mu, mc, mode == "upper", None):
        lam = Multipartition(comps)
        out.setdefault(lam, []).append((StandardTableau._trusted(lam, path), deg, codeg))
    return out
