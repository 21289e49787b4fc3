"""Root lattice data: contents, the Cartan pairing, defects and blocks."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .combinatorics import (
    Multicharge,
    Multipartition,
    enumerate_multipartitions,
    residue,
)
from .errors import OddNorm, Unsupported

__all__ = [
    "RootVector",
    "Block",
    "content",
    "cartan_entry",
    "root_pairing",
    "weight_pairing",
    "defect",
    "blocks",
    "find_block",
    "check_scope",
]


@dataclass(frozen=True)
class RootVector:
    """A nonnegative combination of simple roots, ``sum_i coeffs[i] * alpha_i``."""

    coeffs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        items = self.coeffs.items() if isinstance(self.coeffs, Mapping) else self.coeffs
        acc: dict[int, int] = {}
        for i, m in items:
            if m < 0:
                raise ValueError("root multiplicities must be nonnegative")
            acc[int(i)] = acc.get(int(i), 0) + int(m)
        object.__setattr__(self, "coeffs", tuple(sorted((i, m) for i, m in acc.items() if m)))

    @classmethod
    def from_residues(cls, residues: Iterable[int]) -> "RootVector":
        acc: dict[int, int] = {}
        for i in residues:
            acc[i] = acc.get(i, 0) + 1
        return cls(tuple(acc.items()))

    @classmethod
    def parse(cls, text: str, e: int = 0) -> "RootVector":
        """Parse ``"a-1:1,a0:3"``.  Residues are reduced mod ``e`` when ``e > 0``."""
        s = text.strip()
        if s in ("", "0", "-"):
            return cls()
        acc: dict[int, int] = {}
        for tok in s.split(","):
            m = re.fullmatch(r"\s*a(-?\d+)\s*(?::\s*(\d+))?\s*", tok)
            if m is None:
                raise ValueError(f"bad root token {tok!r}; expected a<k>:<mult>")
            i = int(m.group(1))
            if e:
                i %= e
            acc[i] = acc.get(i, 0) + int(m.group(2) or 1)
        return cls(tuple(acc.items()))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.as_dict().get(i, 0)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.coeffs)

    def negate(self, e: int = 0) -> "RootVector":
        """The image under ``alpha_i -> alpha_{-i}``."""
        return RootVector(tuple(((-i) % e if e else -i, m) for i, m in self.coeffs))

    def key(self) -> str:
        return ",".join(f"a{i}:{m}" for i, m in self.coeffs)

    def to_json(self) -> dict[str, int]:
        return {str(i): m for i, m in self.coeffs}

    def __str__(self) -> str:
        return self.key() or "0"


def content(lam: Multipartition, mc: Multicharge) -> RootVector:
    return RootVector.from_residues(residue(a, mc) for a in lam.nodes())


def cartan_entry(i: int, j: int, e: int) -> int:
    """The entry ``a_ij`` of the Cartan matrix of the quiver with ``e`` vertices (``e = 0``: infinite line)."""
    if e:
        i, j = i % e, j % e
    if i == j:
        return 2
    if e == 2:
        return -2
    diff = i - j
    if e:
        diff %= e
        return -1 if diff in (1, e - 1) else 0
    return -1 if abs(diff) == 1 else 0


def root_pairing(x: RootVector, y: RootVector, e: int) -> int:
    return sum(a * b * cartan_entry(i, j, e) for i, a in x.coeffs for j, b in y.coeffs)


def weight_pairing(mc: Multicharge, beta: RootVector) -> int:
    """``(Lambda, beta)`` for the dominant weight determined by the multicharge."""
    return sum(m * mc.weight_multiplicity(i) for i, m in beta.coeffs)


def defect(mc: Multicharge, beta: RootVector) -> int:
    norm = root_pairing(beta, beta, mc.e)
    if norm % 2:
        raise OddNorm(f"(beta, beta) = {norm} is odd for beta = {beta}")
    return weight_pairing(mc, beta) - norm // 2


def check_scope(n: int, mc: Multicharge) -> None:
    if not mc.supports(n):
        raise Unsupported(f"e={mc.e} with n={n}: need e = 0 or e >= n")


@dataclass(frozen=True)
class Block:
    """All multipartitions of one content, most dominant first."""

    beta: RootVector
    members: tuple[Multipartition, ...]
    defect: int
    mc: Multicharge = field(compare=False)

    @property
    def n(self) -> int:
        return self.beta.total

    @property
    def key(self) -> str:
        return self.beta.key()

    def to_json(self) -> dict:
        return {
            "beta": self.beta.to_json(),
            "defect": self.defect,
            "members": [str(m) for m in self.members],
        }

    def conjugate(self) -> "Block":
        """The block of conjugate multipartitions for the conjugate multicharge."""
        mc2 = self.mc.conjugate()
        members = sorted((m.conjugate() for m in self.members), key=lambda m: m.components, reverse=True)
        return Block(self.beta.negate(self.mc.e), tuple(members), self.defect, mc2)


def blocks(n: int, mc: Multicharge) -> list[Block]:
    """Split the multipartitions of ``n`` into blocks, ordered by block key."""
    check_scope(n, mc)
    groups: dict[RootVector, list[Multipartition]] = {}
    for lam in enumerate_multipartitions(n, mc.level):
        groups.setdefault(content(lam, mc), []).append(lam)
    out = [Block(beta, tuple(members), defect(mc, beta), mc) for beta, members in groups.items()]
    out.sort(key=lambda b: b.beta.coeffs)
    return out


def find_block(n: int, mc: Multicharge, beta: RootVector | str) -> Block:
    if isinstance(beta, str):
        beta = RootVector.parse(beta, mc.e)
    for b in blocks(n, mc):
        if b.beta == beta:
            return b
    raise KeyError(f"no multipartition of {n} has content {beta}")
