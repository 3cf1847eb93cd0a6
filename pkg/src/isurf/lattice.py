"""Finitely generated lattices with integer symmetric bilinear forms.

Everything here is exact: inertia is computed by symmetric Gaussian
elimination over `fractions.Fraction`, never floating point, so
definiteness answers are proofs rather than approximations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import LatticeError


@dataclass(frozen=True)
class Signature:
    """Inertia triple of a rational symmetric bilinear form.

    `null` counts the dimension of the radical.
    """

    positive: int
    negative: int
    null: int

    @property
    def rank(self) -> int:
        return self.positive + self.negative + self.null

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.null)


@dataclass(frozen=True)
class IntersectionLattice:
    """Labeled basis plus a symmetric integer Gram matrix."""

    labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise LatticeError("duplicate basis labels")
        if len(self.gram) != n:
            raise LatticeError("gram dimension does not match basis size")
        for row in self.gram:
            if len(row) != n:
                raise LatticeError("gram matrix is not square")
        for i in range(n):
            for j in range(i + 1, n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise LatticeError(
                        f"gram matrix is not symmetric at ({i},{j})"
                    )

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise LatticeError(f"no basis vector named {label!r}") from None

    def entry(self, a: str, b: str) -> int:
        return self.gram[self.index(a)][self.index(b)]

    def scaled(self, scale: int) -> "IntersectionLattice":
        if scale < 1:
            raise LatticeError("scale must be a positive integer")
        return IntersectionLattice(
            self.labels,
            tuple(tuple(scale * x for x in row) for row in self.gram),
        )

    def sublattice(self, labels: Sequence[str]) -> "IntersectionLattice":
        """Restriction of the form to the span of the given basis vectors."""
        idx = [self.index(name) for name in labels]
        return IntersectionLattice(
            tuple(labels),
            tuple(tuple(self.gram[i][j] for j in idx) for i in idx),
        )

    def permuted(self, order: Sequence[int]) -> "IntersectionLattice":
        if sorted(order) != list(range(self.rank)):
            raise LatticeError("not a permutation of the basis indices")
        return IntersectionLattice(
            tuple(self.labels[i] for i in order),
            tuple(tuple(self.gram[i][j] for j in order) for i in order),
        )

    def to_json(self) -> dict:
        return {"basis": list(self.labels), "gram": [list(r) for r in self.gram]}

    @classmethod
    def from_json(cls, data: dict) -> "IntersectionLattice":
        try:
            basis = tuple(str(x) for x in data["basis"])
            gram = tuple(tuple(int(x) for x in row) for row in data["gram"])
        except (KeyError, TypeError, ValueError) as exc:
            raise LatticeError(f"bad lattice object: {exc}") from exc
        return cls(basis, gram)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def from_rows(labels: Iterable[str], rows: Iterable[Iterable[int]]) -> IntersectionLattice:
    return IntersectionLattice(tuple(labels), tuple(tuple(r) for r in rows))


EMPTY_LATTICE = IntersectionLattice((), ())


def signature(lat: IntersectionLattice, rng=None) -> Signature:
    """Exact inertia of the bilinear form.

    Symmetric elimination with symmetric pivoting over Fraction. A zero
    diagonal with some nonzero off-diagonal entry is handled as a
    hyperbolic 2x2 block contributing (1, 1, 0); a fully zero row joins
    the radical. `rng`, when given, randomizes admissible pivot choices
    (the result is pivot-order independent; tests exercise this).
    """
    m = [[Fraction(x) for x in row] for row in lat.gram]
    active = list(range(lat.rank))
    pos = neg = null = 0
    while active:
        diag = [i for i in active if m[i][i] != 0]
        if diag:
            p = rng.choice(diag) if rng is not None else diag[0]
            d = m[p][p]
            if d > 0:
                pos += 1
            else:
                neg += 1
            active.remove(p)
            for i in active:
                c = m[i][p]
                if c == 0:
                    continue
                f = c / d
                for j in active:
                    m[i][j] -= f * m[p][j]
            continue
        # every active diagonal vanishes
        pairs = [
            (i, j)
            for i in active
            for j in active
            if i < j and m[i][j] != 0
        ]
        if not pairs:
            null += len(active)
            break
        p, q = rng.choice(pairs) if rng is not None else pairs[0]
        b = m[p][q]
        pos += 1
        neg += 1
        active.remove(p)
        active.remove(q)
        rest = list(active)
        old = {(k, l): m[k][l] for k in rest for l in rest}
        for k in rest:
            for l in rest:
                m[k][l] = old[(k, l)] - (m[k][p] * m[q][l] + m[k][q] * m[p][l]) / b
    return Signature(pos, neg, null)


def is_negative_definite(lat: IntersectionLattice) -> bool:
    """True iff the form has inertia (0, rank, 0); rank 0 is vacuously true."""
    sig = signature(lat)
    return sig.positive == 0 and sig.null == 0


def _cycle_gram(diagonal: Sequence[int]) -> list[list[int]]:
    """Gram matrix of a cycle graph with the given diagonal.

    Adjacency contributions accumulate, so a 2-cycle gets off-diagonal
    entry 2 (its two vertices meet twice).
    """
    n = len(diagonal)
    g = [[0] * n for _ in range(n)]
    for i, d in enumerate(diagonal):
        g[i][i] = d
    if n >= 2:
        for i in range(n):
            j = (i + 1) % n
            g[i][j] += 1
            g[j][i] += 1
    return g


def make_named_lattice(
    family: str,
    n: int,
    m: int | None = None,
    scale: int = 1,
) -> IntersectionLattice:
    """The standard rank-(n+1) / rank-(n+m+2) lattice families.

    Lambda0(n): a cycle e_0..e_n with e_0^2 = 0 and e_i^2 = -2 otherwise.
    Lambda1(n,m): two chains e_1..e_n and f_1..f_m joined through g_1, g_2.
    Lambda2(n,m): two (-2)-cycles e_0..e_n and f_0..f_m glued by e_0.f_0 = 1.

    Every entry is multiplied by `scale`.
    """
    if n < 1:
        raise LatticeError("n must be at least 1")
    if scale < 1:
        raise LatticeError("scale must be a positive integer")
    if family == "Lambda0":
        if m is not None:
            raise LatticeError("Lambda0 takes no second parameter")
        labels = tuple(f"e{i}" for i in range(n + 1))
        g = _cycle_gram([0] + [-2] * n)
        return IntersectionLattice(labels, tuple(tuple(r) for r in g)).scaled(scale)
    if family not in ("Lambda1", "Lambda2"):
        raise LatticeError(f"unknown lattice family {family!r}")
    if m is None or m < 1:
        raise LatticeError(f"{family} needs m >= 1")
    if family == "Lambda1":
        labels = (
            tuple(f"e{i}" for i in range(1, n + 1))
            + tuple(f"f{i}" for i in range(1, m + 1))
            + ("g1", "g2")
        )
        size = n + m + 2
        g = [[0] * size for _ in range(size)]
        for i in range(size):
            g[i][i] = -2
        def link(a: int, b: int) -> None:
            g[a][b] += 1
            g[b][a] += 1
        for i in range(n - 1):
            link(i, i + 1)
        for i in range(m - 1):
            link(n + i, n + i + 1)
        g1, g2 = size - 2, size - 1
        link(0, g1)          # e1.g1
        link(n, g1)          # f1.g1
        link(n - 1, g2)      # en.g2
        link(n + m - 1, g2)  # fm.g2
        link(g1, g2)
        return IntersectionLattice(labels, tuple(tuple(r) for r in g)).scaled(scale)
    # Lambda2
    labels = tuple(f"e{i}" for i in range(n + 1)) + tuple(
        f"f{i}" for i in range(m + 1)
    )
    size = n + m + 2
    g = [[0] * size for _ in range(size)]
    ecyc = _cycle_gram([-2] * (n + 1))
    fcyc = _cycle_gram([-2] * (m + 1))
    for i in range(n + 1):
        for j in range(n + 1):
            g[i][j] = ecyc[i][j]
    for i in range(m + 1):
        for j in range(m + 1):
            g[n + 1 + i][n + 1 + j] = fcyc[i][j]
    g[0][n + 1] += 1
    g[n + 1][0] += 1
    return IntersectionLattice(labels, tuple(tuple(r) for r in g)).scaled(scale)
