"""Orthogonal-vectors instances: model, brute-force solver, generators, I/O.

The quadratic brute-force solver is the reference oracle on purpose; nothing
here tries to be subquadratic.  Instances are immutable and all functions are
pure, so they are safe to share across workers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import FormatError

Vector = tuple[int, ...]

GENERATOR_MODES = ("random", "planted-orthogonal", "no-orthogonal")


@dataclass(frozen=True)
class OvInstance:
    X: tuple[Vector, ...]
    Y: tuple[Vector, ...]

    def __post_init__(self):
        X = tuple(tuple(int(b) for b in x) for x in self.X)
        Y = tuple(tuple(int(b) for b in y) for y in self.Y)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        if len(X) == 0 or len(X) != len(Y):
            raise ValueError("instance needs equally many X and Y vectors, at least one each")
        d = len(X[0])
        if d < 1:
            raise ValueError("dimension must be at least 1")
        for vec in X + Y:
            if len(vec) != d:
                raise ValueError("all vectors must share one dimension")
            if any(b not in (0, 1) for b in vec):
                raise ValueError("vector entries must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.X)

    @property
    def d(self) -> int:
        return len(self.X[0])


def dot(x: Vector, y: Vector) -> int:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum(a * b for a, b in zip(x, y))


def solve_ov_bruteforce(inst: OvInstance) -> tuple[int, int] | None:
    """First orthogonal pair as 1-based (i, j) in lexicographic order, or None."""
    for i, x in enumerate(inst.X):
        for j, y in enumerate(inst.Y):
            if dot(x, y) == 0:
                return (i + 1, j + 1)
    return None


def gen_ov_instance(n: int, d: int, seed: int, mode: str = "random") -> OvInstance:
    """Seeded instance generator; identical arguments give identical instances.

    planted-orthogonal overwrites one x with the bit complement of one y, so
    at least one orthogonal pair exists.  no-orthogonal repairs every
    orthogonal pair by planting a shared 1-coordinate (setting bits to 1 never
    creates new orthogonal pairs); the result is re-checked with the solver.
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be at least 1")
    if mode not in GENERATOR_MODES:
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(f"ov:{n}:{d}:{seed}:{mode}")
    X = [[rng.randrange(2) for _ in range(d)] for _ in range(n)]
    Y = [[rng.randrange(2) for _ in range(d)] for _ in range(n)]
    if mode == "planted-orthogonal":
        i0 = rng.randrange(n)
        j0 = rng.randrange(n)
        X[i0] = [1 - b for b in Y[j0]]
    elif mode == "no-orthogonal":
        for i in range(n):
            for j in range(n):
                if sum(a * b for a, b in zip(X[i], Y[j])) == 0:
                    h = rng.randrange(d)
                    X[i][h] = 1
                    Y[j][h] = 1
    inst = OvInstance(tuple(tuple(x) for x in X), tuple(tuple(y) for y in Y))
    answer = solve_ov_bruteforce(inst)
    if mode == "planted-orthogonal" and answer is None:
        raise AssertionError("planted instance lost its orthogonal pair")
    if mode == "no-orthogonal" and answer is not None:
        raise AssertionError("no-orthogonal instance still has an orthogonal pair")
    return inst


def write_ov(inst: OvInstance) -> bytes:
    lines = ["ov 1", f"{inst.n} {inst.d}"]
    lines.extend(" ".join(str(b) for b in x) for x in inst.X)
    lines.extend(" ".join(str(b) for b in y) for y in inst.Y)
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_ov(data: bytes | str) -> OvInstance:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    rows: list[tuple[int, str]] = []
    for no, raw in enumerate(text.split("\n"), start=1):
        stripped = raw.strip()
        if stripped:
            rows.append((no, stripped))
    if not rows or rows[0][1] != "ov 1":
        raise FormatError("malformed header", rows[0][0] if rows else 1)
    if len(rows) < 2:
        raise FormatError("missing size line")
    no, size = rows[1]
    parts = size.split()
    if len(parts) != 2:
        raise FormatError("malformed size line", no)
    try:
        n, d = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError("malformed size line", no) from None
    if len(rows) != 2 + 2 * n:
        raise FormatError(f"expected {2 * n} vector rows, found {len(rows) - 2}")
    vectors: list[Vector] = []
    for no, row in rows[2:]:
        bits = row.split()
        if len(bits) != d:
            raise FormatError(f"expected {d} entries", no)
        if any(b not in ("0", "1") for b in bits):
            raise FormatError("vector entries must be 0 or 1", no)
        vectors.append(tuple(int(b) for b in bits))
    return OvInstance(tuple(vectors[:n]), tuple(vectors[n:]))
