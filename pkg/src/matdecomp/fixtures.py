"""The named fixture corpus used by the verification suites and tests:
all small uniform matroids, a collection of graphic matroids, and seeded
random GF(2) column matroids.
"""

from __future__ import annotations

import random

from .kernel import Matroid, graphic, linear_gf2, uniform

GF2_SEED = 20260811
GF2_COUNT = 25


def k4_minus_edge() -> Matroid:
    # edges 0=ab, 1=bc, 2=ca, 3=cd, 4=da
    return graphic("abcd", [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "a")])


def graphic_fixtures() -> list[tuple[str, Matroid]]:
    out = []
    for n in range(3, 7):
        vertices = list(range(n))
        edges = [(i, (i + 1) % n) for i in range(n)]
        out.append((f"cycle{n}", graphic(vertices, edges)))
    out.append(("k4", graphic("abcd", [
        ("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")])))
    out.append(("k4_minus_e", k4_minus_edge()))
    out.append(("two_triangles", graphic("abcd", [
        ("a", "b"), ("b", "c"), ("c", "a"), ("b", "d"), ("d", "a")])))
    out.append(("triangle_square", graphic("abcde", [
        ("a", "b"), ("b", "c"), ("c", "a"), ("b", "d"), ("d", "e"), ("e", "a")])))
    out.append(("wheel4", graphic("habcd", [
        ("h", "a"), ("h", "b"), ("h", "c"), ("h", "d"),
        ("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])))
    out.append(("theta", graphic("uvxyz", [
        ("u", "x"), ("x", "v"), ("u", "y"), ("y", "v"), ("u", "z"), ("z", "v")])))
    return out


def uniform_fixtures(max_n: int = 7) -> list[tuple[str, Matroid]]:
    out = []
    for n in range(1, max_n + 1):
        for r in range(0, n + 1):
            out.append((f"u{r}_{n}", uniform(r, n)))
    return out


def gf2_fixtures(count: int = GF2_COUNT, seed: int = GF2_SEED) -> list[tuple[str, Matroid]]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        cols = rng.randint(4, 9)
        rows = rng.randint(2, 5)
        columns = []
        for _ in range(cols):
            col = [rng.randint(0, 1) for _ in range(rows)]
            if not any(col):  # avoid loops; they disconnect the matroid
                col[rng.randrange(rows)] = 1
            columns.append(col)
        out.append((f"gf2_rand_{i:02d}", linear_gf2(columns)))
    return out


def fixture_corpus() -> list[tuple[str, Matroid]]:
    return uniform_fixtures() + graphic_fixtures() + gf2_fixtures()


def connected_fixtures(min_size: int = 0, max_size: int | None = None) -> list[tuple[str, Matroid]]:
    out = []
    for name, m in fixture_corpus():
        if m.n < min_size:
            continue
        if max_size is not None and m.n > max_size:
            continue
        if m.is_connected():
            out.append((name, m))
    return out
