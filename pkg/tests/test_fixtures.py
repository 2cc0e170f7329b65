from matdecomp.fixtures import (
    connected_fixtures,
    fixture_corpus,
    gf2_fixtures,
    graphic_fixtures,
    uniform_fixtures,
)


def test_corpus_composition():
    names = [name for name, _ in fixture_corpus()]
    assert len(names) == len(set(names))
    assert sum(1 for n in names if n.startswith("gf2_rand_")) == 25
    assert {"k4", "k4_minus_e", "two_triangles", "triangle_square",
            "wheel4", "theta"} <= set(names)
    assert {"cycle3", "cycle4", "cycle5", "cycle6"} <= set(names)


def test_uniform_fixtures_cover_all_small_ranks():
    pairs = {name for name, _ in uniform_fixtures()}
    assert "u0_1" in pairs and "u7_7" in pairs
    assert len(pairs) == sum(n + 1 for n in range(1, 8))


def test_gf2_fixtures_deterministic_and_bounded():
    first = gf2_fixtures()
    second = gf2_fixtures()
    assert all(a[1] == b[1] for a, b in zip(first, second))
    assert all(m.n <= 9 for _, m in first)
    assert all(not m.loops() for _, m in first)


def test_graphic_fixture_shapes():
    by_name = dict(graphic_fixtures())
    assert by_name["cycle5"].circuits == (frozenset(range(5)),)
    assert by_name["k4"].n == 6 and by_name["wheel4"].n == 8
    assert by_name["theta"].n == 6 and len(by_name["theta"].circuits) == 3


def test_connected_filter():
    for name, m in connected_fixtures(min_size=3, max_size=7):
        assert m.is_connected() and 3 <= m.n <= 7
