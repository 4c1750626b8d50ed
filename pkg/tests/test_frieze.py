"""Frieze construction, propagation, bolts, symbolic entries, serialization.

The height-6 fixture rows were derived by hand from the quiddity
sequence (1,2,3,2,2,2,1,5,3) with the diamond recurrence and are frozen
here; every constructor path must reproduce them.
"""
from fractions import Fraction

import pytest

from clusterfrieze.errors import (
    DoesNotClose,
    InvalidInput,
    MalformedFrieze,
    NonInteger,
    NonPositive,
)
from clusterfrieze.frieze import (
    Frieze,
    LightningBolt,
    bolt_to_quiver,
    domain_rep,
    enumerate_bolts,
    enumerate_friezes,
    from_bolt,
    from_quiddity,
    from_triangulation,
    fundamental_domain,
    glide_partner,
    normalize_cell,
    render,
    symbolic_from_bolt,
    to_triangulation,
)
from clusterfrieze.laurent import LaurentPoly
from clusterfrieze.polygon import Triangulation, enumerate_triangulations

HEIGHT6_QUIDDITY = (1, 2, 3, 2, 2, 2, 1, 5, 3)
HEIGHT6_ROWS = (
    (2, 3, 2, 2, 2, 1, 5, 3, 1),
    (5, 5, 3, 3, 1, 4, 14, 2, 1),
    (8, 7, 4, 1, 3, 11, 9, 1, 2),
    (11, 9, 1, 2, 8, 7, 4, 1, 3),
    (14, 2, 1, 5, 5, 3, 3, 1, 4),
    (3, 1, 2, 3, 2, 2, 2, 1, 5),
)
HEIGHT6_TRIANGULATION = Triangulation(9, [(2, 9), (3, 9), (3, 8), (4, 8), (5, 8), (6, 8)])
HEIGHT6_BOLT = LightningBolt([(6, 8), (5, 8), (4, 8), (3, 8), (3, 9), (2, 9)])

NOBOLT_QUIDDITY = (1, 3, 1, 3, 1, 3)
NOBOLT_ROWS = (
    (3, 1, 3, 1, 3, 1),
    (2, 2, 2, 2, 2, 2),
    (3, 1, 3, 1, 3, 1),
)
NOBOLT_TRIANGULATION = Triangulation(6, [(2, 6), (2, 4), (4, 6)])


def test_height6_fixture():
    f = from_quiddity(HEIGHT6_QUIDDITY)
    assert f.n == 6 and f.N == 9
    assert f.rows == HEIGHT6_ROWS
    assert f.quiddity() == HEIGHT6_QUIDDITY
    # 14 sits in rows 2 and 5 (and nowhere else)
    assert 14 in f.row(2) and 14 in f.row(5)
    assert [r for r in range(1, 7) if 14 in f.row(r)] == [2, 5]


def test_period_and_glide():
    f = from_quiddity(HEIGHT6_QUIDDITY)
    for a in range(1, 10):
        for d in range(0, 10):
            assert f.m(a, a + d) == f.m(a + 9, a + d + 9)
        for d in range(2, 8):
            assert f.m(a, a + d) == f.m(a + d, a + 9)
    assert f.m(1, 1) == 0 and f.m(1, 10) == 0
    assert f.m(1, 2) == 1 and f.m(1, 9) == 1
    with pytest.raises(InvalidInput):
        f.m(1, 12)
    with pytest.raises(InvalidInput):
        f.row(7)


def test_nobolt_fixture():
    f = from_quiddity(NOBOLT_QUIDDITY)
    assert f.rows == NOBOLT_ROWS
    assert f.row(2) == (2,) * 6


def test_from_quiddity_errors():
    with pytest.raises(NonPositive):
        from_quiddity((1, 1, 1, 1))
    with pytest.raises(NonPositive):
        from_quiddity((1, 1, 2, 2, 2))
    with pytest.raises(DoesNotClose):
        from_quiddity((2, 2, 2, 2))
    with pytest.raises(InvalidInput):
        from_quiddity((1, 2, 1))
    with pytest.raises(InvalidInput):
        from_quiddity((2, 0, 2, 2))
    with pytest.raises(InvalidInput):
        from_quiddity((2, 1.5, 2, 2))


def test_from_triangulation_examples():
    f = from_triangulation(HEIGHT6_TRIANGULATION)
    assert f.rows == HEIGHT6_ROWS
    assert all(f.m(a, b) == 1 for a, b in HEIGHT6_TRIANGULATION.diagonals)
    assert from_triangulation(NOBOLT_TRIANGULATION).rows == NOBOLT_ROWS
    sq = from_triangulation(Triangulation(4, [(1, 3)]))
    assert sq.quiddity() == (2, 1, 2, 1)
    assert sq.row(1) == (1, 2, 1, 2)
    with pytest.raises(InvalidInput):
        from_triangulation(Triangulation(3, []))


def test_to_triangulation_inverts():
    assert to_triangulation(from_quiddity(HEIGHT6_QUIDDITY)) == HEIGHT6_TRIANGULATION
    assert to_triangulation(from_quiddity(NOBOLT_QUIDDITY)) == NOBOLT_TRIANGULATION
    for t in enumerate_triangulations(6):
        assert to_triangulation(from_triangulation(t)) == t


def test_bolt_validation():
    with pytest.raises(InvalidInput):
        LightningBolt([])
    with pytest.raises(InvalidInput):
        LightningBolt([(1, 4)])  # wrong row-1 offset
    with pytest.raises(InvalidInput):
        LightningBolt([(1, 3), (2, 4)])  # not in one diamond
    with pytest.raises(InvalidInput):
        LightningBolt([(1, 3), (1, 5)])  # skips a row
    b = LightningBolt([(1, 3), (0, 3), (0, 4)])
    assert b.n == 3
    assert LightningBolt.from_json_obj(b.to_json_obj()) == b


def test_bolt_counts():
    for n, count in [(1, 4), (2, 10), (3, 24), (4, 56)]:
        bolts = enumerate_bolts(n)
        assert len(bolts) == count
        assert len(set(bolts)) == count


def test_circled_bolt_regenerates_height6():
    f = from_bolt(HEIGHT6_BOLT, (1, 1, 1, 1, 1, 1))
    assert f.rows == HEIGHT6_ROWS
    # the bolt's cells are exactly the triangulation's diagonals
    assert set(HEIGHT6_BOLT.cells) == set(HEIGHT6_TRIANGULATION.diagonals)


def test_all_ones_bolts_give_triangulation_friezes():
    for n in (1, 2, 3):
        for bolt in enumerate_bolts(n):
            f = from_bolt(bolt, (1,) * n)
            diagonals = set()
            for cell in bolt.cells:
                a, b = normalize_cell(n, cell)
                diagonals.add((a, b) if b <= n + 3 else (b - n - 3, a))
            t = Triangulation(n + 3, diagonals)
            assert f == from_triangulation(t)
            assert to_triangulation(f) == t


def test_no_bolt_generates_nobolt_frieze():
    target = from_quiddity(NOBOLT_QUIDDITY)
    assert all(
        from_bolt(bolt, (1, 1, 1)) != target for bolt in enumerate_bolts(3)
    )


def test_from_bolt_reconstructs_any_frieze():
    for f in enumerate_friezes(2):
        for bolt in enumerate_bolts(2):
            values = tuple(f.m(a, b) for a, b in bolt.cells)
            assert from_bolt(bolt, values) == f


def test_from_bolt_errors():
    with pytest.raises(NonInteger):
        from_bolt(LightningBolt([(1, 3)]), (3,))
    with pytest.raises(InvalidInput):
        from_bolt(LightningBolt([(1, 3)]), (1, 1))
    with pytest.raises(InvalidInput):
        from_bolt(LightningBolt([(1, 3)]), (0,))


def test_symbolic_height_one_and_two():
    x1 = LaurentPoly.gen(1, 0)
    two_over_x1 = LaurentPoly.monomial(1, (-1,), 2)
    sym = symbolic_from_bolt(LightningBolt([(1, 3)]))
    assert sym == {(1, 3): x1, (2, 4): two_over_x1}

    y1 = LaurentPoly.gen(2, 0)
    y2 = LaurentPoly.gen(2, 1)
    sym2 = symbolic_from_bolt(LightningBolt([(1, 3), (1, 4)]))
    assert set(sym2) == set(fundamental_domain(2))
    e = lambda *terms: sum(
        (LaurentPoly.monomial(2, ex, c) for c, ex in terms), LaurentPoly.zero(2)
    )
    assert sym2[(1, 3)] == y1
    assert sym2[(1, 4)] == y2
    assert sym2[(2, 4)] == e((1, (-1, 0)), (1, (-1, 1)))
    assert sym2[(2, 5)] == e((1, (-1, -1)), (1, (0, -1)), (1, (-1, 0)))
    assert sym2[(3, 5)] == e((1, (0, -1)), (1, (1, -1)))


def test_symbolic_specializes_to_numeric():
    for n in (1, 2, 3):
        ones = tuple(Fraction(1) for _ in range(n))
        for bolt in enumerate_bolts(n):
            f = from_bolt(bolt, (1,) * n)
            sym = symbolic_from_bolt(bolt)
            for (a, b), poly in sym.items():
                assert poly.evaluate(ones) == Fraction(f.m(a, b))


def test_bolt_to_quiver():
    # zig-zag bolt: left at row 3, right elsewhere, so 3 is a source
    zig = LightningBolt([(9, 11), (9, 12), (8, 12), (8, 13), (8, 14), (8, 15)])
    assert set(bolt_to_quiver(zig).arrows()) == {
        (1, 2, 1), (3, 2, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1),
    }
    straight = LightningBolt([(1, 3), (1, 4), (1, 5)])
    assert set(bolt_to_quiver(straight).arrows()) == {(1, 2, 1), (2, 3, 1)}
    shapes = {
        tuple(bolt_to_quiver(b).arrows()) for b in enumerate_bolts(2)
    }
    assert shapes == {((1, 2, 1),), ((2, 1, 1),)}


def test_enumerate_friezes_counts():
    for n, count in [(1, 2), (2, 5), (3, 14)]:
        fs = enumerate_friezes(n)
        assert len(fs) == count
        assert len(set(fs)) == count
    assert from_quiddity(NOBOLT_QUIDDITY) in enumerate_friezes(3)


def test_glide_helpers():
    for n in (1, 2, 3, 6):
        N = n + 3
        cells = [(a, a + d) for a in range(1, N + 1) for d in range(2, n + 2)]
        assert len(fundamental_domain(n)) == n * (n + 3) // 2
        for c in cells:
            p = glide_partner(n, c)
            assert p != normalize_cell(n, c)
            assert glide_partner(n, p) == normalize_cell(n, c)
            assert domain_rep(n, c) == domain_rep(n, p)
            assert domain_rep(n, domain_rep(n, c)) == domain_rep(n, c)


def test_render_layout():
    f = from_quiddity(HEIGHT6_QUIDDITY)
    text = render(f)
    lines = text.split("\n")
    assert len(lines) == 8
    assert lines[0].split() == ["1"] * 9
    assert lines[-1].split() == ["1"] * 9
    for d in range(2, 8):
        assert lines[d - 1].split() == [str(f.m(a, a + d)) for a in range(1, 10)]
    # successive rows are offset by half a cell
    i0 = lines[0].index("1")
    i1 = lines[1].index(str(f.m(1, 3)))
    assert i1 > i0
    assert render(f) == text
    assert render(f, width=3).split("\n")[1].split() == ["2", "3", "2"]
    with pytest.raises(InvalidInput):
        render(f, width=0)


def test_frieze_json_round_trip():
    for n in (1, 2, 3):
        for f in enumerate_friezes(n):
            assert Frieze.from_json_obj(f.to_json_obj()) == f
    f = from_quiddity(HEIGHT6_QUIDDITY)
    obj = f.to_json_obj()
    assert obj["n"] == 6
    assert len(obj["domain"]) == 27
    assert Frieze.from_json_obj(obj) == f


def test_frieze_json_rejects_malformed():
    f = from_quiddity(NOBOLT_QUIDDITY)
    good = f.to_json_obj()
    for bad in [
        [],
        {"n": 3},
        {"domain": good["domain"]},
        {"n": 3, "domain": good["domain"][:-1]},  # incomplete
        {"n": 3, "domain": good["domain"] + [good["domain"][0]]},  # duplicate
        {"n": 3, "domain": [[a, b, "x"] for a, b, _ in good["domain"]]},
    ]:
        with pytest.raises(InvalidInput):
            Frieze.from_json_obj(bad)
    # structurally complete but diamond-violating values
    tampered = {
        "n": 3,
        "domain": [[a, b, v + (1 if (a, b) == (1, 3) else 0)] for a, b, v in good["domain"]],
    }
    with pytest.raises(MalformedFrieze):
        Frieze.from_json_obj(tampered)


def test_frieze_constructor_validation():
    with pytest.raises(MalformedFrieze):
        Frieze([])
    with pytest.raises(MalformedFrieze):
        Frieze([(1, 2, 1)])  # wrong period
    with pytest.raises(MalformedFrieze):
        Frieze([(1, 2, 1, 2), (1, 1, 1, 1)])  # too many rows for period
    with pytest.raises(MalformedFrieze):
        Frieze([(0, 2, 0, 2)])  # nonpositive
    with pytest.raises(MalformedFrieze):
        Frieze([(2, 2, 2, 2)])  # diamond rule fails
