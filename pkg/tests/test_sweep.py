from HoroCalc.sweep import LadderSweep, TableSweep, minuscule_table, smoothness_ladder, sweep_datum
from HoroCalc.fan import validate_fan
from HoroCalc.roots import SimpleType


def test_minuscule_table():
    rows = minuscule_table(8)
    assert all(row.holds for row in rows)
    e6 = {row.alpha: row for row in rows if row.type == 'E6'}
    assert {a for a, row in e6.items() if row.minuscule} == {1, 6}
    assert e6[1].a_alpha == e6[1].bound == 12
    assert all(not row.minuscule and row.a_alpha < row.bound for row in rows if row.type in ('E8', 'F4', 'G2'))


def test_sweep_datum():
    d = sweep_datum(SimpleType('C', 3), [2, 3], [1])
    assert d.rank == 1 and validate_fan(d) == []
    d = sweep_datum(SimpleType('A', 3), [], [1, 2, 3])
    assert d.rank == 3 and d.fan.maximal_cones[0].colors == {1, 2, 3}
    assert validate_fan(d) == []


def test_smoothness_ladder():
    rows = smoothness_ladder(5)
    assert rows and all(row.agree for row in rows)
    pattern = {(row.type, row.I, row.F): row.pattern for row in rows}
    assert pattern[("C3", (2, 3), (1,))] and pattern[("B2", (1,), (2,))]
    assert not pattern[("B3", (1, 2), (3,))]
    assert not pattern[("A3", (), (1, 2, 3))]
    # toroidal: no color, always smooth
    assert pattern[("B3", (1,), ())]


def test_sweep_engines_take_overrides():
    sweep = LadderSweep(max_rank=2, progress=False)
    assert sweep.cfg.sweep.max_rank == 2
    rows = sweep.rows()
    assert {row.type for row in rows} == {'A1', 'A2', 'B2', 'G2'}
    assert TableSweep(table_max_rank=2, progress=False).rows()[0].type == 'A1'
