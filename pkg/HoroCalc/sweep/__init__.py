from ._sweep import (TableRow, LadderRow, TableSweep, LadderSweep, sweep_datum,
                     minuscule_table, smoothness_ladder)
