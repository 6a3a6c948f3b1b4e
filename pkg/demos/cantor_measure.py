"""Split a Cantor-type block into perfect kernel and scattered part, then put a measure on it."""
from stflow import measures, spacetime
from stflow.grid import Grid

g = Grid.square(1.0, 1 / 81)
block = spacetime.cantor_block(g, 3, (-0.5, 0.5), (-0.1, 0.1))
cells = block.cells() | {(3, 3), (3, 7)}
cb = spacetime.cantor_bendixson(cells)
print(f"cells={len(cells)} perfect={len(cb.perfect)} scattered={sorted(cb.scattered)} rounds={cb.rounds}")
mu = measures.measure_on_perfect_set(g, cb.perfect, 1.0)
print(f"total mass {mu.total:.12f} on {len(cb.perfect)} cells")
