"""
Lightning bolts and the all-ones phenomenon
===========================================

A lightning bolt is a staircase of cells, one per row, each step moving
one cell left or one cell down-right.  Prescribing values on a bolt
determines the whole strip -- and prescribing all ones always yields a
positive integer frieze.
"""

from clusterfrieze.frieze import (
    LightningBolt,
    enumerate_bolts,
    from_bolt,
    from_quiddity,
    render,
)

# The bolt below zigzags through the height-6 strip.  Filling its six
# cells with 1 regenerates the same frieze as the quiddity row used in
# frieze_tour.py.
bolt = LightningBolt([(6, 8), (5, 8), (4, 8), (3, 8), (3, 9), (2, 9)])
f = from_bolt(bolt, [1, 1, 1, 1, 1, 1])
assert f == from_quiddity((1, 2, 3, 2, 2, 2, 1, 5, 3))
print("all-ones bolt regenerates the height-6 example:")
print(render(f))

# This is not luck.  Any bolt, in any height, filled with ones gives a
# frieze with positive integer entries.
for n in range(1, 5):
    bolts = enumerate_bolts(n)
    friezes = {from_bolt(b, [1] * n) for b in bolts}
    print(f"n={n}: {len(bolts)} bolts, {len(friezes)} distinct all-ones friezes")

# The converse fails: some friezes contain no all-ones bolt at all.
# The smallest is the height-3 pattern whose middle row is constant 2.
g = from_quiddity((1, 3, 1, 3, 1, 3))
print()
print("a frieze no all-ones bolt can reach:")
print(render(g))
hits = [b for b in enumerate_bolts(3) if from_bolt(b, [1, 1, 1]) == g]
print(f"bolts generating it with all ones: {len(hits)}")
