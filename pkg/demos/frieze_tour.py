"""
A first tour of frieze patterns
===============================

Build a frieze from its quiddity row, look at the strip, and check the
symmetries that make the infinite pattern finite data.
"""

from clusterfrieze.frieze import from_quiddity, render, to_triangulation

# The quiddity row is the first nontrivial row of the pattern: entry i
# counts the triangles at vertex i in the matching polygon triangulation.
quiddity = (1, 2, 3, 2, 2, 2, 1, 5, 3)
f = from_quiddity(quiddity)

print(f"height n = {f.n}, polygon size N = {f.N}")
print()
print(render(f))

# Every value repeats with period N along its row ...
assert f.m(1, 3) == f.m(1 + f.N, 3 + f.N)

# ... and the glide reflection pairs cell (a, b) with cell (b, a + N),
# so row r equals row n + 1 - r shifted.  The whole strip is determined
# by a fundamental domain of n(n + 3)/2 cells.
for a in range(1, f.N + 1):
    for b in range(a + 2, a + f.n + 2):
        assert f.m(a, b) == f.m(b, a + f.N)

# The entries are not arbitrary: every 2x2 diamond has determinant 1.
a, b = 2, 5
lhs = f.m(a, b) * f.m(a + 1, b + 1)
rhs = f.m(a + 1, b) * f.m(a, b + 1) + 1
print(f"diamond at ({a},{b}): {lhs} == {rhs}")

# The 1s in the first row locate the ears of a polygon triangulation;
# cutting ears recovers it.
t = to_triangulation(f)
print(f"triangulation of the {t.N}-gon: {sorted(t.diagonals)}")
