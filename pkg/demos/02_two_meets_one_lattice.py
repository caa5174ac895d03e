"""
Two meets, one lattice
======================

The join of two qsets is the union of their clouds and the complement of a
qset is the carrier minus its cloud; neither is ambiguous.  The meet has two
readings that agree on closed qsets and split apart elsewhere:

    literal mode:  A meet B = cloud(A intersect B)
    closure mode:  A meet B = cloud(A) intersect cloud(B)

This script walks the divergence on the smallest universe that shows it.
"""

from ilattice import OpMode, join, leq, leq1, meet, ortho, orthogonal, build_universe

universe = build_universe([("x1", "m"), ("x2", "m")], [["x1", "x2"]])
a = universe.qset(["x1"])
b = universe.qset(["x2"])

# x1 and x2 are indistinguishable, so each one's cloud is the whole block.
print("cloud(A) =", a.cloud(), "  cloud(B) =", b.cloud())

# The two meets disagree: the literal meet intersects below the clouds and
# finds nothing, the closure meet intersects the clouds and finds everything.
print("A meet B (literal):", meet(a, b, OpMode.LITERAL))
print("A meet B (closure):", meet(a, b, OpMode.CLOSURE))
print("A join B:          ", join(a, b))
print()

# The complement of half a block is empty: nothing in the universe is
# distinguishable from x1.  Applying it twice returns the cloud, not A.
print("ortho(A)       =", ortho(a))
print("ortho(ortho(A))=", ortho(ortho(a)), " (the cloud of A, not A itself)")
print()

# The order compares clouds, so two halves of one block sit below each
# other without being equal: the order is a preorder, antisymmetric only
# up to clouds.
print("A <= B and B <= A:", leq(a, b), leq(b, a), " but A == B:", a == b)

# The meet-based order candidate agrees with the join-based order exactly
# in closure mode; in literal mode it diverges on this very pair.
print("leq1 literal:", leq1(a, b, OpMode.LITERAL), " leq1 closure:", leq1(a, b, OpMode.CLOSURE))
print()

# Orthogonality: no member of A is indistinguishable from a member of B.
mixed = build_universe(
    [("x1", "m"), ("x2", "m"), ("y", "M")], [["x1", "x2"], ["y"]]
)
print("[x1] orthogonal to [y]: ", orthogonal(mixed.qset(["x1"]), mixed.qset(["y"])))
print("[x1] orthogonal to [x2]:", orthogonal(mixed.qset(["x1"]), mixed.qset(["x2"])))
