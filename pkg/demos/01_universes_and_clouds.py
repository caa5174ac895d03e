"""
Universes, blocks, and the cloud operator
=========================================

A universe is a finite carrier of atoms plus a partition into
indistinguishability blocks.  The cloud of a qset collects everything
indistinguishable from one of its members, which makes it a closure
operator whose closed sets are exactly the unions of blocks.
"""

from ilattice import build_universe

# Two indistinguishable m-atoms x1, x2 and one classical M-atom y.
universe = build_universe(
    [("x1", "m"), ("x2", "m"), ("y", "M")],
    [["x1", "x2"], ["y"]],
)
print("universe:", universe.digest)
print("x1 ~ x2:", universe.indistinguishable("x1", "x2"))
print("x1 ~ y: ", universe.indistinguishable("x1", "y"))
print()

# The cloud of half a block swallows the whole block; the interior keeps
# only the blocks that lie entirely inside.
a = universe.qset(["x1", "y"])
print("A          =", a)
print("cloud(A)   =", a.cloud())
print("interior(A)=", a.interior())
print("A closed?  ", a.is_closed())
print()

# Closed qsets are unions of blocks: 2 blocks -> 4 closed qsets out of 8.
print("all subsets:   ", [tuple(q) for q in universe.subsets()])
print("closed subsets:", [tuple(q) for q in universe.closed_qsets()])
print()

# On a classical universe (singleton blocks only) the cloud is the identity
# and every subset is closed.
classical = build_universe([("p", "M"), ("q", "M")], [["p"], ["q"]])
print("classical universe:", classical.digest)
print("every subset closed:", all(q.is_closed() for q in classical.subsets()))
