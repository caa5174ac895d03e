"""
A propositional logic over the lattice
======================================

Formulas are built from & | ~ -> <-> and evaluated compositionally into the
lattice: conjunction through the meet, disjunction through the join,
negation through the orthocomplement, and the conditional through its
expansion  a -> b  =  b | (~a & ~b).  A formula is true under a valuation
when it denotes the whole carrier.

Sweeps quantify valuations over a domain per atom.  Over closed qsets the
logic is classical and the implication conditions are theorems; over all
subsets, modus ponens itself develops a counterexample.
"""

from ilattice import (
    OpMode,
    Valuation,
    build_universe,
    check_implication_conditions,
    cn,
    deduction_theorem_probe,
    eval_formula,
    generate_formulas,
    is_valid,
    parse_formula,
    render,
    semantic_consequence,
    universe_from_partition,
)

universe = build_universe(
    [("x1", "m"), ("x2", "m"), ("y", "M")], [["x1", "x2"], ["y"]]
)

# Pointwise evaluation.  Double negation returns the cloud, so an open qset
# drifts under it; contradiction and excluded middle behave classically.
value = universe.qset(["x1"])
v = Valuation(universe, {"a": value})
for text in ("a & ~a", "a | ~a", "~~a"):
    formula = parse_formula(text)
    print(f"v({text:7}) = {eval_formula(formula, v, OpMode.LITERAL)}")
print()

# Identity is valid over every domain and mode.
report = is_valid(universe, parse_formula("a -> a"), mode=OpMode.LITERAL)
print("a -> a valid:", report.valid, f"({report.valuations_checked} valuations)")

# Modus ponens: a consequence over closed valuations, refuted over all
# subsets, where v(a) = U can force only cloud(v(b)) = U and not v(b) = U.
gamma = [parse_formula("a"), parse_formula("a -> b")]
beta = parse_formula("b")
closed = semantic_consequence(universe, gamma, beta)
unrestricted = semantic_consequence(universe, gamma, beta, closed_valuations=False)
print("modus ponens over closed valuations:", closed.verdict)
print("modus ponens over all subsets:      ", unrestricted.verdict,
      "witness:", unrestricted.witness)
print()

# The three implication conditions, audited on both domains.
for domain in (True, False):
    reports = check_implication_conditions(
        universe, mode=OpMode.LITERAL, closed_valuations=domain
    )
    name = "closed" if domain else "all"
    verdicts = ", ".join(f"{r.condition}={'ok' if r.holds else 'FAILS'}" for r in reports)
    print(f"conditions over {name:6} valuations: {verdicts}")
print()

# The consequence operator over a bounded formula universe.  Its fixed
# points are the theories; the closure of the empty set already contains
# every instance of identity.
f0 = generate_formulas(["a", "b"], 1)
theorems = cn(universe, [], f0)
print(f"cn over {len(f0)} formulas: {len(theorems)} theorems of the empty theory, e.g.",
      ", ".join(render(t) for t in theorems[:4]))
print()

# The deduction-theorem probe reports an outcome without asserting one.
# Over closed valuations nothing turns up; over all subsets the one-block
# universe yields a concrete failure of the deduction theorem.
f2 = generate_formulas(["a", "b"], 2)
for blocks in ([(1,), (2,)], [(1, 2)]):
    probe_universe = universe_from_partition(blocks)
    outcome = deduction_theorem_probe(probe_universe, f2)
    verdict = "witness found" if outcome.found else "none found"
    print(f"deduction probe on {probe_universe.digest} (closed): {verdict} "
          f"({outcome.triples_checked} triples)")

unrestricted = deduction_theorem_probe(
    universe_from_partition([(1, 2)]), f2, closed_valuations=False
)
if unrestricted.found:
    print("deduction probe over all subsets: witness found:")
    print(f"  gamma = {[render(g) for g in unrestricted.gamma]}")
    print(f"  alpha = {render(unrestricted.alpha)}, beta = {render(unrestricted.beta)}")
    print("  gamma + alpha entail beta, but gamma does not entail alpha -> beta")
else:
    print("deduction probe over all subsets: none found")
