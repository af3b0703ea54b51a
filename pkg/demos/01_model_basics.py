"""
The requirement-selection model, end to end on a four-requirement toy
=====================================================================

A release plan picks customers, every picked customer drags in the
transitive closure of the requirements they asked for, and the union of
those closures has to fit the budget.  This walk-through builds the
smallest instance that still shows all the moving parts.
"""

from nrpbench import budget, closure, evaluate, exact, make_instance

# Four requirements with costs 5, 3, 4, 2.  Requirement 1 is a
# prerequisite of 2, and 3 is a prerequisite of 4.  Three customers:
#   customer 1 pays 10 and wants requirement 2
#   customer 2 pays  8 and wants requirement 3
#   customer 3 pays  6 and wants requirement 4
toy = make_instance(
    costs=[5, 3, 4, 2],
    edges=[(1, 2), (3, 4)],
    customers=[(10, [2]), (8, [3]), (6, [4])],
)
print(toy)
print("total requirement cost:", toy.total_cost)

# Closures: customer 1 asks for requirement 2, which silently buys its
# prerequisite 1 too.
print()
for c in (1, 2, 3):
    wants = list(toy.customers[c - 1].requests)
    print(f"customer {c} requests {wants} -> builds {sorted(closure(toy, c))}")

# Evaluate a selection: customers 2 and 3 share the prerequisite 3, so
# the union {3, 4} costs 6 rather than 4 + 6.
print()
sol = evaluate(toy, [2, 3])
print("pick customers {2, 3}:", sol)
print("  covered requirements:", sorted(sol.covered))
print("  profit", sol.profit, "for cost", sol.cost)

# Budgets are a fraction of the total requirement cost, floored.
print()
for ratio in ("0.3", "0.5", "5/7", "1.0"):
    print(f"budget at ratio {ratio:>4}:", budget(toy, ratio))

# At budget 10 the instance has a trap: {customer 1} costs 8 and pays
# 10, and no single add or swap improves it -- but {2, 3} pays 14.
print()
b = budget(toy, "5/7")
best = exact(toy, b)
print(f"exact optimum at budget {b}: customers {sorted(best.selected)}",
      f"profit {best.profit} cost {best.cost}")
greedy_trap = evaluate(toy, [1])
print(f"the local trap {sorted(greedy_trap.selected)}: profit",
      greedy_trap.profit, "cost", greedy_trap.cost)
