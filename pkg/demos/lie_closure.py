"""
How far the truncated pair is from Heisenberg
=============================================

The Lie algebra generated by the two truncated matrices D and X is as
large as it can be: all traceless matrices, of dimension (p+1)^2 - 1.
The bracket ladder below produces the corner matrix units one at a time.
"""

from focal import operators
from focal.formats import rows_to_text

for p in range(1, 7):
    ctx = operators.make_context(p)
    dim = operators.lie_closure_dimension(ctx)
    print(f"p={p}: generated dimension {dim}, (p+1)^2 - 1 = {(p + 1) ** 2 - 1}")

# Repeated brackets with X walk along the bottom row.
ctx = operators.make_context(3)
ladder = operators.theorem_ladder(ctx)
for k in range(2, 5):
    print(f"xi_{k} =")
    print(rows_to_text(ladder["xi"][k].rows))
print(operators.check_theorem_ladder(ctx).line())
