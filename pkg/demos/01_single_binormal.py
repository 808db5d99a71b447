"""A surface with exactly one bi-normal direction at every point.

X(u, v) = ((1+v) cos u, (1+v) sin u, sinh u, cosh u) carries the unit
timelike normal (0, 0, sinh u, cosh u), whose second form is degenerate.
Run with ``python demos/01_single_binormal.py``.
"""

# %%
import numpy as np

from lsl import families as fam
from lsl.classify import classify_point, classify_region
from lsl.forms import first_form, second_form, shape_operator
from lsl.jets import eval_jet2

chart = fam.make_example_1_1()
jet = eval_jet2(chart, 0.3, 0.2)
g = first_form(jet)
print("first form (g11, g12, g22):", g.g11, g.g12, g.g22)

# %% the quadratic det(lam b_s + mu b_t) has a double root
pc = classify_point(jet)
print("census:", pc.census.kind.value, "coeffs:", np.round(pc.census.coeffs, 6))
root = pc.root_vectors[0]
root = root / np.sqrt(-(root[:3] @ root[:3] - root[3] ** 2))
print("bi-normal (unit):", np.round(root * np.sign(root[3]), 12))
print("closed form      :", chart.extras["binormal"](0.3, 0.2))

# %% shape operator of the closed-form normal: one zero eigenvalue
B = chart.extras["binormal"](0.3, 0.2)
S = shape_operator(g, second_form(jet, B))
print("S^B =\n", np.round(S, 6))

# %% whole-chart sweep
region = classify_region(chart, (16, 16))
print("census histogram:", region.census_histogram)
for name, verdict in region.verdicts.items():
    print(f"  {name:<15} {verdict['value']}")
