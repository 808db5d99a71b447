"""Hyperbolic revolution surfaces are pseudo-umbilic.

Two bi-normal fields B1, B2 exist everywhere, their asymptotic directions
are orthogonal, and the difference B1 - B2 is an umbilic normal.
"""

# %%
import numpy as np

from lsl import families as fam
from lsl.classify import classify_point, classify_region
from lsl.jets import eval_jet2
from lsl.minkowski import mink_dot

chart = fam.default_rh()
f, g, rho = chart.extras["f"], chart.extras["g"], chart.extras["rho"]
print("profiles:", f.text, "|", g.text, "|", rho.text)

# %%
u, v = 0.6, 0.3
pc = classify_point(eval_jet2(chart, u, v))
a1, a2 = (a.vector for a in pc.asymptotics)
print("census:", pc.census.kind.value)
print("<a1, a2> =", mink_dot(a1, a2))
print("normal curvature:", pc.normal_curvature)

# %% the witness direction against the closed form B1 - B2
_, _, nu = fam.rh_closed_form_fields(f, g, rho, u, v)
w = pc.frame.vector(pc.witness.direction.lam, pc.witness.direction.mu)
print("|cos(witness, B1 - B2)| =", abs(w @ nu) / (np.linalg.norm(w) * np.linalg.norm(nu)))
print("umbilic factor k =", pc.witness.k)

# %%
region = classify_region(chart, (16, 16))
print({k: v["value"] for k, v in region.verdicts.items()})
