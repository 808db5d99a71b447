"""Ruled surfaces: one bi-normal field, or every normal when developable.

For X(t, s) = alpha(t) + s W(t) the bi-normal is the Minkowski cross
product of alpha', W and W'; when those are dependent the surface is
developable and every normal direction is bi-normal.
"""

# %%
import numpy as np

from lsl import families as fam
from lsl.classify import classify_point
from lsl.forms import gauss_curvature, normal_frame
from lsl.jets import eval_jet2

rng = np.random.default_rng(1)
generic = fam.random_ruled(rng)
alpha, W = generic.extras["alpha"], generic.extras["W"]

# %% census One, root parallel to alpha' ^ W ^ W'
for t in np.linspace(*generic.domain[0], 4):
    pc = classify_point(eval_jet2(generic, t, 0.25))
    nu = pc.root_vectors[0]
    closed = fam.ruled_binormal_closed_form(alpha, W, t)
    cos = abs(nu @ closed) / (np.linalg.norm(nu) * np.linalg.norm(closed))
    print(f"t={t:5.2f}  census {pc.census.kind.value:<4}  |cos| to closed form {cos:.15f}")

# %% a cone over a de Sitter curve: developable
cone = fam.random_ruled(rng, developable=True)
for t in np.linspace(*cone.domain[0], 4):
    jet = eval_jet2(cone, t, 0.25)
    pc = classify_point(jet)
    K = gauss_curvature(jet, normal_frame(jet))
    dep = fam.ruled_dependency_test(cone.extras["alpha"], cone.extras["W"], t)
    print(f"t={t:5.2f}  census {pc.census.kind.value:<4}  K={K:+.2e}  dependent={dep}")
