"""Bi-normal census of rotational surfaces from profile sign conditions.

The surfaces (f cos v, f sin v, g cosh v, g sinh v) cover every census
kind; the numerical classifier is compared with the profile predicate.
"""

# %%
import numpy as np

from lsl import families as fam
from lsl.classify import classify_point
from lsl.jets import eval_jet2

charts = [fam.rs_example_b(), fam.rs_example_c(), fam.rs_example_d(), fam.rs_line_through_origin(2.0)]

# %%
for ch in charts:
    ex = ch.extras
    agree, n, kinds = 0, 0, set()
    (u0, u1), (v0, v1) = ch.domain
    for u in np.linspace(u0, u1, 8):
        for v in np.linspace(v0, v1, 8):
            got = classify_point(eval_jet2(ch, u, v)).census.kind
            pred = fam.rs_census_predicate(ex["f"], ex["g"], ex["alpha"], ex["beta"], u)
            agree += got is pred
            kinds.add(got.value)
            n += 1
    print(f"{ch.name:<8} f={ex['f'].text:<10} g={ex['g'].text:<8} census {sorted(kinds)}  predicate agrees {agree}/{n}")

# %% the sign-bearing terms behind the predicate at one point
ch = charts[2]
(t1, _), (t2, _), (t3, _) = fam.rs_census_terms(ch.extras["f"], ch.extras["g"], 1.0, 1.0, 1.5)
print(f"T1={t1:.4g}  T2={t2:.4g}  T3={t3:.4g}  -T1*T2 > 0: {-t1 * t2 > 0}")
