# %% [markdown]
# # Normalization, scale and direction
#
# Vector and sum normalization remove a column's scale but not its offset.
# This script shows both facts, then shows that the MOORA/RAM reversal on the
# bank data depends on the direction assigned to each indicator.

# %%
import numpy as np

from mcdm_compare import (
    DecisionMatrix,
    agreement,
    builtin_bank_dataset,
    builtin_camels_reference,
    moora,
    ram,
    sum_normalize,
    vector_normalize,
)

x = DecisionMatrix.from_values([[1.0, 10.0], [2.0, 30.0], [4.0, 20.0]])
scaled = DecisionMatrix.from_values(x.values * [1000.0, 0.01])
shifted = DecisionMatrix.from_values(x.values + [50.0, 0.0])

print("vector, scaled:", np.allclose(vector_normalize(x).values, vector_normalize(scaled).values))
print("sum, scaled:   ", np.allclose(sum_normalize(x).values, sum_normalize(scaled).values))
print("sum, shifted:  ", np.allclose(sum_normalize(x).values, sum_normalize(shifted).values))
print(sum_normalize(shifted).values[:, 0].round(4), "vs", sum_normalize(x).values[:, 0].round(4))

# %% [markdown]
# After a shift the normalized values are squeezed together (all near 1/3), so
# the column counts for less when criteria are combined.
#
# On the bank data the indicators are ranks where a smaller value is better.
# Treating them as benefit criteria reverses the ranking; treating them as cost
# criteria puts it back in line with CAMELS, even though the same
# normalization is applied in both cases.

# %%
banks = builtin_bank_dataset().matrix.equal_weights()
camels = builtin_camels_reference().aligned_to(banks.alternatives)
for method in (moora, ram):
    for direction in ("benefit", "cost"):
        res = method(banks.with_policy(directions=direction))
        cmp = agreement(res.ranks, camels)
        print(f"{res.method:5s} {direction:7s} naive {cmp.spearman_naive:8.4f}  matches {cmp.exact_matches:2d}/30")
