# %% [markdown]
# # Ties
#
# Rank-valued data is full of ties, and the tie rule changes results. Three
# policies are available: competition (1, 2, 2, 4), ordinal (input order
# breaks ties) and average (1, 2.5, 2.5, 4).

# %%
from fractions import Fraction

from mcdm_compare import TiePolicy, builtin_bank_dataset, fuca, rank_scores

scores = [3.0, 1.0, 1.0, 2.0]
for policy in TiePolicy:
    print(f"{policy.value:12s}", rank_scores(scores, "ascending", policy).tolist())

# %% [markdown]
# FUCA scores on the bank data are row means of six integer ranks, so several
# banks share a score exactly: ABB and NAM A both sum to 91, KLB and VIETBANK
# both to 101.

# %%
banks = builtin_bank_dataset().matrix.with_policy(directions="cost").equal_weights()
for policy in TiePolicy:
    res = fuca(banks, policy=policy)
    print(f"{policy.value:12s}", {n: res.rank_of(n) for n in ("ABB", "NAM A", "KLB", "VIETBANK")})

# %% [markdown]
# Summed naively in floating point, 91 * (1/6) does not always come out the
# same: the result depends on which terms are added first. The published
# FUCA column splits exactly these two pairs, which is what that noise would
# produce. The engine accumulates the weighted sum exactly, so the pairs tie.

# %%
w = 1 / 6
for name in ("ABB", "NAM A", "KLB", "VIETBANK"):
    row = banks.values[banks.alternatives.index(name)]
    naive = sum(float(r) * w for r in row)
    exact = float(sum(Fraction(r) * Fraction(w) for r in row))
    print(f"{name:9s} naive {naive!r:22s} exact {exact!r}")
