# %% [markdown]
# # Ranking your own alternatives
#
# A small supplier-selection matrix with mixed criteria: price and lead time
# are costs, quality and capacity are benefits. Load it from CSV, set the
# policy, run every method and compare the rankings with each other.

# %%
import io

from mcdm_compare import METHODS, Criterion, agreement, load_matrix_csv

csv_text = """alternative,price,lead_time,quality,capacity
North,120,14,7.5,900
East,95,21,6.0,1200
South,130,7,8.5,700
West,110,10,7.0,1000
"""
matrix = load_matrix_csv(io.StringIO(csv_text)).matrix
matrix = matrix.with_criteria(
    [
        Criterion("price", "cost", 0.4),
        Criterion("lead_time", "cost", 0.2),
        Criterion("quality", "benefit", 0.3),
        Criterion("capacity", "benefit", 0.1),
    ]
)

# %%
results = {name: fn(matrix) for name, fn in METHODS.items()}
for name, res in results.items():
    print(f"{name:6s}", dict(zip(res.alternatives, res.ranks.astype(int).tolist())))

# %% [markdown]
# CURLI ignores the weights, and its orientation is the opposite of the
# others: an alternative that beats the rest collects a large positive score,
# and scores are ranked in ascending order, so rank 1 goes to the alternative
# that loses most comparisons. Flip every direction to read CURLI as
# "rank 1 is best":

# %%
from mcdm_compare import curli

flipped = matrix.with_policy(directions=[d.flipped() for d in matrix.directions])
print("curli, flipped directions", dict(zip(flipped.alternatives, curli(flipped).ranks.astype(int).tolist())))

# %% [markdown]
# Pairwise agreement between the methods, as computed:

# %%
names = list(results)
for i, a in enumerate(names):
    for b in names[i + 1 :]:
        cmp = agreement(results[a].ranks, results[b].ranks)
        print(f"{a:6s} vs {b:6s} naive {cmp.spearman_naive:6.3f}  matches {cmp.exact_matches}/4")

# %% [markdown]
# The same from the shell:
#
#     mcdm-compare rank --input suppliers.csv --method moora,fuca \
#         --directions cost,cost,benefit,benefit --weights 0.4,0.2,0.3,0.1
