"""
Parameter sweeps: how the correlation measures order and cross
==============================================================

Scanning one family parameter while holding another fixed shows three
regimes worth knowing: discord strictly above classical correlation on the
separable gamma = 0 line, negativity overtaking both as gamma grows at fixed
beta, and every measure vanishing together at beta = gamma.

The same tables are available as CSV from the command line, e.g.

    qucorr sweep --dim 3 --fix gamma=0   --vary alpha --from 0 --to 0.5  --steps 200 --out line1.csv
    qucorr sweep --dim 3 --fix beta=0.05 --vary gamma --from 0 --to 0.85 --steps 171 --out line2.csv
"""

import numpy as np

from qucorr import TwoParamState, correlation_report

# --- separable line: gamma = 0, d = 3 --------------------------------------
print("gamma = 0 (all states separable):")
print(f"{'alpha':>8} {'C':>10} {'Q':>10}")
for alpha in np.linspace(0.0, 0.5, 11):
    r = correlation_report(TwoParamState(3, float(alpha), 0.0))
    print(f"{alpha:8.3f} {r.classical:10.6f} {r.discord:10.6f}")
print("Q stays above C everywhere except the endpoints.\n")

# --- fixed beta: negativity crosses discord and classical ------------------
beta = 0.05
print(f"beta = {beta} (alpha follows from the trace constraint):")
print(f"{'gamma':>8} {'C':>10} {'Q':>10} {'N':>10}")
rows = []
for gamma in np.linspace(0.0, 0.85, 18):
    alpha = (1.0 - 3.0 * beta - gamma) / 2.0
    r = correlation_report(TwoParamState(3, float(alpha), float(gamma)))
    rows.append((gamma, r.classical, r.discord, r.negativity))
    print(f"{gamma:8.3f} {r.classical:10.6f} {r.discord:10.6f} {r.negativity:10.6f}")

rows = np.array(rows)
fine = np.linspace(0.0, 0.85, 2000)
nq_cross = nc_cross = None
prev_nq = prev_nc = None
for gamma in fine:
    alpha = (1.0 - 3.0 * beta - gamma) / 2.0
    r = correlation_report(TwoParamState(3, float(alpha), float(gamma)))
    nq, nc = r.negativity - r.discord, r.negativity - r.classical
    if prev_nq is not None and prev_nq < 0 <= nq and nq_cross is None:
        nq_cross = gamma
    if prev_nc is not None and prev_nc < 0 <= nc and nc_cross is None:
        nc_cross = gamma
    prev_nq, prev_nc = nq, nc
print(f"\nN overtakes C near gamma = {nc_cross:.4f} and Q near gamma = {nq_cross:.4f}")

# --- the uncorrelated diagonal: beta = gamma --------------------------------
print("\nbeta = gamma (product states):")
for gamma in (0.05, 0.10, 0.20):
    alpha = (1.0 - 4.0 * gamma) / 2.0
    r = correlation_report(TwoParamState(3, float(alpha), float(gamma)))
    print(f"  gamma={gamma:.2f}: I={r.mutual_info:.2e} C={r.classical:.2e} "
          f"Q={r.discord:.2e} N={r.negativity:.2e}")
print("every correlation measure vanishes on this line.")
