"""Reconstruction quality versus read-out count under measurement noise.

Simulates noisy acquisitions of a fixed two-spin state with the full
18-read-out scheme, a 6-read-out scheme and a minimal 5-read-out scheme,
reconstructs each, and compares the relative error. Also shows the
truncation path: a rank-deficient 4-read-out design where the ill
determined combinations are held at the maximally mixed prior.
"""

import numpy as np

from tomoforge import (
    assemble_design,
    params_to_matrix,
    reconstruct,
    relative_error,
    simulate_readings,
)

np.set_printoptions(precision=3, suppress=True)

# a correlated trace-one test state
x = np.zeros(16)
x[[0, 4, 7, 9]] = [0.312, 0.312, 0.312, 0.064]
x[[1, 2, 5]] = 0.31
x[[3, 6, 8]] = -0.063
x[[12, 14, 15]] = -0.13
rho = params_to_matrix(x)
rho /= np.trace(rho).real
print("target state:")
print(rho)

SCHEMES = {
    "18 read-outs (full)": tuple(range(1, 19)),
    " 6 read-outs": (1, 2, 3, 5, 10, 11),
    " 5 read-outs (minimal)": (1, 2, 6, 12, 13),
}

print("\nmean relative error over 200 noisy acquisitions (sigma = 0.01):")
for name, ids in SCHEMES.items():
    deltas = []
    for seed in range(200):
        readings = simulate_readings(rho, ids, noise_sigma=0.01, seed=seed)
        result = reconstruct(assemble_design(ids, readings=readings))
        rebuilt = params_to_matrix(result.params)
        deltas.append(relative_error(rebuilt, rho))
    print(f"  {name}: {np.mean(deltas):.4f} +/- {np.std(deltas):.4f} "
          f"({len(ids) * 4 + 1} equations)")

print("\nfewer equations -> poorer statistics, but every parameter combination")
print("stays well determined, so the loss is graceful rather than catastrophic.")

print("\n--- truncation on a rank-deficient design (read-outs 1-4) ---")
ids = (1, 2, 3, 4)
readings = simulate_readings(rho, ids, noise_sigma=0.01, seed=0)
result = reconstruct(assemble_design(ids, readings=readings))
print(f"combinations held at the maximally mixed prior: {len(result.truncated_directions)}")
for lam, combo in result.truncated_directions[:3]:
    terms = " ".join(f"{c:+.2f}*x{k + 1}" for k, c in enumerate(combo) if abs(c) > 5e-3)
    print(f"  eigenvalue {lam:.1e}: {terms}")
rebuilt = params_to_matrix(result.params)
print(f"reconstructed trace stays exactly normalized: {np.trace(rebuilt).real:.9f}")
print(f"relative error vs target: {relative_error(rebuilt, rho):.3f} "
      "(the prior fills in what the data cannot see)")
