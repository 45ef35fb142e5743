# Cross-check the closed-form spectra against brute force on instances
# small enough to enumerate: matrix groups are closed under multiplication
# until they hit their known order exactly, then every element is powered
# to a scalar; alternating groups are scanned permutation by permutation.
#
# The heavy pair (SP4_5, SL2_37) is skipped here; run them through the CLI
# with `gk oracle SP4_5 --heavy` when you have ~0.7 GB and a few minutes.
#
# Run:  python demos/oracle_crosschecks.py

import time

from gkod.oracle import HEAVY_TARGETS, ORACLE_TARGETS, make_field, run_target

# finite fields are built deterministically: least irreducible polynomial,
# least primitive element
F27 = make_field(3, 3)
print(f"F_27 = F_3[x]/({F27.poly_str()}), primitive element "
      f"{F27.decode(F27.generator)} of order "
      f"{F27.multiplicative_order(F27.generator)}")
F4 = make_field(2, 2)
print(f"F_4  = F_2[x]/({F4.poly_str()})")
print()

for name in ORACLE_TARGETS:
    if name in HEAVY_TARGETS or name in ("SU4_3", "A9", "A10"):
        why = "heavy tier" if name in HEAVY_TARGETS else "slow scan"
        print(f"{name:<7} skipped here ({why}; try `gk oracle {name}`)")
        continue
    t0 = time.time()
    res = run_target(name)
    status = "agree" if res.match else "DISAGREE"
    print(f"{name:<7} enumerated {res.enumerated:>9,} elements; "
          f"oracle mu = {str(res.mu_oracle):<24} {status} "
          f"({time.time()-t0:.2f}s)")
