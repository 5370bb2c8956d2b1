# How much of the secret leaks as the eavesdropper sees more symbols.
# Writes leakage.csv next to the current directory and prints the curve.
#
# Run:  python3 demos/03_leakage_curve.py

from pathlib import Path

from eewt import field_new, leakage_profile, linear_code, ozarow_wyner_scheme, reference_scheme

scheme = reference_scheme()
profile = leakage_profile(scheme)
Path("leakage.csv").write_text(profile.to_csv())

# flat at k while m <= mu, then k + k* - m, then zero once m >= nu
print(" m  equivocation  leaked")
for row in profile.rows:
    bar = "#" * row.min_equivocation
    print(f"{row.m:2d}  {row.min_equivocation:>12d}  {row.max_leaked:>6d}  {bar}")

# With a non-MDS randomizer code the curve is no longer a function of m alone:
# some pairs of positions leak and others do not.
gf2 = field_new(2, 1)
weak = ozarow_wyner_scheme(gf2, linear_code(gf2, [[1, 0, 1, 0], [0, 1, 0, 1]]), mu=2)
for row in leakage_profile(weak).rows:
    print(f"m={row.m}: equivocation between {row.min_equivocation} and {row.max_equivocation}")
