"""Frozen 50-digit reference strings.

Each value was computed by the independent oracles in oracles.py
(iterated-averaging acceleration of the defining alternating sums, the
van Wijngaarden transform for the positive-term L-values, raw geometric
series for the polylogarithms, and raw partial sums with geometric tails
for the binomial series), at 75 dps, and cross-checked against a second
route before freezing.
"""

ZETA3 = "1.202056903159594285399738161511449990764986292340499"
CATALAN = "0.9159655941772190150546035149323841107741493742816721"
BETA4 = "0.9889445517411053361084226332283778213158608870627339"
L_8_2_3 = "0.9583804545630945620516694028615778188248953179397753"
L_8_4_4 = "1.010508940573942752987898207302337179459083894748234"
L_3_2_4 = "0.9400256808771237686910694450708859916438030966033501"
L_12_4_3 = "0.9900400194381599497918167768633040508568850676572361"
LI2_HALF = "0.5822405264650125059026563201596801087441984748061264"
LI3_INV_PHI = "0.6779575068317225525156772103798147354440245911985671"
CATALAN_LIKE = "0.5700774070887689781956097575900745510631458099187287"
S3_POS = "1.020020800652542769465875618040121956834328627941875"
S3_NEG = "0.9826860767027605927445748248462312745799383129481158"
CHUDNOVSKY = "0.1688071748456063287251175074247166152172671259840048"
LOG_GOLDEN = "0.4812118250596034474977589134243684231351843343856605"
