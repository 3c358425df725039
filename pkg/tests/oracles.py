"""Frozen reference values for the test suite.

Every constant below was computed with mpmath at 50 significant digits
and rounded once to the nearest double.  Tests compare library output
against these doubles instead of recomputing references on the fly, so
a regression in the library cannot hide behind a matching regression in
the oracle.  The handful of tests that need dense reference grids call
mpmath directly at import-guarded locations.

Naming: NAME_AT_POINT for function values, FAMILY_ZERO_N for the n-th
positive zero (1-based), and descriptive names for derived quantities.
"""

import math

# -- cylinder function spot values -------------------------------------------
J0_AT_5 = -0.1775967713143383
J1_AT_1 = 0.4400505857449335
J2_AT_5 = 0.046565116277752216
J5_AT_10 = -0.23406152818679364
Y0_AT_1 = 0.08825696421567696
Y1_AT_1 = -0.7812128213002887
Y2_AT_3 = -0.16040039348492373
Y5_AT_10 = 0.1354030476893623
I0_AT_1 = 1.2660658777520084
I1_AT_1 = 0.56515910399248503
I5_AT_10 = 777.18828640325996
I0_AT_600 = 6.1463054039368448e258
K0_AT_1 = 0.42102443824070834
K1_AT_1 = 0.6019072301972346
K0_AT_2 = 0.11389387274953344
K5_AT_10 = 5.7541849985312279e-5
K0_AT_600 = 1.3558285309948524e-262

# -- small-argument structure of K0 ------------------------------------------
# K0(x) + ln(x) tends to ln(2) - euler_gamma as x -> 0.  At x = 1e-6 the
# limit is approached to within ~3.7e-12 (the x^2 series term), so the
# frozen sum and the frozen limit legitimately differ in the 12th digit.
LN2_MINUS_GAMMA = 0.11593151565841245
K0_1EM6_PLUS_LOG = 0.11593151566214531

# -- large-argument decay of K0 ----------------------------------------------
# K0(x) * exp(x) * sqrt(x) approaches sqrt(pi/2) from below.  The frozen
# products show the approach is slow: the relative gap at x = 50 is
# 2.47e-3 and shrinks roughly like 1/(8x).
SQRT_HALF_PI = 1.2533141373155003
K0_DECAY_AT_50 = 1.2502153886909508
K0_DECAY_AT_100 = 1.2517562165912657
K0_DECAY_AT_200 = 1.2525330076834742
K0_DECAY_REL_GAP_AT_50 = 2.472443685337031e-3

# -- zeros of the oscillatory families (1-based index) -------------------------
J0_ZEROS_1_TO_3 = (2.404825557695773, 5.520078110286311, 8.653727912911013)
J1_ZEROS_1_TO_3 = (3.8317059702075125, 7.015586669815619, 10.173468135062722)
Y0_ZEROS_1_TO_3 = (0.8935769662791675, 3.957678419314858, 7.086051060301773)
Y1_ZEROS_1_TO_3 = (2.197141326031017, 5.429681040794135, 8.596005868331169)

J0_ZERO_50 = 156.29503426853352
J0_ZERO_51 = 159.43661116426315
J1_ZERO_50 = 157.8626554019303
J1_ZERO_51 = 161.00429440536199
Y0_ZERO_50 = 154.72424606061697
Y0_ZERO_51 = 157.86582263800711
Y1_ZERO_50 = 156.2918352014784
Y1_ZERO_51 = 159.43347513196881

# -- node densities relative to the free-particle spacing ---------------------
# pi / (z_2 - z_1) for each family and order.  Values above one mean the
# first gap is squeezed below pi (bunching), below one mean it is
# stretched (anti-bunching).
G_J0_FIRST = 1.0084552056549483
G_J1_FIRST = 0.9867180808553793
G_Y0_FIRST = 1.0252900244139536
G_Y1_FIRST = 0.9718651372609696

# -- ring-shaped bound-state density -----------------------------------------
# RING_XI solves K0(xi) = 2 xi K1(xi); the radial density xi K0(xi)^2
# peaks there.  RING_W_MAX_K1 is the peak height 2 k^2 r K0(kr)^2 at
# k = 1, r = RING_XI.
RING_XI = 0.16572151618344258
RING_W_MAX_K1 = 1.2389730972551944

# -- two-dimensional delta-potential ground state ------------------------------
PHI2_AT_K1_R1 = 0.23753760247445327
W2_AT_K1_R1 = 0.35452315519180805
K_AT_U0_4PI = 0.7628739783668902
K_AT_U0_8PI = 1.2415692016705304
E_AT_U0_4PI = -0.29098835343466321

TWO_OVER_PI = 0.6366197723675814
PI = math.pi
