"""Unit conventions and conversion constants.

Everything internal runs in millimetres, kilopascals, newtons and
newton-millimetres (1 N*mm = 1 mJ).  The constants below are the only
place unit reconciliation happens:

* pressure moments: kPa * mm^3 = 1e-3 N*mm, hence ``KPA_MM3_TO_NMM``
* weights: grams to newtons at the 0.0098 N/g convention
"""

import math

KPA_MM3_TO_NMM = 1e-3
NEWTON_PER_GRAM = 0.0098
DEG_PER_RAD = 180.0 / math.pi
