"""Frozen high-precision root coordinates shared by the root-finding tests.

Every value below was refined independently with mpmath at 40 significant
digits (Newton on the exact rational-base partial sum) and is recorded here
to double precision.  Tests compare package output against these, not the
other way around.
"""

import math

# direct family, region [-2, 2] x [-6, 6] --------------------------------
# n = 3: the only zeros are the purely imaginary pair at 2*pi*i/log(6).
DIRECT_3_IM = 2 * math.pi / math.log(6)  # 3.5067124885275898

# n = 5: two conjugate pairs.
DIRECT_5 = (
    complex(0.44595864487917392, 2.8143638216590907),
    complex(0.22169049089644385, 4.6131292774980244),
)

# n = 6: three conjugate pairs.
DIRECT_6 = (
    complex(0.63121410967842839, 2.5466342086151310),
    complex(0.03319855892924981, 3.6906651639465289),
    complex(0.40351526755863398, 4.7214250214473630),
)

# alternating family, same region ----------------------------------------
# n = 3: one real root plus one conjugate pair.
ALT_3_REAL = 0.52330526885276396
ALT_3_PAIR = complex(-0.81704801746763367, 5.5789504641065424)

# n = 5 (constant 1/2): two purely imaginary pairs.
ALT_5_IMS = (0.71940851358802405, 4.6497898139341141)

# n = 6: one real root plus three conjugate pairs.
ALT_6_REAL = 0.46517141283047186
ALT_6_PAIRS = (
    complex(0.23099319821573563, 3.3037797958620980),
    complex(-0.26954508655985332, 4.1553814481590274),
    complex(-0.76004052190266491, 5.4747679022055626),
)

# Values as printed in the experiment write-up (5-6 significant digits);
# the root finder must land within 1e-4 of these.
REPORTED = {
    "direct-3": complex(0.0, 3.50671),
    "direct-5": complex(0.445959, 2.81436),
    "direct-6": complex(0.631214, 2.54663),
    "alt-5": complex(0.0, 0.719409),
    "alt-6": complex(0.465171, 0.0),
}
