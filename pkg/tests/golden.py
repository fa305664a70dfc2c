"""Frozen reference matrices, transcribed entry by entry.

Each matrix is written as a whitespace-separated block, one row per line.
Entries may be integers or "a/b" rationals.
"""

from focal.exactmath import Matrix, parse_rational


def M(text: str) -> Matrix:
    return Matrix([[parse_rational(tok) for tok in line.split()]
                   for line in text.strip().splitlines()])


# -- basic operators, p = 4 --------------------------------------------------------

DHAT_4 = M("""
0 1 0 0 0
0 0 2 0 0
0 0 0 3 0
0 0 0 0 4
0 0 0 0 0
""")

XHAT_4 = M("""
0 0 0 0 0
1 0 0 0 0
0 1 0 0 0
0 0 1 0 0
0 0 0 1 0
""")

NUMBER_4 = M("""
0 0 0 0 0
0 1 0 0 0
0 0 2 0 0
0 0 0 3 0
0 0 0 0 4
""")

# e^{tD} at t = 1
TRANSLATION_4_T1 = M("""
1 1 1 1 1
0 1 2 3 4
0 0 1 3 6
0 0 0 1 4
0 0 0 0 1
""")

# XD - t D^2 at t = 1
OU_4_T1 = M("""
0 0 -2   0   0
0 1  0  -6   0
0 0  2   0 -12
0 0  0   3   0
0 0  0   0   4
""")

# (XD + alpha)^2 - D^2 at alpha = 1
GEGENBAUER_4_A1 = M("""
1 0 -2  0   0
0 4  0 -6   0
0 0  9  0 -12
0 0  0 16   0
0 0  0  0  25
""")

# -- V = e^z - 1, p = 4 ------------------------------------------------------------

EXP_Y1 = M("""
0  0  0  0  0
1 -1  1 -1  1
0  1 -2  3 -4
0  0  1 -3  6
0  0  0  1 -4
""")

EXP_Y2 = M("""
 0  0  0   0   0
-1  2 -4   8 -15
 1 -3  8 -20  43
 0  1 -5  18 -46
 0  0  1  -7  22
""")

EXP_Y3 = M("""
 0  0   0    0    0
 2 -6  18  -53  126
-3 11 -39  130 -327
 1 -6  29 -116  313
 0  1  -9   46 -134
""")

EXP_Y4 = M("""
 0   0    0    0     0
-6  24  -95  345  -900
11 -50  219 -845  2255
-6  35 -180  754 -2070
 1 -10   65 -300   849
""")

EXP_Y5 = M("""
  0    0     0     0      0
 24 -119   559 -2244   6074
-50  269 -1333  5497 -15016
 35 -215  1149 -4907  13559
-10   75  -440  1954  -5466
""")

# -- V = z e^{-z}, p = 7 -----------------------------------------------------------

LAMBERTW_Y_7 = M("""
0 0 0  0  0   0    0     0
1 2 5 16 65 326 1957 13700
0 1 4 15 64 325 1956 13699
0 0 1  6 30 160  975  6846
0 0 0  1  8  50  320  2275
0 0 0  0  1  10   75   560
0 0 0  0  0   1   12   105
0 0 0  0  0   0    1    14
""")


def gauss_drift_y(alpha) -> Matrix:
    """Raising matrix for V = alpha z - z^2/2 at p = 4, written in powers of 1/alpha."""
    a = alpha
    return Matrix([
        [0, 0, 0, 0, 0],
        [1 / a, 1 / a ** 2, 2 / a ** 3, 6 / a ** 4, 24 / a ** 5],
        [0, 1 / a, 2 / a ** 2, 6 / a ** 3, 24 / a ** 4],
        [0, 0, 1 / a, 3 / a ** 2, 12 / a ** 3],
        [0, 0, 0, 1 / a, 4 / a ** 2],
    ])


def gauss_drift_polys(alpha) -> list:
    """y_1 .. y_5 as coefficient vectors (constant term first), padded to length 6."""
    a = alpha
    polys = [
        [0, 1 / a],
        [0, 1 / a ** 3, 1 / a ** 2],
        [0, 3 / a ** 5, 3 / a ** 4, 1 / a ** 3],
        [0, 15 / a ** 7, 15 / a ** 6, 6 / a ** 5, 1 / a ** 4],
        [0, 105 / a ** 9, 105 / a ** 8, 45 / a ** 7, 10 / a ** 6, 1 / a ** 5],
    ]
    return [tuple(p + [0] * (6 - len(p))) for p in polys]


# recurrence series for alpha = 1: coefficients of 1/U'(V) in powers of V
GAUSS_DRIFT_RECURRENCE_A1 = (1, -1, "-1/2", "-1/2", "-5/8", "-7/8", "-21/16", "-33/16")

# -- Krawtchouk, N = 5 -------------------------------------------------------------

COSH_5 = M("""
1 0 1 0 1  0
0 1 0 3 0  5
0 0 1 0 6  0
0 0 0 1 0 10
0 0 0 0 1  0
0 0 0 0 0  1
""")

SECH_5 = M("""
1 0 -1  0  5   0
0 1  0 -3  0  25
0 0  1  0 -6   0
0 0  0  1  0 -10
0 0  0  0  1   0
0 0  0  0  0   1
""")

KRAW_Y1 = M("""
0 0 0 0  0  0
1 0 2 0  8  0
0 1 0 6  0 40
0 0 1 0 12  0
0 0 0 1  0 20
0 0 0 0  1  0
""")

KRAW_Y2 = M("""
0 0 0  0   0   0
0 2 0 20   0 240
1 0 8  0 120   0
0 1 0 18   0 280
0 0 1  0  32   0
0 0 0  1   0  20
""")

KRAW_Y3 = M("""
0 0  0   0   0    0
2 0 24   0 496    0
0 8  0 168   0 2720
1 0 20   0 504    0
0 1  0  38   0  680
0 0  1   0  32    0
""")

KRAW_Y4 = M("""
0  0   0   0    0     0
0 24   0 640    0 10880
8  0 184   0 4800     0
0 20   0 624    0 10880
1  0  40   0 1144     0
0  1   0  38    0   680
""")

KRAW_Y5 = M("""
 0   0   0    0     0      0
24   0 688    0 18752      0
 0 184   0 5904     0 103360
20   0 664    0 18528      0
 0  40   0 1384     0  24480
 1   0  40    0  1144      0
""")

# (sech D)^3 Y^4
SECH3_Y4 = M("""
  9   0  768    0  23352      0
  0   9    0 1294      0  25160
-10   0 -536    0 -15792      0
  0 -10    0 -516      0  -9520
  1   0   40    0   1144      0
  0   1    0   38      0    680
""")

# (sech D)^5 Y^5; its first column is K_5(x, 5)
SECH5_Y5 = M("""
   0  2480     0  88120      0  1564000
 149     0  7728      0 227032        0
   0 -1016     0 -35616      0  -631040
 -30     0 -1336      0 -38672        0
   0    40     0   1384      0    24480
   1     0    40      0   1144        0
""")

KRAWTCHOUK_N5 = [
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (-5, 0, 1, 0, 0, 0),
    (0, -13, 0, 1, 0, 0),
    (45, 0, -22, 0, 1, 0),
    (0, 149, 0, -30, 0, 1),
]

K6_N5 = (-225, 0, 259, 0, -35, 0, 1)

EXPANSION_OPS_5 = [
    M("""
1 0 5  0 65   0
0 1 0 15  0 325
0 0 1  0 30   0
0 0 0  1  0  50
0 0 0  0  1   0
0 0 0  0  0   1
"""),
    M("""
0 1 0 13  0 241
0 0 2  0 52   0
0 0 0  3  0 130
0 0 0  0  4   0
0 0 0  0  0   5
0 0 0  0  0   0
"""),
    M("""
0 0 1 0 22   0
0 0 0 3  0 110
0 0 0 0  6   0
0 0 0 0  0  10
0 0 0 0  0   0
0 0 0 0  0   0
"""),
    M("""
0 0 0 1 0 30
0 0 0 0 4  0
0 0 0 0 0 10
0 0 0 0 0  0
0 0 0 0 0  0
0 0 0 0 0  0
"""),
    M("""
0 0 0 0 1 0
0 0 0 0 0 5
0 0 0 0 0 0
0 0 0 0 0 0
0 0 0 0 0 0
0 0 0 0 0 0
"""),
    M("""
0 0 0 0 0 1
0 0 0 0 0 0
0 0 0 0 0 0
0 0 0 0 0 0
0 0 0 0 0 0
0 0 0 0 0 0
"""),
]

# rows n = 0..5: each expansion operator applied to x^4 + 2x^3 - x^2 + 5x
EXPANSION_STACK_5 = M("""
60 35 29 2 1 0
31 50  6 4 0 0
21  6  6 0 0 0
 2  4  0 0 0 0
 1  0  0 0 0 0
 0  0  0 0 0 0
""")

EXPANSION_POLY = (0, 5, -1, 2, 1, 0)
EXPANSION_COEFFS = (60, 31, 21, 2, 1, 0)

EXPANSION_Y_5 = M("""
1 0 5  0 65   0
0 1 0 13  0 241
0 0 1  0 22   0
0 0 0  1  0  30
0 0 0  0  1   0
0 0 0  0  0   1
""")

EXPANSION_YINV_5 = M("""
1 0 -5   0  45   0
0 1  0 -13   0 149
0 0  1   0 -22   0
0 0  0   1   0 -30
0 0  0   0   1   0
0 0  0   0   0   1
""")
