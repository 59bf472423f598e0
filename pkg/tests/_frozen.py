"""Hand-computed reference values for the bundled three-activity
project, frozen here so the suite detects any drift in the library.

Every number below was derived by hand with max-plus arithmetic and
double-checked against the brute-force oracles before the solvers were
written.  The file also records the expected JSON encoding of each
intermediate quantity the schedule command can emit.
"""

from fractions import Fraction

NEG = float("-inf")

A_ROWS = ((4, 0, NEG), (2, 3, 1), (1, 1, 3))
B_ROWS = ((NEG, -1, 1), (0, NEG, 2), (-1, NEG, NEG))
P = (4, 4, 3)
Q = (3, 2, 1)
G = (0, 0, 1)
H = (2, 3, 3)
ACTIVITIES = ("machining", "assembly", "inspection")

A2 = ((8, 4, 1), (6, 6, 4), (5, 4, 6))
A3 = ((12, 8, 5), (10, 9, 7), (9, 7, 9))
B2 = ((0, NEG, 1), (1, -1, 1), (NEG, -2, 0))
B3 = ((0, -1, 1), (0, 0, 2), (-1, NEG, 0))
B_STAR = ((0, -1, 1), (1, 0, 2), (-1, -2, 0))
TRACE_SUM_B = 0
H_BSTAR_G = 0

IDENTITY = ((0, NEG, NEG), (NEG, 0, NEG), (NEG, NEG, 0))
CHAIN_1 = ((4, 3, 5), (4, 3, 5), (2, 1, 3))
CHAIN_2 = ((8, 7, 9), (7, 6, 8), (6, 4, 6))
CLOSURE_1 = ((4, 3, 5), (4, 3, 5), (3, 1, 3))

SPECTRAL_RADIUS_A = 4
CRITICAL_NODES_A = frozenset({0})

H_CLOSURE_G = {1: 4, 2: 6}
Q_CHAIN_G = {1: 4, 2: 7, 3: 9}
H_CLOSURE_P = {0: 2, 1: 6, 2: 10}
Q_CHAIN_P = {0: 2, 1: 6, 2: 9, 3: 13}

SUM_TRACE_ROOTS = 4
SUM_H_CLOSURE_G = 4
SUM_Q_CHAIN_G = 4
SUM_H_CLOSURE_P = Fraction(10, 3)
SUM_Q_CHAIN_P = Fraction(13, 4)
THETA = 4

SCALED_SUM = ((0, -1, 1), (0, -1, 2), (-1, -3, -1))
SCALED_SUM_SQ = ((0, -1, 1), (1, -1, 1), (-1, -2, 0))
GENERATOR = ((0, -1, 1), (1, 0, 2), (-1, -2, 0))
LOWER_U = (0, 0, 1)
UPPER_U = (2, 3, 1)

X_CANONICAL = (2, 3, 1)
Y_COMPLETION = (6, 6, 4)
S_ADJUSTED_START = (2, 2, 1)
T_ADJUSTED_FINISH = (6, 6, 4)
FLOW_TIMES = (4, 4, 3)

COLLAPSE_DIRECTION = (1, 2, 0)
COLLAPSE_INTERVAL = (1, 1)

# Reduction of the schedule to the general span problem.
REDUCED_Q = (-1, -1, -2)
REDUCED_R = 2


def _enc(v):
    if v == NEG:
        return "-inf"
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def _mat(rows):
    return {
        "rows": len(rows),
        "cols": len(rows[0]),
        "data": [[_enc(v) for v in row] for row in rows],
    }


def _smap(d):
    return {str(k): _enc(v) for k, v in d.items()}


# What `tropt schedule --emit-intermediates` must print for the bundled
# project, key by key, at the JSON level.
EXPECTED_INTERMEDIATES = {
    "A_pow": {"2": _mat(A2), "3": _mat(A3)},
    "B_pow": {"2": _mat(B2), "3": _mat(B3)},
    "B_star": _mat(B_STAR),
    "trace_sum_B": TRACE_SUM_B,
    "h_Bstar_g": H_BSTAR_G,
    "chain_sums": [_mat(IDENTITY), _mat(CHAIN_1), _mat(CHAIN_2), _mat(A3)],
    "closure_sums": [_mat(B_STAR), _mat(CLOSURE_1), _mat(A2)],
    "h_closure_g": _smap(H_CLOSURE_G),
    "q_chain_g": _smap(Q_CHAIN_G),
    "h_closure_p": _smap(H_CLOSURE_P),
    "q_chain_p": _smap(Q_CHAIN_P),
    "sum_trace_roots": _enc(SUM_TRACE_ROOTS),
    "sum_h_closure_g": _enc(SUM_H_CLOSURE_G),
    "sum_q_chain_g": _enc(SUM_Q_CHAIN_G),
    "sum_h_closure_p": _enc(SUM_H_CLOSURE_P),
    "sum_q_chain_p": _enc(SUM_Q_CHAIN_P),
    "theta": _enc(THETA),
    "scaled_sum": _mat(SCALED_SUM),
    "scaled_sum_pow": {"2": _mat(SCALED_SUM_SQ)},
    "generator": _mat(GENERATOR),
    "lower_u": [_enc(v) for v in LOWER_U],
    "upper_u": [_enc(v) for v in UPPER_U],
}
