"""Printed reference data, transcribed digit by digit.

Sequences are written the way they are printed: concatenated signed digits,
so "0-11" is (0, -1, 1).
"""

import re


def digits(s: str) -> tuple[int, ...]:
    return tuple(int(t) for t in re.findall(r"-?\d", s))


# (type, delta-a, delta-b)
DELTA_D1 = [
    ("1", "-101-101-101", "000"),
    ("2", "0-11-100001", "0-11"),
    ("3", "-1010-10001", "1-10"),
    ("4", "00-1000001", "-1-12"),
    ("1*", "10-110-110-1", "000"),
    ("2*", "01-110000-1", "01-1"),
    ("3*", "10-101000-1", "-110"),
    ("4*", "00100000-1", "11-2"),
    ("5", "0000-12-100", "-110"),
    ("5*", "00001-2100", "1-10"),
    ("6", "00000-111-1", "000"),
    ("6*", "000001-1-11", "000"),
]

# The two printed delta-a rows above that disagree with the words they sit
# next to, and what the words actually give.
DELTA_D1_RECOMPUTED = {
    "5": (0, 0, -1, 1, 0, 1, -1, 0, 0),
    "5*": (0, 0, 1, -1, 0, -1, 1, 0, 0),
}

# (type, delta-a1, delta-b, delta-a2)
DELTA_D2 = [
    ("1", "000", "000", "-11-11-11"),
    ("2", "000", "0-11", "00-1001"),
    ("3", "000", "1-10", "-110-101"),
    ("4", "01-1", "-110", "00-1100"),
    ("5", "01-1", "01-1", "-110000"),
    ("6", "01-1", "000", "0000-11"),
    ("7", "-110", "-101", "-100001"),
    ("8", "-110", "-110", "0001-10"),
    ("9", "-110", "000", "001-100"),
]

# (type, delta-b, delta-a1, delta-a2, delta-a3)
DELTA_D3 = [
    ("1", "000", "000", "0-11", "01-1"),
    ("2", "-110", "000", "-110", "01-1"),
    ("3", "01-1", "000", "10-1", "01-1"),
    ("4", "10-1", "1-10", "000", "10-1"),
    ("5", "1-10", "1-10", "000", "-110"),
    ("6", "000", "1-10", "000", "-110"),
    ("7", "01-1", "10-1", "01-1", "000"),
    ("8", "10-1", "10-1", "1-10", "000"),
    ("9", "000", "10-1", "-101", "000"),
]

# Rows of the root table for the starred types: the a-indices fix the cyclic
# shift of the sample word.  Columns: type, a-indices, delta-a, l on e1..e8,
# l(e0), v on e1..e8, v on e0, sign in front of v, and the fragment
# variations ((start, stop) in e1..e8, two replacements) listed per a-block
# whose letters are not all equal, in block order.
ROOT_ROWS = [
    ("1*", "211211211", "10-110-110-1", "10-110-110", 0, "01211100", 1, 1,
     [((0, 2), ("11", "12")), ((3, 5), ("21", "22")), ((5, 8), ("110", "111"))]),
    ("2*", "221211111", "01-110000-1", "01-110000", -1, "00100000", 1, 1,
     [((0, 2), ("01", "11")), ((3, 5), ("10", "11"))]),
    ("2*", "211111221", "10000-101-1", "10000-101", 0, "01222210", 1, 1,
     [((0, 2), ("11", "12")), ((5, 8), ("211", "221"))]),
    ("2*", "111221211", "00-101-1100", "00-101-110", 1, "12321100", 1, 1,
     [((3, 5), ("22", "32")), ((5, 8), ("110", "111"))]),
    ("3*", "211221111", "10-101000-1", "10-101000", 0, "01210000", 1, 1,
     [((0, 2), ("11", "12")), ((3, 5), ("11", "21"))]),
    ("3*", "221111211", "01000-110-1", "01000-110", -1, "00111100", 1, 1,
     [((0, 2), ("01", "11")), ((5, 8), ("110", "111"))]),
    ("3*", "111211221", "00-110-1010", "00-110-101", 1, "12322210", 1, 1,
     [((3, 5), ("32", "33")), ((5, 8), ("221", "211"))]),
    ("4*", "222111111", "00100000-1", "00100000", -2, "00000000", 1, 1, []),
    ("4*", "111111222", "00000-1001", "00000-100", 1, "12321000", 2, -1, []),
    ("4*", "111222111", "00-1001000", "00-100100", 1, "12321000", 1, 1, []),
    ("5*", "222122322", "001-10-1100", "001-10-110", 0, "00011100", 0, 1,
     [((3, 5), ("00", "01")), ((5, 8), ("110", "111"))]),
    ("5*", "122322222", "-10-1100001", "-10-110000", 1, "11100000", 0, 1,
     [((0, 2), ("00", "01")), ((3, 5), ("10", "11"))]),
    ("5*", "322222122", "100001-10-1", "100001-10", -1, "11111100", 0, -1,
     [((0, 2), ("00", "01")), ((5, 8), ("110", "111"))]),
    ("6*", "222222123", "000001-1-11", "000001-1-1", 0, "00000011", 0, 1,
     [((5, 8), ("001", "010"))]),
    ("6*", "222123222", "001-1-11000", "001-1-1100", 0, "00011000", 0, 1,
     [((3, 5), ("01", "10"))]),
    ("6*", "123222222", "-1-11000001", "-1-1100000", 0, "11000000", 0, 1,
     [((0, 2), ("01", "10"))]),
]

# Types whose printed fragment variations agree with the computed roots only
# up to an overall sign.
SIGN_FREE_VARIATIONS = {"6*"}

E7_EXAMPLE = ((0, 0, 1, -1, 1, -1), -1, (0, 0, 0, 1, 0, 1), 1, 2)   # l, l(e0), 2v, 2v(e0), den
E6_EXAMPLE = ((0, 0, 0, 0, -1), 0, (2, 4, 6, 5, 4), 3, 3)
RADICAL = (2, 4, 6, 5, 4, 3, 2, 1, 3)
