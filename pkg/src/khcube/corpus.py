"""Test corpus: prime knots through eight crossings and random braid closures.

PD codes and Khovanov polynomials are transcribed from the KnotInfo
database.  In the polynomials ``t`` marks the homological degree, ``q``
the quantum degree and ``T^(2)`` a ``Z/2`` summand; KnotInfo's chirality
is the mirror of the one these PD codes produce under our conventions
for some knots, so comparisons go through :func:`knotinfo_table`.
"""

from __future__ import annotations

import random
import re

from .diagram import LinkDiagram, parse_braid, parse_pd

# (name, PD code, alternating)
KNOTS = (
    ('3_1', '[[1,5,2,4],[3,1,4,6],[5,3,6,2]]', True),
    ('4_1', '[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]', True),
    ('5_1', '[[2,8,3,7],[4,10,5,9],[6,2,7,1],[8,4,9,3],[10,6,1,5]]', True),
    ('5_2', '[[1,5,2,4],[3,9,4,8],[5,1,6,10],[7,3,8,2],[9,7,10,6]]', True),
    ('6_1', '[[1,7,2,6],[3,10,4,11],[5,3,6,2],[7,1,8,12],[9,4,10,5],[11,9,12,8]]', True),
    ('6_2', '[[1,8,2,9],[3,11,4,10],[5,1,6,12],[7,2,8,3],[9,7,10,6],[11,5,12,4]]', True),
    ('6_3', '[[4,2,5,1],[8,4,9,3],[12,9,1,10],[10,5,11,6],[6,11,7,12],[2,8,3,7]]', True),
    ('7_1', '[[1,9,2,8],[3,11,4,10],[5,13,6,12],[7,1,8,14],[9,3,10,2],[11,5,12,4],[13,7,14,6]]', True),
    ('7_2', '[[2,10,3,9],[4,14,5,13],[6,12,7,11],[8,2,9,1],[10,8,11,7],[12,6,13,5],[14,4,1,3]]', True),
    ('7_3', '[[1,9,2,8],[3,11,4,10],[5,1,6,14],[7,13,8,12],[9,3,10,2],[11,5,12,4],[13,7,14,6]]', True),
    ('7_4', '[[2,10,3,9],[4,12,5,11],[6,14,7,13],[8,4,9,3],[10,2,11,1],[12,8,13,7],[14,6,1,5]]', True),
    ('7_5', '[[2,10,3,9],[4,2,5,1],[6,14,7,13],[8,12,9,11],[10,4,11,3],[12,6,13,5],[14,8,1,7]]', True),
    ('7_6', '[[1,13,2,12],[3,9,4,8],[5,1,6,14],[7,10,8,11],[9,3,10,2],[11,6,12,7],[13,5,14,4]]', True),
    ('7_7', '[[1,10,2,11],[3,13,4,12],[5,14,6,1],[7,5,8,4],[9,2,10,3],[11,9,12,8],[13,6,14,7]]', True),
    ('8_1', '[[1,9,2,8],[3,7,4,6],[5,12,6,13],[7,3,8,2],[9,1,10,16],[11,15,12,14],[13,4,14,5],[15,11,16,10]]', True),
    ('8_2', '[[1,10,2,11],[3,13,4,12],[5,15,6,14],[7,1,8,16],[9,2,10,3],[11,9,12,8],[13,5,14,4],[15,7,16,6]]', True),
    ('8_3', '[[6,2,7,1],[14,10,15,9],[10,5,11,6],[12,3,13,4],[4,11,5,12],[2,13,3,14],[16,8,1,7],[8,16,9,15]]', True),
    ('8_4', '[[2,11,3,12],[4,9,5,10],[6,16,7,15],[8,14,9,13],[10,1,11,2],[12,3,13,4],[14,8,15,7],[16,6,1,5]]', True),
    ('8_5', '[[1,7,2,6],[3,9,4,8],[5,12,6,13],[7,3,8,2],[9,15,10,14],[11,1,12,16],[13,4,14,5],[15,11,16,10]]', True),
    ('8_6', '[[2,9,3,10],[4,14,5,13],[6,16,7,15],[8,12,9,11],[10,1,11,2],[12,8,13,7],[14,6,15,5],[16,4,1,3]]', True),
    ('8_7', '[[2,9,3,10],[4,14,5,13],[6,15,7,16],[8,1,9,2],[10,5,11,6],[12,4,13,3],[14,12,15,11],[16,7,1,8]]', True),
    ('8_8', '[[1,7,2,6],[3,12,4,13],[5,9,6,8],[7,3,8,2],[9,16,10,1],[11,14,12,15],[13,4,14,5],[15,10,16,11]]', True),
    ('8_9', '[[6,2,7,1],[14,8,15,7],[10,3,11,4],[2,13,3,14],[12,5,13,6],[4,11,5,12],[16,10,1,9],[8,16,9,15]]', True),
    ('8_10', '[[2,14,3,13],[4,9,5,10],[6,11,7,12],[8,15,9,16],[10,5,11,6],[12,2,13,1],[14,7,15,8],[16,4,1,3]]', True),
    ('8_11', '[[1,10,2,11],[3,13,4,12],[5,15,6,14],[7,1,8,16],[9,2,10,3],[11,9,12,8],[13,7,14,6],[15,5,16,4]]', True),
    ('8_12', '[[4,2,5,1],[10,8,11,7],[8,3,9,4],[2,9,3,10],[14,6,15,5],[16,11,1,12],[12,15,13,16],[6,14,7,13]]', True),
    ('8_13', '[[1,9,2,8],[3,14,4,15],[5,12,6,13],[7,11,8,10],[9,3,10,2],[11,16,12,1],[13,4,14,5],[15,6,16,7]]', True),
    ('8_14', '[[2,12,3,11],[4,8,5,7],[6,15,7,16],[8,14,9,13],[10,2,11,1],[12,10,13,9],[14,4,15,3],[16,5,1,6]]', True),
    ('8_15', '[[1,7,2,6],[3,15,4,14],[5,9,6,8],[7,3,8,2],[9,13,10,12],[11,1,12,16],[13,5,14,4],[15,11,16,10]]', True),
    ('8_16', '[[2,7,3,8],[4,10,5,9],[6,1,7,2],[8,14,9,13],[10,15,11,16],[12,6,13,5],[14,3,15,4],[16,11,1,12]]', True),
    ('8_17', '[[6,2,7,1],[14,8,15,7],[8,3,9,4],[2,13,3,14],[12,5,13,6],[4,9,5,10],[16,12,1,11],[10,16,11,15]]', True),
    ('8_18', '[[6,2,7,1],[8,3,9,4],[16,11,1,12],[2,14,3,13],[4,15,5,16],[10,6,11,5],[12,7,13,8],[14,10,15,9]]', True),
    ('8_19', '[[2,14,3,13],[5,11,6,10],[7,15,8,14],[9,5,10,4],[11,7,12,6],[12,2,13,1],[15,9,16,8],[16,4,1,3]]', False),
    ('8_20', '[[1,7,2,6],[4,13,5,14],[5,9,6,8],[7,3,8,2],[10,15,11,16],[12,9,13,10],[14,3,15,4],[16,11,1,12]]', False),
    ('8_21', '[[1,7,2,6],[4,13,5,14],[5,9,6,8],[7,3,8,2],[9,13,10,12],[11,1,12,16],[14,3,15,4],[15,11,16,10]]', False),
)

KNOTINFO_KH = {
    '3_1': 'q+ q^(3)+ t^(2)*q^(5)+ t^(3)*q^(9)+ t^(3)*q^(7)*T^(2)',
    '4_1': 't^(-2)*q^(-5)+ t^(-1)*q^(-1)+ q^(-1)+ q+ t*q+ t^(2)*q^(5)+ t^(-1)*q^(-3)*T^(2)+ t^(2)*q^(3)*T^(2)',
    '5_1': 'q^(3)+ q^(5)+ t^(2)*q^(7)+ t^(3)*q^(11)+ t^(4)*q^(11)+ t^(5)*q^(15)+ t^(3)*q^(9)*T^(2)+ t^(5)*q^(13)*T^(2)',
    '5_2': 'q+ q^(3)+ t*q^(3)+ t^(2)*q^(5)+ t^(2)*q^(7)+ t^(3)*q^(9)+ t^(4)*q^(9)+ t^(5)*q^(13)+ t^(2)*q^(5)*T^(2)+ t^(3)*q^(7)*T^(2)+ t^(5)*q^(11)*T^(2)',
    '6_1': 't^(-2)*q^(-5)+ t^(-1)*q^(-1)+ 2*q^(-1)+ q+ t*q+ t*q^(3)+ t^(2)*q^(5)+ t^(3)*q^(5)+ t^(4)*q^(9)+ t^(-1)*q^(-3)*T^(2)+ t*q*T^(2)+ t^(2)*q^(3)*T^(2)+ t^(4)*q^(7)*T^(2)',
    '6_2': 't^(-2)*q^(-3)+ t^(-1)*q+ 2*q+ q^(3)+ t*q^(3)+ t*q^(5)+ t^(2)*q^(5)+ t^(2)*q^(7)+ t^(3)*q^(7)+ t^(3)*q^(9)+ t^(4)*q^(11)+ t^(-1)*q^(-1)*T^(2)+ t*q^(3)*T^(2)+ t^(2)*q^(5)*T^(2)+ t^(3)*q^(7)*T^(2)+ t^(4)*q^(9)*T^(2)',
    '6_3': 't^(-3)*q^(-7)+ t^(-2)*q^(-5)+ t^(-2)*q^(-3)+ t^(-1)*q^(-3)+ t^(-1)*q^(-1)+ 2*q^(-1)+ 2*q+ t*q+ t*q^(3)+ t^(2)*q^(3)+ t^(2)*q^(5)+ t^(3)*q^(7)+ t^(-2)*q^(-5)*T^(2)+ t^(-1)*q^(-3)*T^(2)+ q^(-1)*T^(2)+ t*q*T^(2)+ t^(2)*q^(3)*T^(2)+ t^(3)*q^(5)*T^(2)',
    '7_1': 'q^(5)+ q^(7)+ t^(2)*q^(9)+ t^(3)*q^(13)+ t^(4)*q^(13)+ t^(5)*q^(17)+ t^(6)*q^(17)+ t^(7)*q^(21)+ t^(3)*q^(11)*T^(2)+ t^(5)*q^(15)*T^(2)+ t^(7)*q^(19)*T^(2)',
    '7_2': 'q+ q^(3)+ t*q^(3)+ t^(2)*q^(5)+ t^(2)*q^(7)+ t^(3)*q^(7)+ t^(3)*q^(9)+ t^(4)*q^(9)+ t^(4)*q^(11)+ t^(5)*q^(13)+ t^(6)*q^(13)+ t^(7)*q^(17)+ t^(2)*q^(5)*T^(2)+ t^(3)*q^(7)*T^(2)+ t^(4)*q^(9)*T^(2)+ t^(5)*q^(11)*T^(2)+ t^(7)*q^(15)*T^(2)',
    '7_3': 'q^(3)+ q^(5)+ t*q^(5)+ t^(2)*q^(7)+ t^(2)*q^(9)+ t^(3)*q^(9)+ t^(3)*q^(11)+ 2*t^(4)*q^(11)+ t^(4)*q^(13)+ 2*t^(5)*q^(15)+ t^(6)*q^(15)+ t^(7)*q^(19)+ t^(2)*q^(7)*T^(2)+ t^(3)*q^(9)*T^(2)+ t^(4)*q^(11)*T^(2)+ 2*t^(5)*q^(13)*T^(2)+ t^(7)*q^(17)*T^(2)',
    '7_4': 'q+ q^(3)+ 2*t*q^(3)+ t^(2)*q^(5)+ 2*t^(2)*q^(7)+ t^(3)*q^(7)+ t^(3)*q^(9)+ 2*t^(4)*q^(9)+ t^(4)*q^(11)+ 2*t^(5)*q^(13)+ t^(6)*q^(13)+ t^(7)*q^(17)+ 2*t^(2)*q^(5)*T^(2)+ t^(3)*q^(7)*T^(2)+ t^(4)*q^(9)*T^(2)+ 2*t^(5)*q^(11)*T^(2)+ t^(7)*q^(15)*T^(2)',
    '7_5': 'q^(3)+ q^(5)+ t*q^(5)+ 2*t^(2)*q^(7)+ t^(2)*q^(9)+ t^(3)*q^(9)+ 2*t^(3)*q^(11)+ 2*t^(4)*q^(11)+ t^(4)*q^(13)+ t^(5)*q^(13)+ 2*t^(5)*q^(15)+ t^(6)*q^(15)+ t^(6)*q^(17)+ t^(7)*q^(19)+ t^(2)*q^(7)*T^(2)+ 2*t^(3)*q^(9)*T^(2)+ t^(4)*q^(11)*T^(2)+ 2*t^(5)*q^(13)*T^(2)+ t^(6)*q^(15)*T^(2)+ t^(7)*q^(17)*T^(2)',
    '7_6': 't^(-2)*q^(-3)+ t^(-1)*q^(-1)+ t^(-1)*q+ 2*q+ 2*q^(3)+ 2*t*q^(3)+ t*q^(5)+ 2*t^(2)*q^(5)+ 2*t^(2)*q^(7)+ t^(3)*q^(7)+ 2*t^(3)*q^(9)+ t^(4)*q^(9)+ t^(4)*q^(11)+ t^(5)*q^(13)+ t^(-1)*q^(-1)*T^(2)+ q*T^(2)+ t*q^(3)*T^(2)+ 2*t^(2)*q^(5)*T^(2)+ 2*t^(3)*q^(7)*T^(2)+ t^(4)*q^(9)*T^(2)+ t^(5)*q^(11)*T^(2)',
    '7_7': 't^(-4)*q^(-9)+ t^(-3)*q^(-7)+ t^(-3)*q^(-5)+ 2*t^(-2)*q^(-5)+ t^(-2)*q^(-3)+ 2*t^(-1)*q^(-3)+ 2*t^(-1)*q^(-1)+ 2*q^(-1)+ 3*q+ 2*t*q+ t*q^(3)+ t^(2)*q^(3)+ 2*t^(2)*q^(5)+ t^(3)*q^(7)+ t^(-3)*q^(-7)*T^(2)+ t^(-2)*q^(-5)*T^(2)+ 2*t^(-1)*q^(-3)*T^(2)+ 2*q^(-1)*T^(2)+ t*q*T^(2)+ 2*t^(2)*q^(3)*T^(2)+ t^(3)*q^(5)*T^(2)',
    '8_1': 't^(-2)*q^(-5)+ t^(-1)*q^(-1)+ 2*q^(-1)+ q+ t*q+ t*q^(3)+ t^(2)*q^(3)+ t^(2)*q^(5)+ t^(3)*q^(5)+ t^(3)*q^(7)+ t^(4)*q^(9)+ t^(5)*q^(9)+ t^(6)*q^(13)+ t^(-1)*q^(-3)*T^(2)+ t*q*T^(2)+ t^(2)*q^(3)*T^(2)+ t^(3)*q^(5)*T^(2)+ t^(4)*q^(7)*T^(2)+ t^(6)*q^(11)*T^(2)',
    '8_2': 't^(-2)*q^(-1)+ t^(-1)*q^(3)+ 2*q^(3)+ q^(5)+ t*q^(5)+ t*q^(7)+ 2*t^(2)*q^(7)+ t^(2)*q^(9)+ t^(3)*q^(9)+ 2*t^(3)*q^(11)+ t^(4)*q^(11)+ t^(4)*q^(13)+ t^(5)*q^(13)+ t^(5)*q^(15)+ t^(6)*q^(17)+ t^(-1)*q*T^(2)+ t*q^(5)*T^(2)+ t^(2)*q^(7)*T^(2)+ 2*t^(3)*q^(9)*T^(2)+ t^(4)*q^(11)*T^(2)+ t^(5)*q^(13)*T^(2)+ t^(6)*q^(15)*T^(2)',
    '8_3': 't^(-4)*q^(-9)+ t^(-3)*q^(-5)+ 2*t^(-2)*q^(-5)+ t^(-1)*q^(-3)+ 2*t^(-1)*q^(-1)+ 2*q^(-1)+ 2*q+ 2*t*q+ t*q^(3)+ 2*t^(2)*q^(5)+ t^(3)*q^(5)+ t^(4)*q^(9)+ t^(-3)*q^(-7)*T^(2)+ 2*t^(-1)*q^(-3)*T^(2)+ q^(-1)*T^(2)+ t*q*T^(2)+ 2*t^(2)*q^(3)*T^(2)+ t^(4)*q^(7)*T^(2)',
    '8_4': 't^(-4)*q^(-11)+ t^(-3)*q^(-9)+ t^(-3)*q^(-7)+ 2*t^(-2)*q^(-7)+ t^(-2)*q^(-5)+ t^(-1)*q^(-5)+ 2*t^(-1)*q^(-3)+ 2*q^(-3)+ 2*q^(-1)+ 2*t*q^(-1)+ t*q+ 2*t^(2)*q^(3)+ t^(3)*q^(3)+ t^(4)*q^(7)+ t^(-3)*q^(-9)*T^(2)+ t^(-2)*q^(-7)*T^(2)+ 2*t^(-1)*q^(-5)*T^(2)+ q^(-3)*T^(2)+ t*q^(-1)*T^(2)+ 2*t^(2)*q*T^(2)+ t^(4)*q^(5)*T^(2)',
    '8_5': 't^(-2)*q^(-1)+ t^(-1)*q^(3)+ 3*q^(3)+ q^(5)+ t*q^(5)+ 2*t*q^(7)+ 2*t^(2)*q^(7)+ t^(2)*q^(9)+ 2*t^(3)*q^(9)+ 2*t^(3)*q^(11)+ t^(4)*q^(11)+ 2*t^(4)*q^(13)+ t^(5)*q^(13)+ t^(5)*q^(15)+ t^(6)*q^(17)+ t^(-1)*q*T^(2)+ 2*t*q^(5)*T^(2)+ t^(2)*q^(7)*T^(2)+ 2*t^(3)*q^(9)*T^(2)+ 2*t^(4)*q^(11)*T^(2)+ t^(5)*q^(13)*T^(2)+ t^(6)*q^(15)*T^(2)',
    '8_6': 't^(-2)*q^(-3)+ t^(-1)*q+ 3*q+ q^(3)+ 2*t*q^(3)+ 2*t*q^(5)+ 2*t^(2)*q^(5)+ 2*t^(2)*q^(7)+ 2*t^(3)*q^(7)+ 2*t^(3)*q^(9)+ t^(4)*q^(9)+ 2*t^(4)*q^(11)+ t^(5)*q^(11)+ t^(5)*q^(13)+ t^(6)*q^(15)+ t^(-1)*q^(-1)*T^(2)+ 2*t*q^(3)*T^(2)+ 2*t^(2)*q^(5)*T^(2)+ 2*t^(3)*q^(7)*T^(2)+ 2*t^(4)*q^(9)*T^(2)+ t^(5)*q^(11)*T^(2)+ t^(6)*q^(13)*T^(2)',
    '8_7': 't^(-5)*q^(-13)+ t^(-4)*q^(-11)+ t^(-4)*q^(-9)+ 2*t^(-3)*q^(-9)+ t^(-3)*q^(-7)+ 2*t^(-2)*q^(-7)+ 2*t^(-2)*q^(-5)+ 2*t^(-1)*q^(-5)+ 2*t^(-1)*q^(-3)+ 2*q^(-3)+ 3*q^(-1)+ t*q^(-1)+ t*q+ t^(2)*q+ t^(2)*q^(3)+ t^(3)*q^(5)+ t^(-4)*q^(-11)*T^(2)+ t^(-3)*q^(-9)*T^(2)+ 2*t^(-2)*q^(-7)*T^(2)+ 2*t^(-1)*q^(-5)*T^(2)+ 2*q^(-3)*T^(2)+ t*q^(-1)*T^(2)+ t^(2)*q*T^(2)+ t^(3)*q^(3)*T^(2)',
    '8_8': 't^(-5)*q^(-11)+ t^(-4)*q^(-9)+ t^(-4)*q^(-7)+ 2*t^(-3)*q^(-7)+ t^(-3)*q^(-5)+ 2*t^(-2)*q^(-5)+ 2*t^(-2)*q^(-3)+ 2*t^(-1)*q^(-3)+ 2*t^(-1)*q^(-1)+ 3*q^(-1)+ 3*q+ t*q+ 2*t*q^(3)+ t^(2)*q^(3)+ t^(2)*q^(5)+ t^(3)*q^(7)+ t^(-4)*q^(-9)*T^(2)+ t^(-3)*q^(-7)*T^(2)+ 2*t^(-2)*q^(-5)*T^(2)+ 2*t^(-1)*q^(-3)*T^(2)+ 2*q^(-1)*T^(2)+ 2*t*q*T^(2)+ t^(2)*q^(3)*T^(2)+ t^(3)*q^(5)*T^(2)',
    '8_9': 't^(-4)*q^(-9)+ t^(-3)*q^(-7)+ t^(-3)*q^(-5)+ 2*t^(-2)*q^(-5)+ t^(-2)*q^(-3)+ 2*t^(-1)*q^(-3)+ 2*t^(-1)*q^(-1)+ 3*q^(-1)+ 3*q+ 2*t*q+ 2*t*q^(3)+ t^(2)*q^(3)+ 2*t^(2)*q^(5)+ t^(3)*q^(5)+ t^(3)*q^(7)+ t^(4)*q^(9)+ t^(-3)*q^(-7)*T^(2)+ t^(-2)*q^(-5)*T^(2)+ 2*t^(-1)*q^(-3)*T^(2)+ 2*q^(-1)*T^(2)+ 2*t*q*T^(2)+ 2*t^(2)*q^(3)*T^(2)+ t^(3)*q^(5)*T^(2)+ t^(4)*q^(7)*T^(2)',
    '8_10': 't^(-5)*q^(-13)+ t^(-4)*q^(-11)+ t^(-4)*q^(-9)+ 3*t^(-3)*q^(-9)+ t^(-3)*q^(-7)+ 2*t^(-2)*q^(-7)+ 3*t^(-2)*q^(-5)+ 2*t^(-1)*q^(-5)+ 2*t^(-1)*q^(-3)+ 3*q^(-3)+ 3*q^(-1)+ t*q^(-1)+ 2*t*q+ t^(2)*q+ t^(2)*q^(3)+ t^(3)*q^(5)+ t^(-4)*q^(-11)*T^(2)+ t^(-3)*q^(-9)*T^(2)+ 3*t^(-2)*q^(-7)*T^(2)+ 2*t^(-1)*q^(-5)*T^(2)+ 2*q^(-3)*T^(2)+ 2*t*q^(-1)*T^(2)+ t^(2)*q*T^(2)+ t^(3)*q^(3)*T^(2)',
    '8_11': 't^(-2)*q^(-3)+ t^(-1)*q^(-1)+ t^(-1)*q+ 3*q+ 2*q^(3)+ 2*t*q^(3)+ 2*t*q^(5)+ 3*t^(2)*q^(5)+ 2*t^(2)*q^(7)+ 2*t^(3)*q^(7)+ 3*t^(3)*q^(9)+ t^(4)*q^(9)+ 2*t^(4)*q^(11)+ t^(5)*q^(11)+ t^(5)*q^(13)+ t^(6)*q^(15)+ t^(-1)*q^(-1)*T^(2)+ q*T^(2)+ 2*t*q^(3)*T^(2)+ 2*t^(2)*q^(5)*T^(2)+ 3*t^(3)*q^(7)*T^(2)+ 2*t^(4)*q^(9)*T^(2)+ t^(5)*q^(11)*T^(2)+ t^(6)*q^(13)*T^(2)',
    '8_12': 't^(-4)*q^(-9)+ t^(-3)*q^(-7)+ t^(-3)*q^(-5)+ 3*t^(-2)*q^(-5)+ t^(-2)*q^(-3)+ 2*t^(-1)*q^(-3)+ 3*t^(-1)*q^(-1)+ 3*q^(-1)+ 3*q+ 3*t*q+ 2*t*q^(3)+ t^(2)*q^(3)+ 3*t^(2)*q^(5)+ t^(3)*q^(5)+ t^(3)*q^(7)+ t^(4)*q^(9)+ t^(-3)*q^(-7)*T^(2)+ t^(-2)*q^(-5)*T^(2)+ 3*t^(-1)*q^(-3)*T^(2)+ 2*q^(-1)*T^(2)+ 2*t*q*T^(2)+ 3*t^(2)*q^(3)*T^(2)+ t^(3)*q^(5)*T^(2)+ t^(4)*q^(7)*T^(2)',
    '8_13': 't^(-5)*q^(-11)+ t^(-4)*q^(-9)+ t^(-4)*q^(-7)+ 2*t^(-3)*q^(-7)+ t^(-3)*q^(-5)+ 3*t^(-2)*q^(-5)+ 2*t^(-2)*q^(-3)+ 2*t^(-1)*q^(-3)+ 3*t^(-1)*q^(-1)+ 3*q^(-1)+ 3*q+ 2*t*q+ 2*t*q^(3)+ t^(2)*q^(3)+ 2*t^(2)*q^(5)+ t^(3)*q^(7)+ t^(-4)*q^(-9)*T^(2)+ t^(-3)*q^(-7)*T^(2)+ 2*t^(-2)*q^(-5)*T^(2)+ 3*t^(-1)*q^(-3)*T^(2)+ 2*q^(-1)*T^(2)+ 2*t*q*T^(2)+ 2*t^(2)*q^(3)*T^(2)+ t^(3)*q^(5)*T^(2)',
    '8_14': 't^(-2)*q^(-3)+ t^(-1)*q^(-1)+ t^(-1)*q+ 3*q+ 2*q^(3)+ 3*t*q^(3)+ 2*t*q^(5)+ 3*t^(2)*q^(5)+ 3*t^(2)*q^(7)+ 2*t^(3)*q^(7)+ 3*t^(3)*q^(9)+ 2*t^(4)*q^(9)+ 2*t^(4)*q^(11)+ t^(5)*q^(11)+ 2*t^(5)*q^(13)+ t^(6)*q^(15)+ t^(-1)*q^(-1)*T^(2)+ q*T^(2)+ 2*t*q^(3)*T^(2)+ 3*t^(2)*q^(5)*T^(2)+ 3*t^(3)*q^(7)*T^(2)+ 2*t^(4)*q^(9)*T^(2)+ 2*t^(5)*q^(11)*T^(2)+ t^(6)*q^(13)*T^(2)',
    '8_15': 'q^(3)+ q^(5)+ 2*t*q^(5)+ 3*t^(2)*q^(7)+ 2*t^(2)*q^(9)+ 2*t^(3)*q^(9)+ 3*t^(3)*q^(11)+ 4*t^(4)*q^(11)+ 2*t^(4)*q^(13)+ 2*t^(5)*q^(13)+ 4*t^(5)*q^(15)+ 2*t^(6)*q^(15)+ 2*t^(6)*q^(17)+ t^(7)*q^(17)+ 2*t^(7)*q^(19)+ t^(8)*q^(21)+ 2*t^(2)*q^(7)*T^(2)+ 3*t^(3)*q^(9)*T^(2)+ 2*t^(4)*q^(11)*T^(2)+ 4*t^(5)*q^(13)*T^(2)+ 2*t^(6)*q^(15)*T^(2)+ 2*t^(7)*q^(17)*T^(2)+ t^(8)*q^(19)*T^(2)',
    '8_16': 't^(-5)*q^(-13)+ 2*t^(-4)*q^(-11)+ t^(-4)*q^(-9)+ 3*t^(-3)*q^(-9)+ 2*t^(-3)*q^(-7)+ 3*t^(-2)*q^(-7)+ 3*t^(-2)*q^(-5)+ 3*t^(-1)*q^(-5)+ 3*t^(-1)*q^(-3)+ 3*q^(-3)+ 4*q^(-1)+ 2*t*q^(-1)+ 2*t*q+ t^(2)*q+ 2*t^(2)*q^(3)+ t^(3)*q^(5)+ t^(-4)*q^(-11)*T^(2)+ 2*t^(-3)*q^(-9)*T^(2)+ 3*t^(-2)*q^(-7)*T^(2)+ 3*t^(-1)*q^(-5)*T^(2)+ 3*q^(-3)*T^(2)+ 2*t*q^(-1)*T^(2)+ 2*t^(2)*q*T^(2)+ t^(3)*q^(3)*T^(2)',
    '8_17': 't^(-4)*q^(-9)+ 2*t^(-3)*q^(-7)+ t^(-3)*q^(-5)+ 3*t^(-2)*q^(-5)+ 2*t^(-2)*q^(-3)+ 3*t^(-1)*q^(-3)+ 3*t^(-1)*q^(-1)+ 4*q^(-1)+ 4*q+ 3*t*q+ 3*t*q^(3)+ 2*t^(2)*q^(3)+ 3*t^(2)*q^(5)+ t^(3)*q^(5)+ 2*t^(3)*q^(7)+ t^(4)*q^(9)+ t^(-3)*q^(-7)*T^(2)+ 2*t^(-2)*q^(-5)*T^(2)+ 3*t^(-1)*q^(-3)*T^(2)+ 3*q^(-1)*T^(2)+ 3*t*q*T^(2)+ 3*t^(2)*q^(3)*T^(2)+ 2*t^(3)*q^(5)*T^(2)+ t^(4)*q^(7)*T^(2)',
    '8_18': 't^(-4)*q^(-9)+ 3*t^(-3)*q^(-7)+ t^(-3)*q^(-5)+ 3*t^(-2)*q^(-5)+ 3*t^(-2)*q^(-3)+ 4*t^(-1)*q^(-3)+ 3*t^(-1)*q^(-1)+ 5*q^(-1)+ 5*q+ 3*t*q+ 4*t*q^(3)+ 3*t^(2)*q^(3)+ 3*t^(2)*q^(5)+ t^(3)*q^(5)+ 3*t^(3)*q^(7)+ t^(4)*q^(9)+ t^(-3)*q^(-7)*T^(2)+ 3*t^(-2)*q^(-5)*T^(2)+ 3*t^(-1)*q^(-3)*T^(2)+ 4*q^(-1)*T^(2)+ 4*t*q*T^(2)+ 3*t^(2)*q^(3)*T^(2)+ 3*t^(3)*q^(5)*T^(2)+ t^(4)*q^(7)*T^(2)',
    '8_19': 'q^(5)+ q^(7)+ t^(2)*q^(9)+ t^(3)*q^(13)+ t^(4)*q^(11)+ t^(4)*q^(13)+ t^(5)*q^(15)+ t^(5)*q^(17)+ t^(3)*q^(11)*T^(2)',
    '8_20': 't^(-5)*q^(-11)+ t^(-4)*q^(-7)+ t^(-3)*q^(-7)+ t^(-2)*q^(-5)+ t^(-2)*q^(-3)+ t^(-1)*q^(-1)+ 2*q^(-1)+ q+ t*q^(3)+ t^(-4)*q^(-9)*T^(2)+ t^(-2)*q^(-5)*T^(2)+ t^(-1)*q^(-3)*T^(2)+ t*q*T^(2)',
    '8_21': '2*q+ q^(3)+ t*q^(3)+ t*q^(5)+ 2*t^(2)*q^(5)+ t^(2)*q^(7)+ t^(3)*q^(7)+ 2*t^(3)*q^(9)+ t^(4)*q^(9)+ t^(4)*q^(11)+ t^(5)*q^(11)+ t^(5)*q^(13)+ t^(6)*q^(15)+ t*q^(3)*T^(2)+ t^(2)*q^(5)*T^(2)+ 2*t^(3)*q^(7)*T^(2)+ t^(4)*q^(9)*T^(2)+ t^(5)*q^(11)*T^(2)+ t^(6)*q^(13)*T^(2)',
}


def knot(name: str) -> LinkDiagram:
    for n, pd, _ in KNOTS:
        if n == name:
            return parse_pd(pd)
    raise KeyError(name)


def knots(max_crossings: int = 8) -> list:
    """``(name, diagram, alternating)`` for every corpus knot."""
    return [(n, parse_pd(pd), alt) for n, pd, alt in KNOTS
            if int(n.split("_")[0]) <= max_crossings]


def random_braids(count: int = 20, seed: int = 0, max_crossings: int = 10,
                  min_strands: int = 2, max_strands: int = 4) -> list:
    """``(word, strands)`` pairs drawn from a seeded generator.

    Every generator index occurs in the word, so closures are
    non-split diagrams.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        strands = rng.randint(min_strands, max_strands)
        length = rng.randint(strands - 1, max_crossings)
        word = [rng.choice((-1, 1)) * rng.randint(1, strands - 1) for _ in range(length)]
        if {abs(g) for g in word} != set(range(1, strands)):
            continue
        out.append((tuple(word), strands))
    return out


def corpus(seed: int = 0, n_braids: int = 20, max_crossings: int = 8) -> list:
    """``(name, diagram, alternating)`` for knots and braid closures.

    Braid closures are marked non-alternating regardless of their
    actual type.
    """
    items = knots(max_crossings)
    for word, strands in random_braids(n_braids, seed):
        name = "braid[" + " ".join(map(str, word)) + "]"
        items.append((name, parse_braid(word, strands), False))
    return items


def knotinfo_table(name: str) -> dict:
    """KnotInfo's Khovanov polynomial as ``{(i, j): (rank, torsion)}``."""
    table = {}
    text = KNOTINFO_KH[name].replace(" ", "")
    for term in re.split(r"\+(?![^(]*\))", text):
        coef, i, j, tors = 1, 0, 0, None
        for factor in term.split("*"):
            m = re.fullmatch(r"([tqT])(?:\^\((-?\d+)\))?", factor)
            if m is None:
                coef = int(factor)
                continue
            e = int(m.group(2)) if m.group(2) else 1
            if m.group(1) == "t":
                i = e
            elif m.group(1) == "q":
                j = e
            else:
                tors = e
        rank, torsion = table.get((i, j), (0, ()))
        if tors is None:
            rank += coef
        else:
            torsion = tuple(sorted(torsion + (tors,) * coef))
        table[(i, j)] = (rank, torsion)
    return table
