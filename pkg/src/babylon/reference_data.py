"""Published Euler-brick tables and counts, transcribed as printed.

The rows are kept verbatim, errors included, so that comparisons against a
fresh enumeration can itemize every disagreement.
"""

PUBLISHED_BRICK_COUNTS = {300: 2, 1000: 10, 2000: 25, 4000: 54, 8000: 120}

PUBLISHED_BRICKS_300 = ((44, 117, 240), (240, 252, 275))

PUBLISHED_BRICKS_1000 = (
    (44, 117, 240), (85, 132, 720), (88, 234, 480), (132, 351, 720), (140, 480, 693),
    (160, 231, 792), (176, 468, 960), (240, 252, 275), (480, 504, 550),
    (720, 756, 825),
)

# the "additional" rows claimed for sides <= 2000
PUBLISHED_BRICKS_2000_EXTRA = (
    (170, 264, 1440), (187, 1020, 1584), (220, 585, 1200), (264, 702, 1440),
    (280, 960, 1386), (308, 819, 1680), (320, 462, 1584), (352, 936, 1920),
    (480, 504, 550), (720, 756, 825), (960, 1008, 1100), (1008, 1100, 1155),
    (1200, 1260, 1375), (1440, 1512, 1650), (1680, 1764, 1925),
)

PUBLISHED_BRICKS_8000 = (
    (44, 117, 240), (85, 132, 720), (88, 234, 480), (132, 351, 720), (140, 480, 693),
    (160, 231, 792), (170, 264, 1440), (176, 468, 960), (187, 1020, 1584),
    (195, 748, 6336), (220, 585, 1200), (240, 252, 275), (255, 396, 2160),
    (264, 702, 1440), (280, 960, 1386), (308, 819, 1680), (320, 462, 1584),
    (340, 528, 2880), (352, 936, 1920), (374, 2040, 3168), (396, 1053, 2160),
    (420, 1440, 2079), (425, 660, 3600), (429, 880, 2340), (440, 1170, 2400),
    (480, 504, 550), (480, 693, 2376), (484, 1287, 2640), (510, 792, 4320),
    (528, 1404, 2880), (528, 5796, 6325), (560, 1920, 2772), (561, 3060, 4752),
    (572, 1521, 3120), (595, 924, 5040), (616, 15, 3360), (640, 924, 3168),
    (660, 1755, 3600), (680, 1056, 5760), (700, 2400, 3465), (704, 1872, 3840),
    (720, 756, 825), (748, 1989, 4080), (748, 4080, 6336), (765, 1188, 6480),
    (780, 2475, 2992), (792, 2106, 4320), (800, 1155, 3960), (828, 2035, 3120),
    (832, 855, 2640), (836, 2223, 4560), (840, 2880, 4158), (850, 1320, 7200),
    (858, 1760, 4680), (880, 2340, 4800), (924, 2457, 5040), (935, 1452, 7920),
    (935, 5100, 7920), (960, 1008, 1100), (960, 1386, 4752), (968, 2574, 5280),
    (980, 3360, 4851), (1008, 1100, 1155), (1012, 2691, 5520), (1056, 2808, 5760),
    (1100, 2925, 6000), (1120, 1617, 5544), (1120, 3840, 5544), (1144, 3042, 6240),
    (1155, 6300, 6688), (1188, 3159, 6480), (1200, 1260, 1375), (1232, 3276, 6720),
    (1260, 4320, 6237), (1276, 3393, 6960), (1280, 1848, 6336), (1287, 2640, 7020),
    (1320, 3510, 7200), (1364, 3627, 7440), (1400, 4800, 6930), (1408, 3744, 7680),
    (1440, 1512, 1650), (1440, 2079, 7128), (1452, 3861, 7920), (1540, 5280, 7623),
    (1560, 2295, 5984), (1560, 4950, 5984), (1600, 2310, 7920), (1656, 4070, 6240),
    (1664, 1710, 5280), (1680, 1764, 1925), (1755, 4576, 6732), (1920, 2016, 2200),
    (2016, 2200, 2310), (2160, 2268, 2475), (2400, 2520, 2750), (2496, 2565, 7920),
    (2640, 2772, 3025), (2880, 3024, 3300), (3024, 3300, 3465), (3120, 3276, 3575),
    (3360, 3528, 3850), (3600, 3780, 4125), (3840, 4032, 4400), (4032, 4400, 4620),
    (4080, 4284, 4675), (4320, 4536, 4950), (4560, 4788, 5225), (4800, 5040, 5500),
    (5040, 5292, 5775), (5040, 5500, 5775), (5280, 5544, 6050), (5520, 5796, 6325),
    (5760, 6048, 6600), (6000, 6300, 6875), (6048, 6600, 6930), (6240, 6552, 7150),
    (6480, 6804, 7425), (6720, 7056, 7700), (6960, 7308, 7975),
)

PUBLISHED_DIAMETERS = {5000: 18, 10000: 29}
PLANARITY_THRESHOLD = 95
OZANAM_TRIPLE = (1873432, 2288168, 2399057)
HALCKE_BRICK = (44, 117, 240)
