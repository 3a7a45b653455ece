"""Frozen expected bound-table rows: (c, LB, UB, ratio text)."""

EXPECTED_ROWS = [
    (1, 1, 1, '1'),
    (2, 2, 4, '2'),
    (3, 3, 9, '3'),
    (4, 5, 12, '2.4'),
    (5, 7, 20, '2.85'),
    (6, 9, 24, '2.66'),
    (7, 11, 28, '2.54'),
    (8, 13, 32, '2.46'),
    (9, 15, 45, '3'),
    (10, 18, 50, '2.77'),
    (11, 21, 55, '2.61'),
    (12, 24, 60, '2.5'),
    (13, 27, 65, '2.40'),
    (14, 30, 70, '2.33'),
    (15, 33, 75, '2.27'),
    (16, 36, 80, '2.22'),
    (17, 39, 102, '2.61'),
    (18, 42, 108, '2.57'),
    (19, 45, 114, '2.53'),
    (20, 48, 120, '2.5'),
    (21, 51, 126, '2.47'),
    (22, 55, 132, '2.4'),
    (23, 59, 138, '2.33'),
    (24, 63, 144, '2.28'),
    (25, 67, 150, '2.23'),
    (26, 71, 156, '2.19'),
    (27, 75, 162, '2.16'),
    (28, 79, 168, '2.12'),
    (29, 83, 174, '2.09'),
    (30, 87, 180, '2.06'),
    (31, 91, 186, '2.04'),
    (32, 95, 192, '2.02'),
    (33, 99, 231, '2.33'),
    (34, 103, 238, '2.31'),
    (35, 107, 245, '2.28'),
    (36, 111, 252, '2.27'),
    (37, 115, 259, '2.25'),
    (38, 119, 266, '2.23'),
    (39, 123, 273, '2.21'),
    (40, 127, 280, '2.20'),
    (41, 131, 287, '2.19'),
    (42, 135, 294, '2.17'),
    (43, 139, 301, '2.16'),
    (44, 143, 308, '2.15'),
    (45, 147, 315, '2.14'),
    (46, 152, 322, '2.11'),
    (47, 157, 329, '2.09'),
    (48, 162, 336, '2.07'),
    (49, 167, 343, '2.05'),
    (50, 172, 350, '2.03'),
    (51, 177, 357, '2.01'),
    (52, 182, 364, '2'),
    (53, 187, 371, '1.98'),
    (54, 192, 378, '1.96'),
    (55, 197, 385, '1.95'),
    (56, 202, 392, '1.94'),
    (57, 207, 399, '1.92'),
    (58, 212, 406, '1.91'),
    (59, 217, 413, '1.90'),
    (60, 222, 420, '1.89'),
    (61, 227, 427, '1.88'),
    (62, 232, 434, '1.87'),
    (63, 237, 441, '1.86'),
    (64, 242, 448, '1.85'),
    (65, 247, 520, '2.10'),
    (66, 252, 528, '2.09'),
    (67, 257, 536, '2.08'),
    (68, 262, 544, '2.07'),
    (69, 267, 552, '2.06'),
    (70, 272, 560, '2.05'),
    (71, 277, 568, '2.05'),
    (72, 282, 576, '2.04'),
    (73, 287, 584, '2.03'),
    (74, 292, 592, '2.02'),
    (75, 297, 600, '2.02'),
    (76, 302, 608, '2.01'),
    (77, 307, 616, '2.00'),
    (78, 312, 624, '2'),
    (79, 317, 632, '1.99'),
    (80, 322, 640, '1.98'),
    (81, 327, 648, '1.98'),
    (82, 332, 656, '1.97'),
    (83, 337, 664, '1.97'),
    (84, 342, 672, '1.96'),
    (85, 347, 680, '1.95'),
    (86, 352, 688, '1.95'),
    (87, 357, 696, '1.94'),
    (88, 362, 704, '1.94'),
    (89, 367, 712, '1.94'),
    (90, 372, 720, '1.93'),
    (91, 377, 728, '1.93'),
    (92, 382, 736, '1.92'),
    (93, 387, 744, '1.92'),
    (94, 393, 752, '1.91'),
    (95, 399, 760, '1.90'),
    (96, 405, 768, '1.89'),
    (97, 411, 776, '1.88'),
    (98, 417, 784, '1.88'),
    (99, 423, 792, '1.87'),
    (100, 429, 800, '1.86'),
    (101, 435, 808, '1.85'),
    (102, 441, 816, '1.85'),
    (103, 447, 824, '1.84'),
    (104, 453, 832, '1.83'),
    (105, 459, 840, '1.83'),
    (106, 465, 848, '1.82'),
    (107, 471, 856, '1.81'),
    (108, 477, 864, '1.81'),
    (109, 483, 872, '1.80'),
    (110, 489, 880, '1.79'),
    (111, 495, 888, '1.79'),
    (112, 501, 896, '1.78'),
    (113, 507, 904, '1.78'),
    (114, 513, 912, '1.77'),
    (115, 519, 920, '1.77'),
    (116, 525, 928, '1.76'),
    (117, 531, 936, '1.76'),
    (118, 537, 944, '1.75'),
    (119, 543, 952, '1.75'),
    (120, 549, 960, '1.74'),
    (121, 555, 968, '1.74'),
    (122, 561, 976, '1.73'),
    (123, 567, 984, '1.73'),
    (124, 573, 992, '1.73'),
    (125, 579, 1000, '1.72'),
    (126, 585, 1008, '1.72'),
    (127, 591, 1016, '1.71'),
]
