"""Edge data for the three embedded degree-8 triangulations.

Transcribed from vector figure sources; each tuple is (i1, j1, i2, j2).
A transcription error would surface as a validation failure.
"""

BOWTIE8 = (
    (0,0,0,1), (0,0,1,0), (0,0,1,1), (0,0,1,2), (0,0,1,3), (0,0,1,4),
    (0,0,1,5), (0,0,1,6), (0,0,1,7), (0,1,0,2), (0,1,1,7), (0,2,0,3),
    (0,2,1,7), (0,3,0,4), (0,3,1,7), (0,4,0,5), (0,4,1,7), (0,5,0,6),
    (0,5,1,7), (0,6,0,7), (0,6,1,7), (0,7,0,8), (0,7,1,7), (0,8,1,7),
    (1,0,1,1), (1,0,2,0), (1,1,1,2), (1,1,2,0), (1,1,2,1), (1,1,2,2),
    (1,1,2,3), (1,1,2,4), (1,1,2,5), (1,1,2,6), (1,1,3,0), (1,1,4,0),
    (1,1,5,0), (1,1,6,0), (1,1,7,0), (1,1,8,0), (1,2,1,3), (1,2,2,6),
    (1,3,1,4), (1,3,2,6), (1,4,1,5), (1,4,2,6), (1,5,1,6), (1,5,2,6),
    (1,6,1,7), (1,6,2,6), (1,7,2,6), (2,0,3,0), (2,1,2,2), (2,1,3,1),
    (2,1,8,0), (2,2,2,3), (2,2,3,1), (2,2,3,2), (2,2,3,3), (2,2,3,4),
    (2,2,3,5), (2,2,4,1), (2,2,5,1), (2,2,6,1), (2,2,7,1), (2,3,2,4),
    (2,3,3,5), (2,4,2,5), (2,4,3,5), (2,5,2,6), (2,5,3,5), (2,6,3,5),
    (3,0,4,0), (3,1,4,1), (3,1,8,0), (3,2,3,3), (3,2,4,2), (3,2,7,1),
    (3,3,3,4), (3,3,4,2), (3,3,4,3), (3,3,4,4), (3,3,5,2), (3,3,6,2),
    (3,4,3,5), (3,4,4,4), (3,5,4,4), (4,0,5,0), (4,1,5,1), (4,1,8,0),
    (4,2,5,2), (4,2,7,1), (4,3,4,4), (4,3,5,3), (4,3,6,2), (4,4,5,3),
    (5,0,6,0), (5,1,6,1), (5,1,8,0), (5,2,6,2), (5,2,7,1), (5,3,6,2),
    (6,0,7,0), (6,1,7,1), (6,1,8,0), (6,2,7,1), (7,0,8,0), (7,1,8,0),
)

FIG2_MIDDLE8 = (
    (0,0,0,1), (0,0,1,0), (0,1,0,2), (0,1,1,0), (0,1,1,1), (0,2,0,3),
    (0,2,1,1), (0,3,0,4), (0,3,1,1), (0,4,0,5), (0,4,1,1), (0,5,0,6),
    (0,5,1,1), (0,6,0,7), (0,6,1,1), (0,7,0,8), (0,7,1,1), (0,8,1,1),
    (0,8,1,2), (0,8,1,3), (0,8,1,4), (0,8,1,5), (0,8,1,6), (0,8,1,7),
    (1,0,1,1), (1,0,2,0), (1,1,1,2), (1,1,2,0), (1,1,2,1), (1,1,3,0),
    (1,1,4,0), (1,1,5,0), (1,1,6,0), (1,1,7,0), (1,1,8,0), (1,2,1,3),
    (1,2,2,1), (1,2,2,2), (1,3,1,4), (1,3,2,2), (1,4,1,5), (1,4,2,2),
    (1,5,1,6), (1,5,2,2), (1,6,1,7), (1,6,2,2), (1,7,2,2), (1,7,2,3),
    (1,7,2,4), (1,7,2,5), (1,7,2,6), (2,0,3,0), (2,1,2,2), (2,1,3,1),
    (2,1,8,0), (2,2,2,3), (2,2,3,1), (2,2,3,2), (2,2,4,1), (2,2,5,1),
    (2,2,6,1), (2,2,7,1), (2,3,2,4), (2,3,3,2), (2,3,3,3), (2,4,2,5),
    (2,4,3,3), (2,4,3,4), (2,4,3,5), (2,5,2,6), (2,5,3,5), (2,6,3,5),
    (3,0,4,0), (3,1,4,1), (3,1,8,0), (3,2,3,3), (3,2,4,2), (3,2,7,1),
    (3,3,3,4), (3,3,4,2), (3,3,4,3), (3,4,3,5), (3,4,4,3), (3,4,4,4),
    (3,5,4,4), (4,0,5,0), (4,1,5,1), (4,1,8,0), (4,2,4,3), (4,2,5,2),
    (4,2,5,3), (4,2,7,1), (4,3,4,4), (4,3,5,3), (4,4,5,3), (5,0,6,0),
    (5,1,6,1), (5,1,8,0), (5,2,5,3), (5,2,6,2), (5,2,7,1), (5,3,6,2),
    (6,0,7,0), (6,1,7,1), (6,1,8,0), (6,2,7,1), (7,0,8,0), (7,1,8,0),
)

FIG2_RIGHT8 = (
    (0,0,0,1), (0,0,1,0), (0,1,0,2), (0,1,1,0), (0,1,1,1), (0,2,0,3),
    (0,2,1,1), (0,2,1,2), (0,2,2,1), (0,2,3,1), (0,3,0,4), (0,3,1,2),
    (0,3,1,3), (0,3,1,4), (0,3,2,2), (0,3,2,4), (0,3,3,1), (0,3,3,4),
    (0,3,3,5), (0,3,5,0), (0,4,0,5), (0,4,1,4), (0,5,0,6), (0,5,1,4),
    (0,5,1,5), (0,6,0,7), (0,6,1,5), (0,6,1,6), (0,7,0,8), (0,7,1,6),
    (0,7,1,7), (0,8,1,7), (1,0,1,1), (1,0,2,0), (1,0,2,1), (1,1,2,1),
    (1,2,3,1), (1,3,2,2), (1,3,2,3), (1,3,3,2), (1,3,3,4), (1,3,4,1),
    (1,3,5,0), (1,4,1,5), (1,4,2,5), (1,4,3,5), (1,5,1,6), (1,5,2,5),
    (1,6,1,7), (1,6,2,5), (1,6,2,6), (1,7,2,6), (2,0,2,1), (2,0,3,0),
    (2,1,3,0), (2,1,3,1), (2,2,5,0), (2,3,3,2), (2,3,3,3), (2,3,3,4),
    (2,4,3,4), (2,4,3,5), (2,5,2,6), (2,5,3,5), (2,6,3,5), (3,0,3,1),
    (3,0,4,0), (3,1,4,0), (3,1,5,0), (3,2,3,3), (3,2,4,1), (3,3,3,4),
    (3,3,4,1), (3,4,3,5), (3,4,4,1), (3,5,4,1), (3,5,4,2), (3,5,4,3),
    (3,5,4,4), (3,5,5,0), (4,0,5,0), (4,1,4,2), (4,1,5,0), (4,2,5,0),
    (4,3,4,4), (4,3,5,0), (4,3,5,1), (4,3,5,2), (4,4,5,2), (4,4,5,3),
    (5,0,5,1), (5,0,6,0), (5,1,5,2), (5,1,6,0), (5,1,6,1), (5,2,5,3),
    (5,2,6,1), (5,2,6,2), (5,3,6,2), (6,0,6,1), (6,0,7,0), (6,1,6,2),
    (6,1,7,0), (6,1,7,1), (6,2,7,1), (7,0,7,1), (7,0,8,0), (7,1,8,0),
)

