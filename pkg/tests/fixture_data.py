# Frozen fixture data: polyomino shapes, cell-to-placement
# mappings, and layer assignments used across the test suite.
# Each mapping entry is {(row, col): (face, north, east)}.

FIXTURES = {
    'coop_adjacent_rows': {
        'shape': 'POLYOMINO v1\nrows: 4\ncols: 5\ngrid:\n#####\n#.###\n###.#\n#####\nslits:\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (0, 2): (5, 3, 6), (0, 3): (6, 3, 2), (0, 4): (2, 3, 1), (1, 0): (4, 2, 1), (1, 2): (5, 4, 6), (1, 3): (6, 4, 2), (1, 4): (2, 4, 1), (2, 0): (4, 5, 1), (2, 1): (1, 5, 3), (2, 2): (3, 5, 6), (2, 4): (2, 3, 1), (3, 0): (4, 2, 1), (3, 1): (1, 2, 3), (3, 2): (3, 2, 6), (3, 3): (6, 2, 4), (3, 4): (4, 2, 1)},
    },
    'coop_same_row': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 5\ngrid:\n#####\n#.#.#\n#####\nslits:\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (0, 2): (5, 3, 6), (0, 3): (6, 3, 2), (0, 4): (2, 3, 1), (1, 0): (4, 2, 1), (1, 2): (5, 4, 6), (1, 4): (4, 2, 1), (2, 0): (4, 5, 1), (2, 1): (1, 5, 3), (2, 2): (3, 5, 6), (2, 3): (6, 5, 4), (2, 4): (4, 5, 1)},
    },
    'cross_net': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 4\ngrid:\n..#.\n####\n..#.\nslits:\n',
        'mapping': {(0, 2): (3, 5, 1), (1, 0): (5, 3, 6), (1, 1): (6, 3, 2), (1, 2): (2, 3, 1), (1, 3): (1, 3, 5), (2, 2): (4, 2, 1)},
    },
    'fan': {
        'shape': 'POLYOMINO v1\nrows: 7\ncols: 8\ngrid:\n#.......\n#######.\n#######.\n.#######\n########\n######.#\n#.......\nslits:\nH 1 1\nH 1 5\nH 2 1\nH 2 5\nH 3 1\nH 3 5\nH 3 6\nH 4 1\nH 4 5\nV 1 5\nV 2 0\nV 3 5\nV 3 6\nV 4 0\n',
        'mapping': {(0, 0): (3, 6, 2), (1, 0): (1, 3, 2), (1, 1): (2, 3, 6), (1, 2): (2, 3, 1), (1, 3): (1, 3, 5), (1, 4): (5, 3, 6), (1, 5): (6, 3, 2), (1, 6): (4, 6, 2), (2, 0): (4, 1, 2), (2, 1): (6, 4, 2), (2, 2): (2, 4, 1), (2, 3): (1, 4, 5), (2, 4): (5, 4, 6), (2, 5): (5, 4, 1), (2, 6): (1, 4, 2), (3, 1): (6, 3, 2), (3, 2): (2, 3, 1), (3, 3): (1, 3, 5), (3, 4): (5, 3, 6), (3, 5): (6, 3, 2), (3, 6): (3, 1, 2), (3, 7): (4, 5, 6), (4, 0): (3, 6, 2), (4, 1): (6, 4, 2), (4, 2): (2, 4, 1), (4, 3): (1, 4, 5), (4, 4): (5, 4, 6), (4, 5): (5, 4, 1), (4, 6): (1, 4, 2), (4, 7): (2, 4, 6), (5, 0): (1, 3, 2), (5, 1): (2, 3, 6), (5, 2): (2, 3, 1), (5, 3): (1, 3, 5), (5, 4): (5, 3, 6), (5, 5): (6, 3, 2), (5, 7): (3, 2, 6), (6, 0): (4, 1, 2)},
    },
    'islit_a': {
        'shape': 'POLYOMINO v1\nrows: 4\ncols: 2\ngrid:\n##\n##\n##\n##\nslits:\nV 1 0\nV 2 0\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (2, 3, 6), (1, 0): (2, 4, 1), (1, 1): (4, 2, 6), (2, 0): (2, 3, 1), (2, 1): (4, 5, 6), (3, 0): (2, 4, 1), (3, 1): (2, 4, 6)},
    },
    'islit_b': {
        'shape': 'POLYOMINO v1\nrows: 4\ncols: 2\ngrid:\n##\n##\n##\n##\nslits:\nV 1 0\nV 2 0\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (2, 3, 6), (1, 0): (2, 4, 1), (1, 1): (4, 2, 6), (2, 0): (2, 3, 1), (2, 1): (4, 5, 6), (3, 0): (4, 2, 1), (3, 1): (4, 2, 6)},
    },
    'islit_c': {
        'shape': 'POLYOMINO v1\nrows: 4\ncols: 2\ngrid:\n##\n##\n##\n##\nslits:\nV 1 0\nV 2 0\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (2, 3, 6), (1, 0): (2, 4, 1), (1, 1): (4, 2, 6), (2, 0): (3, 2, 1), (2, 1): (5, 4, 6), (3, 0): (3, 5, 1), (3, 1): (3, 5, 6)},
    },
    'islit_d': {
        'shape': 'POLYOMINO v1\nrows: 4\ncols: 2\ngrid:\n##\n##\n##\n##\nslits:\nV 1 0\nV 2 0\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (2, 3, 6), (1, 0): (2, 4, 1), (1, 1): (4, 2, 6), (2, 0): (3, 2, 1), (2, 1): (5, 4, 6), (3, 0): (5, 3, 1), (3, 1): (5, 3, 6)},
    },
    'islit_e': {
        'shape': 'POLYOMINO v1\nrows: 4\ncols: 2\ngrid:\n##\n##\n##\n##\nslits:\nV 1 0\nV 2 0\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (1, 0): (2, 4, 1), (1, 1): (4, 1, 5), (2, 0): (2, 3, 1), (2, 1): (4, 6, 5), (3, 0): (2, 4, 1), (3, 1): (1, 4, 5)},
    },
    'islit_f': {
        'shape': 'POLYOMINO v1\nrows: 4\ncols: 2\ngrid:\n##\n##\n##\n##\nslits:\nV 1 0\nV 2 0\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (1, 0): (4, 2, 1), (1, 1): (4, 1, 5), (2, 0): (4, 5, 1), (2, 1): (4, 6, 5), (3, 0): (2, 4, 1), (3, 1): (1, 4, 5)},
    },
    'knotted_frame': {
        'shape': 'POLYOMINO v1\nrows: 4\ncols: 6\ngrid:\n..##..\n######\n######\n.####.\nslits:\nH 1 1\nH 1 2\nH 1 3\nH 1 4\nV 1 2\nV 2 1\nV 2 3\nV 3 2\n',
        'mapping': {(0, 2): (5, 3, 1), (0, 3): (1, 3, 2), (1, 0): (2, 4, 6), (1, 1): (6, 4, 5), (1, 2): (5, 4, 1), (1, 3): (1, 4, 2), (1, 4): (2, 4, 6), (1, 5): (2, 4, 1), (2, 0): (2, 3, 6), (2, 1): (2, 3, 1), (2, 2): (1, 3, 5), (2, 3): (5, 3, 6), (2, 4): (6, 3, 2), (2, 5): (2, 3, 1), (3, 1): (2, 4, 1), (3, 2): (1, 4, 5), (3, 3): (5, 4, 6), (3, 4): (6, 4, 2)},
        'layers': {(0, 2): 4, (0, 3): 3, (1, 0): 7, (1, 1): 2, (1, 2): 1, (1, 3): 2, (1, 4): 1, (1, 5): 5, (2, 0): 4, (2, 1): 2, (2, 2): 1, (2, 3): 3, (2, 4): 1, (2, 5): 6, (3, 1): 3, (3, 2): 4, (3, 3): 2, (3, 4): 3},
    },
    'twist': {
        'shape': 'POLYOMINO v1\nrows: 4\ncols: 4\ngrid:\n#...\n####\n#..#\n####\nslits:\n',
        'mapping': {(0, 0): (3, 5, 1), (1, 0): (2, 3, 1), (1, 1): (1, 3, 5), (1, 2): (5, 3, 6), (1, 3): (6, 3, 2), (2, 0): (4, 2, 1), (2, 3): (4, 6, 2), (3, 0): (5, 4, 1), (3, 1): (1, 4, 2), (3, 2): (1, 4, 5), (3, 3): (1, 4, 2)},
        'layers': {(0, 0): 1, (1, 0): 1, (1, 1): 1, (1, 2): 1, (1, 3): 1, (2, 0): 2, (2, 3): 1, (3, 0): 2, (3, 1): 4, (3, 2): 3, (3, 3): 2},
    },
    'twisted_ring': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 8\ngrid:\n########\n#......#\n########\nslits:\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (0, 2): (5, 3, 6), (0, 3): (6, 3, 2), (0, 4): (2, 3, 1), (0, 5): (1, 3, 5), (0, 6): (5, 3, 6), (0, 7): (6, 3, 2), (1, 0): (4, 2, 1), (1, 7): (4, 6, 2), (2, 0): (5, 4, 1), (2, 1): (1, 4, 2), (2, 2): (2, 4, 6), (2, 3): (2, 4, 1), (2, 4): (2, 4, 6), (2, 5): (6, 4, 5), (2, 6): (5, 4, 1), (2, 7): (1, 4, 2)},
        'layers': {(0, 0): 2, (0, 1): 2, (0, 2): 2, (0, 3): 2, (0, 4): 1, (0, 5): 1, (0, 6): 1, (0, 7): 1, (1, 0): 1, (1, 7): 2, (2, 0): 4, (2, 1): 4, (2, 2): 5, (2, 3): 4, (2, 4): 3, (2, 5): 3, (2, 6): 3, (2, 7): 3},
    },
    'unit_hole_grid': {
        'shape': 'POLYOMINO v1\nrows: 4\ncols: 4\ngrid:\n..#.\n###.\n#.##\n###.\nslits:\n',
        'mapping': {(0, 2): (3, 2, 6), (1, 0): (2, 3, 1), (1, 1): (1, 3, 5), (1, 2): (5, 3, 6), (2, 0): (4, 2, 1), (2, 2): (4, 5, 6), (2, 3): (6, 5, 3), (3, 0): (5, 4, 1), (3, 1): (1, 4, 2), (3, 2): (2, 4, 6)},
    },
    'unit_hole_ring_half': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 3\ngrid:\n###\n#.#\n###\nslits:\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (0, 2): (5, 3, 6), (1, 0): (4, 2, 1), (1, 2): (5, 4, 6), (2, 0): (4, 5, 1), (2, 1): (1, 5, 3), (2, 2): (3, 5, 6)},
    },
    'unit_hole_ring_quarter': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 3\ngrid:\n###\n#.#\n###\nslits:\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (0, 2): (5, 3, 6), (1, 0): (4, 2, 1), (1, 2): (4, 5, 6), (2, 0): (5, 4, 1), (2, 1): (1, 4, 2), (2, 2): (2, 4, 6)},
    },
    'uslit_a': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 3\ngrid:\n###\n###\n###\nslits:\nH 1 1\nV 1 0\nV 1 1\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (2, 3, 6), (0, 2): (2, 3, 1), (1, 0): (2, 4, 1), (1, 1): (4, 2, 6), (1, 2): (2, 4, 1), (2, 0): (2, 3, 1), (2, 1): (2, 3, 6), (2, 2): (2, 3, 1)},
    },
    'uslit_b': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 3\ngrid:\n###\n###\n###\nslits:\nH 1 1\nV 1 0\nV 1 1\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (2, 3, 6), (0, 2): (2, 3, 1), (1, 0): (2, 4, 1), (1, 1): (4, 2, 6), (1, 2): (2, 4, 1), (2, 0): (3, 2, 1), (2, 1): (3, 2, 6), (2, 2): (3, 2, 1)},
    },
    'uslit_c': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 3\ngrid:\n###\n###\n###\nslits:\nH 1 1\nV 1 0\nV 1 1\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (0, 2): (1, 3, 2), (1, 0): (2, 4, 1), (1, 1): (4, 1, 5), (1, 2): (1, 4, 2), (2, 0): (2, 3, 1), (2, 1): (1, 3, 5), (2, 2): (1, 3, 2)},
    },
    'uslit_d': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 3\ngrid:\n###\n###\n###\nslits:\nH 1 1\nV 1 0\nV 1 1\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (0, 2): (5, 3, 6), (1, 0): (2, 4, 1), (1, 1): (4, 1, 5), (1, 2): (5, 4, 6), (2, 0): (2, 3, 1), (2, 1): (1, 3, 5), (2, 2): (5, 3, 6)},
    },
    'uslit_e': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 3\ngrid:\n###\n###\n###\nslits:\nH 1 1\nV 1 0\nV 1 1\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (0, 2): (5, 3, 6), (1, 0): (2, 4, 1), (1, 1): (4, 1, 5), (1, 2): (4, 5, 6), (2, 0): (3, 2, 1), (2, 1): (1, 2, 4), (2, 2): (4, 2, 6)},
    },
    'uslit_f': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 3\ngrid:\n###\n###\n###\nslits:\nH 1 1\nV 1 0\nV 1 1\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (0, 2): (1, 3, 2), (1, 0): (4, 2, 1), (1, 1): (4, 1, 5), (1, 2): (4, 1, 2), (2, 0): (5, 4, 1), (2, 1): (5, 4, 6), (2, 2): (6, 4, 2)},
    },
    'uslit_g': {
        'shape': 'POLYOMINO v1\nrows: 3\ncols: 3\ngrid:\n###\n###\n###\nslits:\nH 1 1\nV 1 0\nV 1 1\n',
        'mapping': {(0, 0): (2, 3, 1), (0, 1): (1, 3, 5), (0, 2): (5, 3, 6), (1, 0): (4, 2, 1), (1, 1): (4, 1, 5), (1, 2): (4, 5, 6), (2, 0): (5, 4, 1), (2, 1): (1, 4, 2), (2, 2): (2, 4, 6)},
    },
    'pw': {'shape': 'POLYOMINO v1\nrows: 4\ncols: 4\ngrid:\n...#\n...#\n..##\n###.\nslits:\n'},
    'corner_demo': {'shape': 'POLYOMINO v1\nrows: 8\ncols: 6\ngrid:\n###...\n#.###.\n######\n#..###\n#.###.\n#####.\n###.##\n.....#\nslits:\nH 1 0\nV 2 1\n',
        'points': {'v': (3, 3), 'w': (2, 5)}},
}
