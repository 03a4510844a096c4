"""Published operation tables, transcribed row by row for golden comparisons.

Rows are keyed by the first argument; columns follow element declaration
order.  None marks an undefined cell of a partial table.
"""

HEXAGON_ELEMENTS = ["0", "a", "b", "c", "d", "1"]
HEXAGON_COVERS = [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"),
                  ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")]

HEXAGON_STAR = {
    "0": ["1", None, None, None, None, None],
    "a": ["b", "1", None, None, None, None],
    "b": ["a", None, "1", None, None, None],
    "c": ["0", "d", "d", "1", None, None],
    "d": ["0", "c", "c", None, "1", None],
    "1": ["0", "a", "b", "c", "d", "1"],
}

HEXAGON_PURE = {
    "0": ["1", "1", "1", "1", "1", "1"],
    "a": ["b", "1", "b", "1", "1", "1"],
    "b": ["a", "a", "1", "1", "1", "1"],
    "c": ["0", "d", "d", "1", "d", "1"],
    "d": ["0", "c", "c", "c", "1", "1"],
    "1": ["0", "a", "b", "c", "d", "1"],
}

HEXAGON_RP = {
    "0": ["1", "1", "1", "1", "1", "1"],
    "a": ["b", "1", "b", "1", "1", "1"],
    "b": ["a", "a", "1", "1", "1", "1"],
    "c": ["0", "a", "b", "1", "d", "1"],
    "d": ["0", "a", "b", "c", "1", "1"],
    "1": ["0", "a", "b", "c", "d", "1"],
}

HEXAGON_RP_STAR = {
    "0": ["1", None, None, None, None, None],
    "a": ["b", "1", None, None, None, None],
    "b": ["a", None, "1", None, None, None],
    "c": ["0", "a", "b", "1", None, None],
    "d": ["0", "a", "b", None, "1", None],
    "1": ["0", "a", "b", "c", "d", "1"],
}

HEXAGON_FNAT = {
    "0": ["1", "1", "1", "1", "1", "1"],
    "a": ["b", "1", "1", "1", "1", "1"],
    "b": ["a", "1", "1", "1", "1", "1"],
    "c": ["0", "d", "d", "1", "d", "1"],
    "d": ["0", "c", "c", "c", "1", "1"],
    "1": ["0", "a", "b", "c", "d", "1"],
}

Q_ELEMENTS = ["0", "c", "d", "1"]
Q_COVERS = [("0", "c"), ("0", "d"), ("c", "1"), ("d", "1")]

Q_STAR = {
    "0": ["1", None, None, None],
    "c": ["d", "1", None, None],
    "d": ["c", None, "1", None],
    "1": ["0", "c", "d", "1"],
}

TWOCHAINS_ELEMENTS = ["a", "b", "c", "d"]
TWOCHAINS_COVERS = [("a", "b"), ("c", "d")]

TWOCHAINS_STAR = {
    "a": ["b", None, None, None],
    "b": ["a", "b", None, None],
    "c": [None, None, "d", None],
    "d": [None, None, "c", "d"],
}

TWOCHAINS_ARROW1 = {
    "a": ["b", "b", "d", "d"],
    "b": ["a", "b", "d", "d"],
    "c": ["b", "b", "d", "d"],
    "d": ["b", "b", "c", "d"],
}

TWOCHAINS_ARROW2 = {
    "a": ["b", "b", "b", "b"],
    "b": ["a", "b", "b", "b"],
    "c": ["d", "d", "d", "d"],
    "d": ["d", "d", "c", "d"],
}

TWOCHAINS_ARROW3 = {
    "a": ["b", "b", "a", "c"],
    "b": ["a", "b", "c", "a"],
    "c": ["c", "a", "d", "d"],
    "d": ["a", "c", "c", "d"],
}

CHAINS5_ELEMENTS = ["0", "a", "b", "c", "1"]
CHAINS5_COVERS = [("0", "a"), ("a", "b"), ("a", "c"), ("b", "1"), ("c", "1")]

CHAINS5_NORMAL = {
    "0": ["1", "1", "1", "1", "1"],
    "a": ["0", "1", "1", "1", "1"],
    "b": ["0", "c", "1", "c", "1"],
    "c": ["0", "b", "b", "1", "1"],
    "1": ["0", "a", "b", "c", "1"],
}
