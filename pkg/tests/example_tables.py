"""Reference f-value grids for every word of rank at most 4.

Each entry maps a word to rows indexed by z, columns indexed by y.
"""

F_TABLES = {
    "e": [
        ["1"],
    ],
    "1": [
        ["1", "-1"],
        ["1", "0"],
    ],
    "2": [
        ["1/2", "0", "-1/2"],
        ["1/2", "0", "-1/2"],
    ],
    "11": [
        ["1/2", "-1", "1/2"],
        ["1/2", "0", "-1/2"],
        ["1/2", "0", "1/2"],
    ],
    "12": [
        ["1/6", "0", "-1/2", "1/3"],
        ["1/6", "0", "-1/2", "1/3"],
        ["1/6", "0", "-1/2", "-1/6"],
    ],
    "21": [
        ["1/3", "-1/2", "0", "1/6"],
        ["1/3", "0", "0", "-1/3"],
        ["1/3", "0", "0", "-1/3"],
    ],
    "111": [
        ["1/6", "-1/2", "1/2", "-1/6"],
        ["1/6", "0", "-1/2", "1/3"],
        ["1/6", "0", "1/2", "-2/3"],
        ["1/6", "0", "1/2", "1/3"],
    ],
    "112": [
        ["1/24", "0", "-1/4", "1/3", "-1/8"],
        ["1/24", "0", "-1/4", "1/3", "-1/8"],
        ["1/24", "0", "-1/4", "-1/6", "5/24"],
        ["1/24", "0", "-1/4", "-1/6", "-1/8"],
    ],
    "22": [
        ["1/8", "0", "-1/4", "0", "1/8"],
        ["1/8", "0", "-1/4", "0", "1/8"],
        ["1/8", "0", "-1/4", "0", "1/8"],
    ],
    "121": [
        ["1/12", "-1/6", "0", "1/6", "-1/12"],
        ["1/12", "0", "0", "-1/3", "1/4"],
        ["1/12", "0", "0", "-1/3", "1/4"],
        ["1/12", "0", "0", "-1/3", "-1/4"],
    ],
    "211": [
        ["1/8", "-1/3", "1/4", "0", "-1/24"],
        ["1/8", "0", "-1/4", "0", "1/8"],
        ["1/8", "0", "1/4", "0", "-3/8"],
        ["1/8", "0", "1/4", "0", "-3/8"],
    ],
    "1111": [
        ["1/24", "-1/6", "1/4", "-1/6", "1/24"],
        ["1/24", "0", "-1/4", "1/3", "-1/8"],
        ["1/24", "0", "1/4", "-2/3", "3/8"],
        ["1/24", "0", "1/4", "1/3", "-5/8"],
        ["1/24", "0", "1/4", "1/3", "3/8"],
    ],
}

F_21221_Z0 = ["1/720", "-1/280", "0", "1/180", "0", "-1/120", "1/180", "0", "-1/1680"]
