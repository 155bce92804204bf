#!/usr/bin/env python3
"""Regenerates us_temperature.edges and us_temperature.signal.

Vertices are the 50 US states in alphabetical order (index 0 = Alabama).
Two states are joined when they share a land border (four-corner contacts
such as Arizona/Colorado and water-only contacts such as Illinois/Michigan
do not count). Each edge points from the state with the lower centroid
latitude to the one with the higher latitude; equal latitudes are ordered
alphabetically. Alaska and Hawaii share no border with any state and are
left isolated. All weights are 1.

Temperatures are average annual state temperatures in degrees Fahrenheit
(currentresults.com, "Average Annual Temperature for Each US State").
Latitudes are approximate geographic centroids in degrees north.
"""

import pathlib

# name: (centroid latitude, average annual temperature F)
STATES = {
    "Alabama": (32.8, 62.8), "Alaska": (64.2, 26.6), "Arizona": (34.3, 60.3),
    "Arkansas": (34.9, 60.4), "California": (37.2, 59.4), "Colorado": (39.0, 45.1),
    "Connecticut": (41.6, 49.0), "Delaware": (39.0, 55.3), "Florida": (28.6, 70.7),
    "Georgia": (32.7, 63.5), "Hawaii": (20.3, 70.0), "Idaho": (44.4, 44.4),
    "Illinois": (40.0, 51.8), "Indiana": (39.9, 51.7), "Iowa": (42.1, 47.8),
    "Kansas": (38.5, 54.3), "Kentucky": (37.5, 55.6), "Louisiana": (31.1, 66.4),
    "Maine": (45.4, 41.0), "Maryland": (39.0, 54.2), "Massachusetts": (42.3, 47.9),
    "Michigan": (44.3, 44.4), "Minnesota": (46.3, 41.2), "Mississippi": (32.7, 63.4),
    "Missouri": (38.4, 54.5), "Montana": (47.0, 42.7), "Nebraska": (41.5, 48.8),
    "Nevada": (39.3, 49.9), "New Hampshire": (43.7, 43.8), "New Jersey": (40.2, 52.7),
    "New Mexico": (34.4, 53.4), "New York": (42.9, 45.4), "North Carolina": (35.6, 59.0),
    "North Dakota": (47.5, 40.4), "Ohio": (40.3, 50.7), "Oklahoma": (35.6, 59.6),
    "Oregon": (43.9, 48.4), "Pennsylvania": (40.9, 48.8), "Rhode Island": (41.7, 50.1),
    "South Carolina": (33.9, 62.4), "South Dakota": (44.4, 45.2), "Tennessee": (35.9, 57.6),
    "Texas": (31.5, 64.8), "Utah": (39.3, 48.6), "Vermont": (44.1, 42.9),
    "Virginia": (37.5, 55.1), "Washington": (47.4, 48.3), "West Virginia": (38.6, 51.8),
    "Wisconsin": (44.6, 43.1), "Wyoming": (43.0, 42.0),
}

ABBREV = {
    "AL": "Alabama", "AZ": "Arizona", "AR": "Arkansas", "CA": "California",
    "CO": "Colorado", "CT": "Connecticut", "DE": "Delaware", "FL": "Florida",
    "GA": "Georgia", "ID": "Idaho", "IL": "Illinois", "IN": "Indiana", "IA": "Iowa",
    "KS": "Kansas", "KY": "Kentucky", "LA": "Louisiana", "ME": "Maine",
    "MD": "Maryland", "MA": "Massachusetts", "MI": "Michigan", "MN": "Minnesota",
    "MS": "Mississippi", "MO": "Missouri", "MT": "Montana", "NE": "Nebraska",
    "NV": "Nevada", "NH": "New Hampshire", "NJ": "New Jersey", "NM": "New Mexico",
    "NY": "New York", "NC": "North Carolina", "ND": "North Dakota", "OH": "Ohio",
    "OK": "Oklahoma", "OR": "Oregon", "PA": "Pennsylvania", "RI": "Rhode Island",
    "SC": "South Carolina", "SD": "South Dakota", "TN": "Tennessee", "TX": "Texas",
    "UT": "Utah", "VT": "Vermont", "VA": "Virginia", "WA": "Washington",
    "WV": "West Virginia", "WI": "Wisconsin", "WY": "Wyoming",
}

BORDERS = """
AL: FL GA MS TN
AZ: CA NV NM UT
AR: LA MS MO OK TN TX
CA: AZ NV OR
CO: KS NE NM OK UT WY
CT: MA NY RI
DE: MD NJ PA
FL: AL GA
GA: AL FL NC SC TN
ID: MT NV OR UT WA WY
IL: IN IA KY MO WI
IN: IL KY MI OH
IA: IL MN MO NE SD WI
KS: CO MO NE OK
KY: IL IN MO OH TN VA WV
LA: AR MS TX
ME: NH
MD: DE PA VA WV
MA: CT NH NY RI VT
MI: IN OH WI
MN: IA ND SD WI
MS: AL AR LA TN
MO: AR IL IA KS KY NE OK TN
MT: ID ND SD WY
NE: CO IA KS MO SD WY
NV: AZ CA ID OR UT
NH: ME MA VT
NJ: DE NY PA
NM: AZ CO OK TX
NY: CT MA NJ PA VT
NC: GA SC TN VA
ND: MN MT SD
OH: IN KY MI PA WV
OK: AR CO KS MO NM TX
OR: CA ID NV WA
PA: DE MD NJ NY OH WV
RI: CT MA
SC: GA NC
SD: IA MN MT NE ND WY
TN: AL AR GA KY MS MO NC VA
TX: AR LA NM OK
UT: AZ CO ID NV WY
VT: MA NH NY
VA: KY MD NC TN WV
WA: ID OR
WV: KY MD OH PA VA
WI: IL IA MI MN
WY: CO ID MT NE SD UT
"""


def main() -> None:
    names = sorted(STATES)
    index = {name: i for i, name in enumerate(names)}

    neighbours = {}
    for line in BORDERS.strip().splitlines():
        head, rest = line.split(":")
        neighbours[ABBREV[head]] = {ABBREV[t] for t in rest.split()}
    for a, nbrs in neighbours.items():
        for b in nbrs:
            assert a in neighbours[b], f"asymmetric border table: {a} / {b}"

    edges = set()
    for a, nbrs in neighbours.items():
        for b in nbrs:
            lo, hi = sorted((a, b), key=lambda s: (STATES[s][0], s))
            edges.add((index[lo], index[hi]))

    out = pathlib.Path(__file__).resolve().parent
    with open(out / "us_temperature.edges", "w", encoding="utf-8") as fh:
        fh.write("# US states, border adjacency, edges point from lower to higher latitude.\n")
        fh.write("# Alaska and Hawaii have no land border with another state and are isolated.\n")
        fh.write("# Regenerate with build_us_dataset.py.\n")
        for name in names:
            fh.write(f"# vertex {index[name]} {name}\n")
        fh.write(f"{len(names)}\n")
        for src, dst in sorted(edges):
            fh.write(f"{src} {dst} 1\n")

    with open(out / "us_temperature.signal", "w", encoding="utf-8") as fh:
        fh.write("# average annual temperature, degrees Fahrenheit, alphabetical state order\n")
        for name in names:
            fh.write(f"{STATES[name][1]}\n")

    print(f"{len(names)} vertices, {len(edges)} edges")


if __name__ == "__main__":
    main()
