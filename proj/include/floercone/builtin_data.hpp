#pragma once

// Built-in inputs used by the self test and the test suite: the right-handed
// trefoil and unknot bundles, and the two trefoil Heegaard diagrams (the
// genus-2 diagram for the knot itself and the (alpha, gamma) diagram
// presenting +5 surgery). The same documents ship under data/.

namespace floercone::builtin {

inline const char* trefoil_bundle = R"json({
  "schema": "bundle.v1",
  "d": 1,
  "k": -1,
  "lspace": true,
  "sectors": [
    {
      "A_offset": "0",
      "basis": [
        {"id": "a", "gr": "-2", "j": "-1", "sector": "0"},
        {"id": "b", "gr": "-1", "j": "0", "sector": "0"},
        {"id": "c", "gr": "0", "j": "1", "sector": "0"}
      ],
      "diff": [
        {"from": "b", "to": "a", "upowers": [0]},
        {"from": "b", "to": "c", "upowers": [1]}
      ]
    }
  ],
  "flips": [
    {
      "from_sector": 0,
      "anchor_s": "0",
      "entries": [
        {"from": "a", "to": "c", "upowers": [1]},
        {"from": "b", "to": "b", "upowers": [0]},
        {"from": "c", "to": "a", "upowers": [-1]}
      ]
    }
  ]
})json";

inline const char* unknot_bundle = R"json({
  "schema": "bundle.v1",
  "d": 1,
  "k": 1,
  "lspace": true,
  "sectors": [
    {
      "A_offset": "0",
      "basis": [
        {"id": "u", "gr": "0", "j": "0", "sector": "0"}
      ],
      "diff": []
    }
  ],
  "flips": [
    {
      "from_sector": 0,
      "anchor_s": "0",
      "entries": [
        {"from": "u", "to": "u", "upowers": [0]}
      ]
    }
  ]
})json";

inline const char* trefoil_diagram = R"json({
  "schema": "diagram.v1",
  "d": 1,
  "regions": [
    {"id": "Rm1", "disk": true, "corners": 2},
    {"id": "R0", "disk": true, "corners": 4},
    {"id": "R1", "disk": true, "corners": 4},
    {"id": "R2", "disk": true, "corners": 6},
    {"id": "R3", "disk": true, "corners": 4},
    {"id": "R4", "disk": true, "corners": 4},
    {"id": "R5", "disk": true, "corners": 2},
    {"id": "Rout", "euler": "-5/2"}
  ],
  "points": [
    {"id": "a", "alpha": "a1", "beta": "b1", "corners": ["R0", "R1", "R2", "R1"]},
    {"id": "b", "alpha": "a1", "beta": "b1", "corners": ["R1", "R2", "R3", "R2"]},
    {"id": "c", "alpha": "a1", "beta": "b1", "corners": ["R2", "R3", "R4", "R3"]},
    {"id": "x", "alpha": "a2", "beta": "b2", "corners": ["Rm1", "R4", "R0", "R5"]}
  ],
  "generators": [
    {"id": "ax", "points": ["a", "x"], "gr_w": "-2", "gr_z": "0"},
    {"id": "bx", "points": ["b", "x"], "gr_w": "-1", "gr_z": "-1"},
    {"id": "cx", "points": ["c", "x"], "gr_w": "0", "gr_z": "-2"}
  ],
  "basepoints": {
    "w": {"sides": ["R4", "R5"]},
    "z": {"sides": ["Rm1", "R0"]}
  },
  "domain": {
    "id": "P",
    "lambda_coefficient": 1,
    "multiplicities": {
      "Rm1": -1, "R0": 0, "R1": 1, "R2": 2, "R3": 3, "R4": 4, "R5": 5, "Rout": 2
    }
  },
  "domains": [
    {
      "id": "bigon",
      "from": "bx",
      "to": "ax",
      "order_n": 1,
      "multiplicities": {"Rm1": 1, "R0": 1}
    }
  ]
})json";

inline const char* trefoil_p5_diagram = R"json({
  "schema": "diagram.v1",
  "d": 5,
  "regions": [
    {"id": "S0", "disk": true, "corners": 6},
    {"id": "S1", "disk": true, "corners": 6},
    {"id": "S2", "disk": true, "corners": 8},
    {"id": "S3", "disk": true, "corners": 8},
    {"id": "S4", "disk": true, "corners": 4},
    {"id": "S5", "disk": true, "corners": 4},
    {"id": "Sm1", "disk": true, "corners": 2},
    {"id": "Scap", "euler": "1"},
    {"id": "Sbg", "disk": true, "corners": 6}
  ],
  "points": [
    {"id": "a", "alpha": "a1", "beta": "b1", "corners": ["S0", "S1", "S2", "S1"]},
    {"id": "b", "alpha": "a1", "beta": "b1", "corners": ["S1", "S2", "S3", "S2"]},
    {"id": "c", "alpha": "a1", "beta": "b1", "corners": ["S2", "S3", "S4", "S3"]},
    {"id": "p", "alpha": "a1", "beta": "L", "corners": ["S0", "S1", "Sm1", "S2"]},
    {"id": "q", "alpha": "a1", "beta": "L", "corners": ["S2", "S3", "S4", "S5"]},
    {"id": "r", "alpha": "a2", "beta": "L", "corners": ["S2", "S3", "S4", "S3"]},
    {"id": "s", "alpha": "a2", "beta": "b1", "corners": ["S0", "S1", "S2", "S3"]},
    {"id": "t", "alpha": "a2", "beta": "b1", "corners": ["S4", "S5", "S4", "S5"]}
  ],
  "generators": [
    {"id": "ar", "points": ["a", "r"]},
    {"id": "ps", "points": ["p", "s"]},
    {"id": "pt", "points": ["p", "t"]},
    {"id": "qs", "points": ["q", "s"]},
    {"id": "br", "points": ["b", "r"]},
    {"id": "qt", "points": ["q", "t"]},
    {"id": "cr", "points": ["c", "r"]}
  ],
  "basepoints": {
    "w": {"sides": ["S2", "S3"]},
    "z": {"sides": ["S3", "S4"]}
  },
  "domain": {
    "id": "P",
    "lambda_coefficient": 5,
    "multiplicities": {
      "S0": 0, "S1": 1, "S2": 2, "S3": 3, "S4": 4, "S5": 5, "Sm1": -1, "Scap": 2, "Sbg": 0
    }
  },
  "domains": [
    {
      "id": "Sigma",
      "lambda_coefficient": 0,
      "multiplicities": {
        "S0": 1, "S1": 1, "S2": 1, "S3": 1, "S4": 1, "S5": 1, "Sm1": 1, "Scap": 1, "Sbg": 1
      }
    }
  ]
})json";

}  // namespace floercone::builtin
