#include "dualcx/builders.hpp"

// Frozen catalog entries.  Both documents were produced by
// tests/support/golden_gen (a boundary-identified disk for the dunce hat, an
// exhaustive search over 6-vertex closed surfaces for the projective plane)
// and checked against the homology and free-pair oracles before freezing;
// the golden_regeneration test rebuilds them from scratch and compares.

namespace dualcx::detail {

const char* const kDunceHatJson = R"json({
  "cells": [
    {
      "facets": [],
      "id": "0",
      "vertices": [
        "a1"
      ]
    },
    {
      "facets": [],
      "id": "1",
      "vertices": [
        "a2"
      ]
    },
    {
      "facets": [],
      "id": "2",
      "vertices": [
        "c0"
      ]
    },
    {
      "facets": [],
      "id": "3",
      "vertices": [
        "c1"
      ]
    },
    {
      "facets": [],
      "id": "4",
      "vertices": [
        "c2"
      ]
    },
    {
      "facets": [],
      "id": "5",
      "vertices": [
        "c3"
      ]
    },
    {
      "facets": [],
      "id": "6",
      "vertices": [
        "c4"
      ]
    },
    {
      "facets": [],
      "id": "7",
      "vertices": [
        "c5"
      ]
    },
    {
      "facets": [],
      "id": "8",
      "vertices": [
        "c6"
      ]
    },
    {
      "facets": [],
      "id": "9",
      "vertices": [
        "c7"
      ]
    },
    {
      "facets": [],
      "id": "10",
      "vertices": [
        "c8"
      ]
    },
    {
      "facets": [],
      "id": "11",
      "vertices": [
        "q0"
      ]
    },
    {
      "facets": [],
      "id": "12",
      "vertices": [
        "z"
      ]
    },
    {
      "facets": [
        "1",
        "0"
      ],
      "id": "13",
      "vertices": [
        "a1",
        "a2"
      ]
    },
    {
      "facets": [
        "2",
        "0"
      ],
      "id": "14",
      "vertices": [
        "a1",
        "c0"
      ]
    },
    {
      "facets": [
        "3",
        "0"
      ],
      "id": "15",
      "vertices": [
        "a1",
        "c1"
      ]
    },
    {
      "facets": [
        "5",
        "0"
      ],
      "id": "16",
      "vertices": [
        "a1",
        "c3"
      ]
    },
    {
      "facets": [
        "6",
        "0"
      ],
      "id": "17",
      "vertices": [
        "a1",
        "c4"
      ]
    },
    {
      "facets": [
        "9",
        "0"
      ],
      "id": "18",
      "vertices": [
        "a1",
        "c7"
      ]
    },
    {
      "facets": [
        "10",
        "0"
      ],
      "id": "19",
      "vertices": [
        "a1",
        "c8"
      ]
    },
    {
      "facets": [
        "11",
        "0"
      ],
      "id": "20",
      "vertices": [
        "a1",
        "q0"
      ]
    },
    {
      "facets": [
        "3",
        "1"
      ],
      "id": "21",
      "vertices": [
        "a2",
        "c1"
      ]
    },
    {
      "facets": [
        "4",
        "1"
      ],
      "id": "22",
      "vertices": [
        "a2",
        "c2"
      ]
    },
    {
      "facets": [
        "6",
        "1"
      ],
      "id": "23",
      "vertices": [
        "a2",
        "c4"
      ]
    },
    {
      "facets": [
        "7",
        "1"
      ],
      "id": "24",
      "vertices": [
        "a2",
        "c5"
      ]
    },
    {
      "facets": [
        "8",
        "1"
      ],
      "id": "25",
      "vertices": [
        "a2",
        "c6"
      ]
    },
    {
      "facets": [
        "9",
        "1"
      ],
      "id": "26",
      "vertices": [
        "a2",
        "c7"
      ]
    },
    {
      "facets": [
        "11",
        "1"
      ],
      "id": "27",
      "vertices": [
        "a2",
        "q0"
      ]
    },
    {
      "facets": [
        "3",
        "2"
      ],
      "id": "28",
      "vertices": [
        "c0",
        "c1"
      ]
    },
    {
      "facets": [
        "10",
        "2"
      ],
      "id": "29",
      "vertices": [
        "c0",
        "c8"
      ]
    },
    {
      "facets": [
        "11",
        "2"
      ],
      "id": "30",
      "vertices": [
        "c0",
        "q0"
      ]
    },
    {
      "facets": [
        "12",
        "2"
      ],
      "id": "31",
      "vertices": [
        "c0",
        "z"
      ]
    },
    {
      "facets": [
        "4",
        "3"
      ],
      "id": "32",
      "vertices": [
        "c1",
        "c2"
      ]
    },
    {
      "facets": [
        "12",
        "3"
      ],
      "id": "33",
      "vertices": [
        "c1",
        "z"
      ]
    },
    {
      "facets": [
        "5",
        "4"
      ],
      "id": "34",
      "vertices": [
        "c2",
        "c3"
      ]
    },
    {
      "facets": [
        "11",
        "4"
      ],
      "id": "35",
      "vertices": [
        "c2",
        "q0"
      ]
    },
    {
      "facets": [
        "12",
        "4"
      ],
      "id": "36",
      "vertices": [
        "c2",
        "z"
      ]
    },
    {
      "facets": [
        "6",
        "5"
      ],
      "id": "37",
      "vertices": [
        "c3",
        "c4"
      ]
    },
    {
      "facets": [
        "11",
        "5"
      ],
      "id": "38",
      "vertices": [
        "c3",
        "q0"
      ]
    },
    {
      "facets": [
        "12",
        "5"
      ],
      "id": "39",
      "vertices": [
        "c3",
        "z"
      ]
    },
    {
      "facets": [
        "7",
        "6"
      ],
      "id": "40",
      "vertices": [
        "c4",
        "c5"
      ]
    },
    {
      "facets": [
        "12",
        "6"
      ],
      "id": "41",
      "vertices": [
        "c4",
        "z"
      ]
    },
    {
      "facets": [
        "8",
        "7"
      ],
      "id": "42",
      "vertices": [
        "c5",
        "c6"
      ]
    },
    {
      "facets": [
        "11",
        "7"
      ],
      "id": "43",
      "vertices": [
        "c5",
        "q0"
      ]
    },
    {
      "facets": [
        "12",
        "7"
      ],
      "id": "44",
      "vertices": [
        "c5",
        "z"
      ]
    },
    {
      "facets": [
        "9",
        "8"
      ],
      "id": "45",
      "vertices": [
        "c6",
        "c7"
      ]
    },
    {
      "facets": [
        "11",
        "8"
      ],
      "id": "46",
      "vertices": [
        "c6",
        "q0"
      ]
    },
    {
      "facets": [
        "12",
        "8"
      ],
      "id": "47",
      "vertices": [
        "c6",
        "z"
      ]
    },
    {
      "facets": [
        "10",
        "9"
      ],
      "id": "48",
      "vertices": [
        "c7",
        "c8"
      ]
    },
    {
      "facets": [
        "12",
        "9"
      ],
      "id": "49",
      "vertices": [
        "c7",
        "z"
      ]
    },
    {
      "facets": [
        "11",
        "10"
      ],
      "id": "50",
      "vertices": [
        "c8",
        "q0"
      ]
    },
    {
      "facets": [
        "12",
        "10"
      ],
      "id": "51",
      "vertices": [
        "c8",
        "z"
      ]
    },
    {
      "facets": [
        "21",
        "15",
        "13"
      ],
      "id": "52",
      "vertices": [
        "a1",
        "a2",
        "c1"
      ]
    },
    {
      "facets": [
        "23",
        "17",
        "13"
      ],
      "id": "53",
      "vertices": [
        "a1",
        "a2",
        "c4"
      ]
    },
    {
      "facets": [
        "26",
        "18",
        "13"
      ],
      "id": "54",
      "vertices": [
        "a1",
        "a2",
        "c7"
      ]
    },
    {
      "facets": [
        "28",
        "15",
        "14"
      ],
      "id": "55",
      "vertices": [
        "a1",
        "c0",
        "c1"
      ]
    },
    {
      "facets": [
        "30",
        "20",
        "14"
      ],
      "id": "56",
      "vertices": [
        "a1",
        "c0",
        "q0"
      ]
    },
    {
      "facets": [
        "37",
        "17",
        "16"
      ],
      "id": "57",
      "vertices": [
        "a1",
        "c3",
        "c4"
      ]
    },
    {
      "facets": [
        "38",
        "20",
        "16"
      ],
      "id": "58",
      "vertices": [
        "a1",
        "c3",
        "q0"
      ]
    },
    {
      "facets": [
        "48",
        "19",
        "18"
      ],
      "id": "59",
      "vertices": [
        "a1",
        "c7",
        "c8"
      ]
    },
    {
      "facets": [
        "50",
        "20",
        "19"
      ],
      "id": "60",
      "vertices": [
        "a1",
        "c8",
        "q0"
      ]
    },
    {
      "facets": [
        "32",
        "22",
        "21"
      ],
      "id": "61",
      "vertices": [
        "a2",
        "c1",
        "c2"
      ]
    },
    {
      "facets": [
        "35",
        "27",
        "22"
      ],
      "id": "62",
      "vertices": [
        "a2",
        "c2",
        "q0"
      ]
    },
    {
      "facets": [
        "40",
        "24",
        "23"
      ],
      "id": "63",
      "vertices": [
        "a2",
        "c4",
        "c5"
      ]
    },
    {
      "facets": [
        "43",
        "27",
        "24"
      ],
      "id": "64",
      "vertices": [
        "a2",
        "c5",
        "q0"
      ]
    },
    {
      "facets": [
        "45",
        "26",
        "25"
      ],
      "id": "65",
      "vertices": [
        "a2",
        "c6",
        "c7"
      ]
    },
    {
      "facets": [
        "46",
        "27",
        "25"
      ],
      "id": "66",
      "vertices": [
        "a2",
        "c6",
        "q0"
      ]
    },
    {
      "facets": [
        "33",
        "31",
        "28"
      ],
      "id": "67",
      "vertices": [
        "c0",
        "c1",
        "z"
      ]
    },
    {
      "facets": [
        "50",
        "30",
        "29"
      ],
      "id": "68",
      "vertices": [
        "c0",
        "c8",
        "q0"
      ]
    },
    {
      "facets": [
        "51",
        "31",
        "29"
      ],
      "id": "69",
      "vertices": [
        "c0",
        "c8",
        "z"
      ]
    },
    {
      "facets": [
        "36",
        "33",
        "32"
      ],
      "id": "70",
      "vertices": [
        "c1",
        "c2",
        "z"
      ]
    },
    {
      "facets": [
        "38",
        "35",
        "34"
      ],
      "id": "71",
      "vertices": [
        "c2",
        "c3",
        "q0"
      ]
    },
    {
      "facets": [
        "39",
        "36",
        "34"
      ],
      "id": "72",
      "vertices": [
        "c2",
        "c3",
        "z"
      ]
    },
    {
      "facets": [
        "41",
        "39",
        "37"
      ],
      "id": "73",
      "vertices": [
        "c3",
        "c4",
        "z"
      ]
    },
    {
      "facets": [
        "44",
        "41",
        "40"
      ],
      "id": "74",
      "vertices": [
        "c4",
        "c5",
        "z"
      ]
    },
    {
      "facets": [
        "46",
        "43",
        "42"
      ],
      "id": "75",
      "vertices": [
        "c5",
        "c6",
        "q0"
      ]
    },
    {
      "facets": [
        "47",
        "44",
        "42"
      ],
      "id": "76",
      "vertices": [
        "c5",
        "c6",
        "z"
      ]
    },
    {
      "facets": [
        "49",
        "47",
        "45"
      ],
      "id": "77",
      "vertices": [
        "c6",
        "c7",
        "z"
      ]
    },
    {
      "facets": [
        "51",
        "49",
        "48"
      ],
      "id": "78",
      "vertices": [
        "c7",
        "c8",
        "z"
      ]
    }
  ],
  "format_version": 1,
  "vertices": [
    "a1",
    "a2",
    "c0",
    "c1",
    "c2",
    "c3",
    "c4",
    "c5",
    "c6",
    "c7",
    "c8",
    "q0",
    "z"
  ]
}
)json";

const char* const kRp2Json = R"json({
  "cells": [
    {
      "facets": [],
      "id": "0",
      "vertices": [
        "1"
      ]
    },
    {
      "facets": [],
      "id": "1",
      "vertices": [
        "2"
      ]
    },
    {
      "facets": [],
      "id": "2",
      "vertices": [
        "3"
      ]
    },
    {
      "facets": [],
      "id": "3",
      "vertices": [
        "4"
      ]
    },
    {
      "facets": [],
      "id": "4",
      "vertices": [
        "5"
      ]
    },
    {
      "facets": [],
      "id": "5",
      "vertices": [
        "6"
      ]
    },
    {
      "facets": [
        "1",
        "0"
      ],
      "id": "6",
      "vertices": [
        "1",
        "2"
      ]
    },
    {
      "facets": [
        "2",
        "0"
      ],
      "id": "7",
      "vertices": [
        "1",
        "3"
      ]
    },
    {
      "facets": [
        "3",
        "0"
      ],
      "id": "8",
      "vertices": [
        "1",
        "4"
      ]
    },
    {
      "facets": [
        "4",
        "0"
      ],
      "id": "9",
      "vertices": [
        "1",
        "5"
      ]
    },
    {
      "facets": [
        "5",
        "0"
      ],
      "id": "10",
      "vertices": [
        "1",
        "6"
      ]
    },
    {
      "facets": [
        "2",
        "1"
      ],
      "id": "11",
      "vertices": [
        "2",
        "3"
      ]
    },
    {
      "facets": [
        "3",
        "1"
      ],
      "id": "12",
      "vertices": [
        "2",
        "4"
      ]
    },
    {
      "facets": [
        "4",
        "1"
      ],
      "id": "13",
      "vertices": [
        "2",
        "5"
      ]
    },
    {
      "facets": [
        "5",
        "1"
      ],
      "id": "14",
      "vertices": [
        "2",
        "6"
      ]
    },
    {
      "facets": [
        "3",
        "2"
      ],
      "id": "15",
      "vertices": [
        "3",
        "4"
      ]
    },
    {
      "facets": [
        "4",
        "2"
      ],
      "id": "16",
      "vertices": [
        "3",
        "5"
      ]
    },
    {
      "facets": [
        "5",
        "2"
      ],
      "id": "17",
      "vertices": [
        "3",
        "6"
      ]
    },
    {
      "facets": [
        "4",
        "3"
      ],
      "id": "18",
      "vertices": [
        "4",
        "5"
      ]
    },
    {
      "facets": [
        "5",
        "3"
      ],
      "id": "19",
      "vertices": [
        "4",
        "6"
      ]
    },
    {
      "facets": [
        "5",
        "4"
      ],
      "id": "20",
      "vertices": [
        "5",
        "6"
      ]
    },
    {
      "facets": [
        "11",
        "7",
        "6"
      ],
      "id": "21",
      "vertices": [
        "1",
        "2",
        "3"
      ]
    },
    {
      "facets": [
        "12",
        "8",
        "6"
      ],
      "id": "22",
      "vertices": [
        "1",
        "2",
        "4"
      ]
    },
    {
      "facets": [
        "16",
        "9",
        "7"
      ],
      "id": "23",
      "vertices": [
        "1",
        "3",
        "5"
      ]
    },
    {
      "facets": [
        "19",
        "10",
        "8"
      ],
      "id": "24",
      "vertices": [
        "1",
        "4",
        "6"
      ]
    },
    {
      "facets": [
        "20",
        "10",
        "9"
      ],
      "id": "25",
      "vertices": [
        "1",
        "5",
        "6"
      ]
    },
    {
      "facets": [
        "17",
        "14",
        "11"
      ],
      "id": "26",
      "vertices": [
        "2",
        "3",
        "6"
      ]
    },
    {
      "facets": [
        "18",
        "13",
        "12"
      ],
      "id": "27",
      "vertices": [
        "2",
        "4",
        "5"
      ]
    },
    {
      "facets": [
        "20",
        "14",
        "13"
      ],
      "id": "28",
      "vertices": [
        "2",
        "5",
        "6"
      ]
    },
    {
      "facets": [
        "18",
        "16",
        "15"
      ],
      "id": "29",
      "vertices": [
        "3",
        "4",
        "5"
      ]
    },
    {
      "facets": [
        "19",
        "17",
        "15"
      ],
      "id": "30",
      "vertices": [
        "3",
        "4",
        "6"
      ]
    }
  ],
  "format_version": 1,
  "vertices": [
    "1",
    "2",
    "3",
    "4",
    "5",
    "6"
  ]
}
)json";

}  // namespace dualcx::detail
