#pragma once

// Generated by tools/gen_builtins.py.

#include <array>
#include <string_view>
#include <utility>

namespace livsic::builtin_data {

inline constexpr std::array<std::pair<std::string_view, std::string_view>, 4> scenarios{{
    {"horseshoe", R"json({
 "name": "horseshoe",
 "system": {
  "alphabet": 2,
  "matrix": [
   [
    1,
    1
   ],
   [
    1,
    1
   ]
  ],
  "boundary": {
   "matching": [],
   "boundary": [],
   "cylinder_gap": [],
   "cylinder_cylinder": []
  },
  "layouts": {
   "u": {
    "side": "u",
    "root": [
     0,
     "gap",
     1
    ],
    "0": [
     0,
     "gap",
     1
    ],
    "1": [
     0,
     "gap",
     1
    ]
   },
   "s": {
    "side": "s",
    "root": [
     0,
     "gap",
     1
    ],
    "0": [
     0,
     "gap",
     1
    ],
    "1": [
     0,
     "gap",
     1
    ]
   }
  }
 },
 "potential": {
  "constant": 0.0,
  "range": 2,
  "tag": "uniform Bernoulli"
 },
 "sides": {
  "u": {
   "model": "synthesized",
   "delta": 0.6309297535714574,
   "pressure": 0.0,
   "cocycle": {
    "side": "u",
    "kappa": {
     "depth": 0,
     "values": {}
    },
    "gamma": {
     "depth": 1,
     "values": []
    },
    "layout": {
     "side": "u",
     "root": [
      0,
      "gap",
      1
     ],
     "0": [
      0,
      "gap",
      1
     ],
     "1": [
      0,
      "gap",
      1
     ]
    }
   }
  },
  "s": {
   "model": "synthesized",
   "delta": 0.6309297535714574,
   "pressure": 0.0,
   "cocycle": {
    "side": "s",
    "kappa": {
     "depth": 0,
     "values": {}
    },
    "gamma": {
     "depth": 1,
     "values": []
    },
    "layout": {
     "side": "s",
     "root": [
      0,
      "gap",
      1
     ],
     "0": [
      0,
      "gap",
      1
     ],
     "1": [
      0,
      "gap",
      1
     ]
    }
   }
  }
 }
})json"},
    {"cantor-third", R"json({
 "name": "cantor-third",
 "system": {
  "alphabet": 2,
  "matrix": [
   [
    1,
    1
   ],
   [
    1,
    1
   ]
  ],
  "layouts": {
   "u": {
    "side": "u",
    "root": [
     0,
     "gap",
     1
    ],
    "0": [
     0,
     "gap",
     1
    ],
    "1": [
     0,
     "gap",
     1
    ]
   },
   "s": {
    "side": "s",
    "root": [
     0,
     "gap",
     1
    ],
    "0": [
     0,
     "gap",
     1
    ],
    "1": [
     0,
     "gap",
     1
    ]
   }
  }
 },
 "potential": {
  "constant": 0.0,
  "range": 2,
  "tag": "uniform Bernoulli"
 },
 "sides": {
  "u": {
   "model": "affine",
   "ratios": [
    0.3333333333333333,
    0.3333333333333333
   ],
   "delta": 0.6309297535714574,
   "pressure": 0.0
  },
  "s": {
   "model": "affine",
   "ratios": [
    0.3333333333333333,
    0.3333333333333333
   ],
   "delta": 0.6309297535714574,
   "pressure": 0.0
  }
 }
})json"},
    {"golden-anosov", R"json({
 "name": "golden-anosov",
 "system": {
  "alphabet": 2,
  "matrix": [
   [
    1,
    1
   ],
   [
    1,
    0
   ]
  ],
  "boundary": {
   "matching": [
    {
     "id": "u-m01",
     "side": "u",
     "first": "0",
     "second": "1",
     "decomposition": [
      "0",
      "1",
      "0"
     ],
     "split": 2
    },
    {
     "id": "u-m10",
     "side": "u",
     "first": "1",
     "second": "0",
     "decomposition": [
      "0",
      "0",
      "1"
     ],
     "split": 1
    },
    {
     "id": "u-m00",
     "side": "u",
     "first": "0",
     "second": "0",
     "decomposition": [
      "0",
      "1",
      "0",
      "1"
     ],
     "split": 2
    },
    {
     "id": "u-m11",
     "side": "u",
     "first": "1",
     "second": "1",
     "decomposition": [
      "0",
      "0"
     ],
     "split": 1
    },
    {
     "id": "s-m01",
     "side": "s",
     "first": "0",
     "second": "1",
     "decomposition": [
      "0",
      "1",
      "0"
     ],
     "split": 2
    },
    {
     "id": "s-m10",
     "side": "s",
     "first": "1",
     "second": "0",
     "decomposition": [
      "0",
      "0",
      "1"
     ],
     "split": 1
    },
    {
     "id": "s-m00",
     "side": "s",
     "first": "0",
     "second": "0",
     "decomposition": [
      "0",
      "1",
      "0",
      "1"
     ],
     "split": 2
    },
    {
     "id": "s-m11",
     "side": "s",
     "first": "1",
     "second": "1",
     "decomposition": [
      "0",
      "0"
     ],
     "split": 1
    }
   ],
   "boundary": [
    {
     "id": "u-b1",
     "side": "u",
     "base": "1",
     "first": [
      "0"
     ],
     "second": [
      "1",
      "01"
     ]
    },
    {
     "id": "u-b2",
     "side": "u",
     "base": "1",
     "first": [
      "0",
      "1"
     ],
     "second": [
      "00",
      "01",
      "10"
     ]
    },
    {
     "id": "s-b1",
     "side": "s",
     "base": "1",
     "first": [
      "0"
     ],
     "second": [
      "1",
      "10"
     ]
    },
    {
     "id": "s-b2",
     "side": "s",
     "base": "1",
     "first": [
      "0",
      "1"
     ],
     "second": [
      "00",
      "10",
      "01"
     ]
    }
   ],
   "cylinder_gap": [],
   "cylinder_cylinder": []
  },
  "layouts": {
   "u": {
    "side": "u",
    "root": [
     0,
     1
    ],
    "0": [
     0,
     1
    ],
    "1": [
     0
    ]
   },
   "s": {
    "side": "s",
    "root": [
     0,
     1
    ],
    "0": [
     0,
     1
    ],
    "1": [
     0
    ]
   }
  }
 },
 "potential": {
  "constant": 0.0,
  "range": 2,
  "tag": "Parry"
 },
 "sides": {
  "u": {
   "model": "measure"
  },
  "s": {
   "model": "measure"
  }
 }
})json"},
    {"da-attractor-toy", R"json({
 "name": "da-attractor-toy",
 "system": {
  "alphabet": 2,
  "matrix": [
   [
    1,
    1
   ],
   [
    1,
    1
   ]
  ],
  "boundary": {
   "matching": [],
   "boundary": [],
   "cylinder_gap": [
    {
     "id": "cg-00",
     "side": "s",
     "cylinder": "00",
     "gap": "00|10",
     "segments": [
      "11",
      "01|11"
     ]
    },
    {
     "id": "cg-10",
     "side": "s",
     "cylinder": "10",
     "gap": "00|10",
     "segments": [
      "01",
      "01|11"
     ]
    },
    {
     "id": "cg4-00",
     "side": "s",
     "cylinder": "00",
     "gap": "00|10",
     "segments": [
      "011",
      "011|111",
      "111",
      "01|11"
     ]
    },
    {
     "id": "cg-01",
     "side": "s",
     "cylinder": "01",
     "gap": "01|11",
     "segments": [
      "10",
      "00|10"
     ]
    },
    {
     "id": "cg-11",
     "side": "s",
     "cylinder": "11",
     "gap": "01|11",
     "segments": [
      "00",
      "00|10"
     ]
    },
    {
     "id": "cg4-01",
     "side": "s",
     "cylinder": "01",
     "gap": "01|11",
     "segments": [
      "010",
      "010|110",
      "110",
      "00|10"
     ]
    },
    {
     "id": "cg-000",
     "side": "s",
     "cylinder": "000",
     "gap": "000|100",
     "segments": [
      "111",
      "011|111"
     ]
    },
    {
     "id": "cg-100",
     "side": "s",
     "cylinder": "100",
     "gap": "000|100",
     "segments": [
      "011",
      "011|111"
     ]
    },
    {
     "id": "cg-001",
     "side": "s",
     "cylinder": "001",
     "gap": "001|101",
     "segments": [
      "110",
      "010|110"
     ]
    },
    {
     "id": "cg-101",
     "side": "s",
     "cylinder": "101",
     "gap": "001|101",
     "segments": [
      "010",
      "010|110"
     ]
    },
    {
     "id": "cg-010",
     "side": "s",
     "cylinder": "010",
     "gap": "010|110",
     "segments": [
      "101",
      "001|101"
     ]
    },
    {
     "id": "cg-110",
     "side": "s",
     "cylinder": "110",
     "gap": "010|110",
     "segments": [
      "001",
      "001|101"
     ]
    },
    {
     "id": "cg-011",
     "side": "s",
     "cylinder": "011",
     "gap": "011|111",
     "segments": [
      "100",
      "000|100"
     ]
    },
    {
     "id": "cg-111",
     "side": "s",
     "cylinder": "111",
     "gap": "011|111",
     "segments": [
      "000",
      "000|100"
     ]
    }
   ],
   "cylinder_cylinder": [
    {
     "id": "cc-0-0",
     "side": "s",
     "leaf": "00",
     "first": "00",
     "second": "10",
     "other_leaf": "11",
     "decomposition": [
      "11",
      "01"
     ],
     "split": 1
    },
    {
     "id": "cc-0-1",
     "side": "s",
     "leaf": "01",
     "first": "00",
     "second": "10",
     "other_leaf": "10",
     "decomposition": [
      "11",
      "01"
     ],
     "split": 1
    },
    {
     "id": "cc3-0",
     "side": "s",
     "leaf": "00",
     "first": "00",
     "second": "10",
     "other_leaf": "11",
     "decomposition": [
      "11",
      "001",
      "101"
     ],
     "split": 1
    },
    {
     "id": "cc-1-0",
     "side": "s",
     "leaf": "10",
     "first": "01",
     "second": "11",
     "other_leaf": "01",
     "decomposition": [
      "10",
      "00"
     ],
     "split": 1
    },
    {
     "id": "cc-1-1",
     "side": "s",
     "leaf": "11",
     "first": "01",
     "second": "11",
     "other_leaf": "00",
     "decomposition": [
      "10",
      "00"
     ],
     "split": 1
    },
    {
     "id": "cc3-1",
     "side": "s",
     "leaf": "10",
     "first": "01",
     "second": "11",
     "other_leaf": "01",
     "decomposition": [
      "10",
      "000",
      "100"
     ],
     "split": 1
    },
    {
     "id": "cc-00-0",
     "side": "s",
     "leaf": "00",
     "first": "000",
     "second": "100",
     "other_leaf": "11",
     "decomposition": [
      "111",
      "011"
     ],
     "split": 1
    },
    {
     "id": "cc-00-1",
     "side": "s",
     "leaf": "01",
     "first": "000",
     "second": "100",
     "other_leaf": "10",
     "decomposition": [
      "111",
      "011"
     ],
     "split": 1
    },
    {
     "id": "cc3-00",
     "side": "s",
     "leaf": "00",
     "first": "000",
     "second": "100",
     "other_leaf": "11",
     "decomposition": [
      "111",
      "0011",
      "1011"
     ],
     "split": 1
    },
    {
     "id": "cc-01-0",
     "side": "s",
     "leaf": "10",
     "first": "001",
     "second": "101",
     "other_leaf": "01",
     "decomposition": [
      "110",
      "010"
     ],
     "split": 1
    },
    {
     "id": "cc-01-1",
     "side": "s",
     "leaf": "11",
     "first": "001",
     "second": "101",
     "other_leaf": "00",
     "decomposition": [
      "110",
      "010"
     ],
     "split": 1
    },
    {
     "id": "cc3-01",
     "side": "s",
     "leaf": "10",
     "first": "001",
     "second": "101",
     "other_leaf": "01",
     "decomposition": [
      "110",
      "0010",
      "1010"
     ],
     "split": 1
    },
    {
     "id": "cc-10-0",
     "side": "s",
     "leaf": "00",
     "first": "010",
     "second": "110",
     "other_leaf": "11",
     "decomposition": [
      "101",
      "001"
     ],
     "split": 1
    },
    {
     "id": "cc-10-1",
     "side": "s",
     "leaf": "01",
     "first": "010",
     "second": "110",
     "other_leaf": "10",
     "decomposition": [
      "101",
      "001"
     ],
     "split": 1
    },
    {
     "id": "cc3-10",
     "side": "s",
     "leaf": "00",
     "first": "010",
     "second": "110",
     "other_leaf": "11",
     "decomposition": [
      "101",
      "0001",
      "1001"
     ],
     "split": 1
    },
    {
     "id": "cc-11-0",
     "side": "s",
     "leaf": "10",
     "first": "011",
     "second": "111",
     "other_leaf": "01",
     "decomposition": [
      "100",
      "000"
     ],
     "split": 1
    },
    {
     "id": "cc-11-1",
     "side": "s",
     "leaf": "11",
     "first": "011",
     "second": "111",
     "other_leaf": "00",
     "decomposition": [
      "100",
      "000"
     ],
     "split": 1
    },
    {
     "id": "cc3-11",
     "side": "s",
     "leaf": "10",
     "first": "011",
     "second": "111",
     "other_leaf": "01",
     "decomposition": [
      "100",
      "0000",
      "1000"
     ],
     "split": 1
    }
   ]
  },
  "layouts": {
   "u": {
    "side": "u",
    "root": [
     0,
     1
    ],
    "0": [
     0,
     1
    ],
    "1": [
     0,
     1
    ]
   },
   "s": {
    "side": "s",
    "root": [
     0,
     "gap",
     1
    ],
    "0": [
     0,
     "gap",
     1
    ],
    "1": [
     0,
     "gap",
     1
    ]
   }
  }
 },
 "potential": {
  "markov": [
   [
    0.6,
    0.4
   ],
   [
    0.4,
    0.6
   ]
  ],
  "tag": "symmetric Markov"
 },
 "sides": {
  "s": {
   "model": "synthesized",
   "delta": 0.8,
   "pressure": 0.0,
   "cocycle": {
    "side": "s",
    "kappa": {
     "depth": 2,
     "values": {
      "00": 1.0,
      "01": 1.1,
      "10": 1.1,
      "11": 1.0
     }
    },
    "gamma": {
     "depth": 1,
     "values": []
    },
    "layout": {
     "side": "s",
     "root": [
      0,
      "gap",
      1
     ],
     "0": [
      0,
      "gap",
      1
     ],
     "1": [
      0,
      "gap",
      1
     ]
    }
   }
  },
  "u": {
   "model": "measure"
  }
 }
})json"},
}};

}  // namespace livsic::builtin_data
