#pragma once

// Canonical JSON export of the 18-node Hasse poset of the a1b fixture,
// generated once and audited by hand against the worked diagram: all 18
// pairs and all 27 mutation arrows were checked label by label.
// Also stored as tests/golden/a1b_nodes.json.

namespace qtau::golden {

inline constexpr const char* A1B_POSET_JSON = R"GOLD({
 "algebra": "a1b",
 "arrows": [
  {
   "from": 1,
   "mutated": 6,
   "to": 0
  },
  {
   "from": 2,
   "mutated": 7,
   "to": 1
  },
  {
   "from": 3,
   "mutated": 2,
   "to": 2
  },
  {
   "from": 4,
   "mutated": 5,
   "to": 1
  },
  {
   "from": 4,
   "mutated": 6,
   "to": 12
  },
  {
   "from": 5,
   "mutated": 3,
   "to": 4
  },
  {
   "from": 6,
   "mutated": 3,
   "to": 3
  },
  {
   "from": 6,
   "mutated": 2,
   "to": 5
  },
  {
   "from": 7,
   "mutated": 4,
   "to": 0
  },
  {
   "from": 8,
   "mutated": 4,
   "to": 2
  },
  {
   "from": 8,
   "mutated": 7,
   "to": 7
  },
  {
   "from": 9,
   "mutated": 4,
   "to": 3
  },
  {
   "from": 9,
   "mutated": 2,
   "to": 8
  },
  {
   "from": 10,
   "mutated": 1,
   "to": 7
  },
  {
   "from": 11,
   "mutated": 1,
   "to": 9
  },
  {
   "from": 11,
   "mutated": 2,
   "to": 10
  },
  {
   "from": 12,
   "mutated": 5,
   "to": 0
  },
  {
   "from": 13,
   "mutated": 0,
   "to": 12
  },
  {
   "from": 14,
   "mutated": 0,
   "to": 5
  },
  {
   "from": 14,
   "mutated": 3,
   "to": 13
  },
  {
   "from": 15,
   "mutated": 0,
   "to": 11
  },
  {
   "from": 15,
   "mutated": 2,
   "to": 16
  },
  {
   "from": 15,
   "mutated": 1,
   "to": 17
  },
  {
   "from": 16,
   "mutated": 0,
   "to": 10
  },
  {
   "from": 16,
   "mutated": 1,
   "to": 13
  },
  {
   "from": 17,
   "mutated": 0,
   "to": 6
  },
  {
   "from": 17,
   "mutated": 2,
   "to": 14
  }
 ],
 "complete": true,
 "nodes": [
  {
   "id": 0,
   "key": "P:1,2,3,",
   "label": "(0, P1 P2 P3)",
   "module": [],
   "support": [
    1,
    2,
    3
   ]
  },
  {
   "id": 1,
   "key": "d0,0,1;t0,0,1;s0,0,1;e1;p0,0,0;i0,0,1#0|P:1,2,",
   "label": "(3, P1 P2)",
   "module": [
    6
   ],
   "support": [
    1,
    2
   ]
  },
  {
   "id": 2,
   "key": "d0,0,1;t0,0,1;s0,0,1;e1;p0,0,0;i0,0,1#0|d0,1,1;t0,0,1;s0,1,0;e1;p0,0,0;i0,1,1#0|P:1,",
   "label": "(3 + 3/2, P1)",
   "module": [
    6,
    7
   ],
   "support": [
    1
   ]
  },
  {
   "id": 3,
   "key": "d0,0,1;t0,0,1;s0,0,1;e1;p0,0,0;i0,0,1#0|d0,1,1;t0,0,1;s0,1,0;e1;p0,0,0;i0,1,1#0|d1,1,1;t0,0,1;s1,0,0;e1;p0,0,1;i1,1,1#0|P:",
   "label": "3 + 3/2 + 3/2/1",
   "module": [
    6,
    7,
    2
   ],
   "support": []
  },
  {
   "id": 4,
   "key": "d0,0,1;t0,0,1;s0,0,1;e1;p0,0,0;i0,0,1#0|d1,0,0;t1,0,0;s1,0,0;e1;p1,1,1;i1,0,0#0|P:2,",
   "label": "(3 + 1, P2)",
   "module": [
    6,
    5
   ],
   "support": [
    2
   ]
  },
  {
   "id": 5,
   "key": "d0,0,1;t0,0,1;s0,0,1;e1;p0,0,0;i0,0,1#0|d1,0,0;t1,0,0;s1,0,0;e1;p1,1,1;i1,0,0#0|d2,1,1;t1,0,1;s1,0,0;e2;p1,1,1;i2,1,1#0|P:",
   "label": "3 + 1 + 1 3/2/1",
   "module": [
    6,
    5,
    3
   ],
   "support": []
  },
  {
   "id": 6,
   "key": "d0,0,1;t0,0,1;s0,0,1;e1;p0,0,0;i0,0,1#0|d1,1,1;t0,0,1;s1,0,0;e1;p0,0,1;i1,1,1#0|d2,1,1;t1,0,1;s1,0,0;e2;p1,1,1;i2,1,1#0|P:",
   "label": "3 + 3/2/1 + 1 3/2/1",
   "module": [
    6,
    2,
    3
   ],
   "support": []
  },
  {
   "id": 7,
   "key": "d0,1,0;t0,1,0;s0,1,0;e1;p0,0,0;i0,1,0#0|P:1,3,",
   "label": "(2, P1 P3)",
   "module": [
    4
   ],
   "support": [
    1,
    3
   ]
  },
  {
   "id": 8,
   "key": "d0,1,0;t0,1,0;s0,1,0;e1;p0,0,0;i0,1,0#0|d0,1,1;t0,0,1;s0,1,0;e1;p0,0,0;i0,1,1#0|P:1,",
   "label": "(2 + 3/2, P1)",
   "module": [
    4,
    7
   ],
   "support": [
    1
   ]
  },
  {
   "id": 9,
   "key": "d0,1,0;t0,1,0;s0,1,0;e1;p0,0,0;i0,1,0#0|d0,1,1;t0,0,1;s0,1,0;e1;p0,0,0;i0,1,1#0|d1,1,1;t0,0,1;s1,0,0;e1;p0,0,1;i1,1,1#0|P:",
   "label": "2 + 3/2 + 3/2/1",
   "module": [
    4,
    7,
    2
   ],
   "support": []
  },
  {
   "id": 10,
   "key": "d0,1,0;t0,1,0;s0,1,0;e1;p0,0,0;i0,1,0#0|d1,1,0;t0,1,0;s1,0,0;e1;p1,1,1;i1,1,0#0|P:3,",
   "label": "(2 + 2/1, P3)",
   "module": [
    4,
    1
   ],
   "support": [
    3
   ]
  },
  {
   "id": 11,
   "key": "d0,1,0;t0,1,0;s0,1,0;e1;p0,0,0;i0,1,0#0|d1,1,0;t0,1,0;s1,0,0;e1;p1,1,1;i1,1,0#0|d1,1,1;t0,0,1;s1,0,0;e1;p0,0,1;i1,1,1#0|P:",
   "label": "2 + 2/1 + 3/2/1",
   "module": [
    4,
    1,
    2
   ],
   "support": []
  },
  {
   "id": 12,
   "key": "d1,0,0;t1,0,0;s1,0,0;e1;p1,1,1;i1,0,0#0|P:2,3,",
   "label": "(1, P2 P3)",
   "module": [
    5
   ],
   "support": [
    2,
    3
   ]
  },
  {
   "id": 13,
   "key": "d1,0,0;t1,0,0;s1,0,0;e1;p1,1,1;i1,0,0#0|d2,1,0;t1,0,0;s1,0,0;e2;p2,1,1;i2,1,0#0|P:3,",
   "label": "(1 + 1/2/1, P3)",
   "module": [
    5,
    0
   ],
   "support": [
    3
   ]
  },
  {
   "id": 14,
   "key": "d1,0,0;t1,0,0;s1,0,0;e1;p1,1,1;i1,0,0#0|d2,1,0;t1,0,0;s1,0,0;e2;p2,1,1;i2,1,0#0|d2,1,1;t1,0,1;s1,0,0;e2;p1,1,1;i2,1,1#0|P:",
   "label": "1 + 1/2/1 + 1 3/2/1",
   "module": [
    5,
    0,
    3
   ],
   "support": []
  },
  {
   "id": 15,
   "key": "d1,1,0;t0,1,0;s1,0,0;e1;p1,1,1;i1,1,0#0|d1,1,1;t0,0,1;s1,0,0;e1;p0,0,1;i1,1,1#0|d2,1,0;t1,0,0;s1,0,0;e2;p2,1,1;i2,1,0#0|P:",
   "label": "2/1 + 3/2/1 + 1/2/1",
   "module": [
    1,
    2,
    0
   ],
   "support": []
  },
  {
   "id": 16,
   "key": "d1,1,0;t0,1,0;s1,0,0;e1;p1,1,1;i1,1,0#0|d2,1,0;t1,0,0;s1,0,0;e2;p2,1,1;i2,1,0#0|P:3,",
   "label": "(2/1 + 1/2/1, P3)",
   "module": [
    1,
    0
   ],
   "support": [
    3
   ]
  },
  {
   "id": 17,
   "key": "d1,1,1;t0,0,1;s1,0,0;e1;p0,0,1;i1,1,1#0|d2,1,0;t1,0,0;s1,0,0;e2;p2,1,1;i2,1,0#0|d2,1,1;t1,0,1;s1,0,0;e2;p1,1,1;i2,1,1#0|P:",
   "label": "3/2/1 + 1/2/1 + 1 3/2/1",
   "module": [
    2,
    0,
    3
   ],
   "support": []
  }
 ],
 "registry": [
  {
   "diagram": "1>2>1",
   "dims": {
    "1": 2,
    "2": 1,
    "3": 0
   },
   "key": "d2,1,0;t1,0,0;s1,0,0;e2;p2,1,1;i2,1,0#0",
   "layers": "1/2/1",
   "mats": {
    "a": [
     [
      "0"
     ],
     [
      "1"
     ]
    ],
    "b": [
     [
      "1",
      "0"
     ]
    ],
    "g": [
     []
    ]
   }
  },
  {
   "diagram": "2>1",
   "dims": {
    "1": 1,
    "2": 1,
    "3": 0
   },
   "key": "d1,1,0;t0,1,0;s1,0,0;e1;p1,1,1;i1,1,0#0",
   "layers": "2/1",
   "mats": {
    "a": [
     [
      "1"
     ]
    ],
    "b": [
     [
      "0"
     ]
    ],
    "g": [
     []
    ]
   }
  },
  {
   "diagram": "3>2>1",
   "dims": {
    "1": 1,
    "2": 1,
    "3": 1
   },
   "key": "d1,1,1;t0,0,1;s1,0,0;e1;p0,0,1;i1,1,1#0",
   "layers": "3/2/1",
   "mats": {
    "a": [
     [
      "1"
     ]
    ],
    "b": [
     [
      "0"
     ]
    ],
    "g": [
     [
      "1"
     ]
    ]
   }
  },
  {
   "dims": {
    "1": 2,
    "2": 1,
    "3": 1
   },
   "key": "d2,1,1;t1,0,1;s1,0,0;e2;p1,1,1;i2,1,1#0",
   "layers": "1 3/2/1",
   "mats": {
    "a": [
     [
      "1"
     ],
     [
      "0"
     ]
    ],
    "b": [
     [
      "0",
      "-1"
     ]
    ],
    "g": [
     [
      "1"
     ]
    ]
   }
  },
  {
   "diagram": "2",
   "dims": {
    "1": 0,
    "2": 1,
    "3": 0
   },
   "key": "d0,1,0;t0,1,0;s0,1,0;e1;p0,0,0;i0,1,0#0",
   "layers": "2",
   "mats": {
    "a": [],
    "b": [
     []
    ],
    "g": [
     []
    ]
   }
  },
  {
   "diagram": "1",
   "dims": {
    "1": 1,
    "2": 0,
    "3": 0
   },
   "key": "d1,0,0;t1,0,0;s1,0,0;e1;p1,1,1;i1,0,0#0",
   "layers": "1",
   "mats": {
    "a": [
     []
    ],
    "b": [],
    "g": []
   }
  },
  {
   "diagram": "3",
   "dims": {
    "1": 0,
    "2": 0,
    "3": 1
   },
   "key": "d0,0,1;t0,0,1;s0,0,1;e1;p0,0,0;i0,0,1#0",
   "layers": "3",
   "mats": {
    "a": [],
    "b": [],
    "g": []
   }
  },
  {
   "diagram": "3>2",
   "dims": {
    "1": 0,
    "2": 1,
    "3": 1
   },
   "key": "d0,1,1;t0,0,1;s0,1,0;e1;p0,0,0;i0,1,1#0",
   "layers": "3/2",
   "mats": {
    "a": [],
    "b": [
     []
    ],
    "g": [
     [
      "-1"
     ]
    ]
   }
  }
 ],
 "vertices": [
  1,
  2,
  3
 ]
}
)GOLD";

}  // namespace qtau::golden
