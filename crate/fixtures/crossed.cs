{
  "field": "F5",
  "schema": "crossed",
  "spaces": {
    "A": ["e0"],
    "B": ["e0"]
  },
  "tensors": {
    "coact_l": [],
    "coact_r": [],
    "cocycle": [
      [0, 0, 0, "2"]
    ],
    "mul_a": [
      [0, 0, 0, "1"]
    ],
    "mul_b": []
  }
}
