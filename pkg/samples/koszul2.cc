{
  "differentials": [
    [
      [
        "x",
        "y"
      ]
    ],
    [
      [
        "-y"
      ],
      [
        "x"
      ]
    ]
  ],
  "ranks": [
    1,
    2,
    1
  ],
  "ring": {
    "field": {
      "kind": "prime-field",
      "p": 3
    },
    "laurent": false,
    "order": "grlex",
    "variables": [
      "x",
      "y"
    ]
  },
  "type": "free-complex"
}
