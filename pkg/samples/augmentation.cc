{
  "differentials": [
    [
      [
        "1"
      ]
    ]
  ],
  "ring": {
    "field": {
      "kind": "prime-field",
      "p": 5
    },
    "laurent": false,
    "variables": [
      "x"
    ]
  },
  "terms": [
    {
      "gens": 1,
      "relations": [
        [
          "x"
        ]
      ]
    },
    {
      "gens": 1,
      "relations": [
        []
      ]
    }
  ],
  "type": "presented-complex"
}
