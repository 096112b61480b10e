// Payloads captured verbatim from the backend service on the shared
// fixture article (tests/fixtures/articles/12345.xml + core lexicons).

export const article = {
  "abstract": [
    {
      "entities": [
        {
          "class": "Disease",
          "end": 9,
          "normalized": "DIS:TUMOR",
          "start": 4,
          "surface": "tumor"
        },
        {
          "class": "Gene",
          "end": 24,
          "normalized": "GENE:TP53",
          "start": 21,
          "surface": "p53"
        },
        {
          "class": "MeSH",
          "end": 44,
          "normalized": "MESH:APOPTOSIS",
          "start": 35,
          "surface": "apoptosis"
        },
        {
          "class": "Disease",
          "end": 61,
          "normalized": "DIS:BREASTCANCER",
          "start": 48,
          "surface": "breast cancer"
        }
      ],
      "index": 0,
      "text": "The tumor suppressor p53 regulates apoptosis in breast cancer."
    },
    {
      "entities": [
        {
          "class": "SNP",
          "end": 13,
          "normalized": null,
          "start": 8,
          "surface": "rs334"
        }
      ],
      "index": 1,
      "text": "Variant rs334 alters drug response in patients."
    },
    {
      "entities": [
        {
          "class": "Chemical",
          "end": 18,
          "normalized": "CHEM:HEATSHOCK",
          "start": 0,
          "surface": "Heat shock protein"
        },
        {
          "class": "Abbreviation",
          "end": 23,
          "normalized": null,
          "start": 20,
          "surface": "HSP"
        },
        {
          "class": "MeSH",
          "end": 48,
          "normalized": "MESH:SURVIVAL",
          "start": 40,
          "surface": "survival"
        }
      ],
      "index": 2,
      "text": "Heat shock protein (HSP) levels predict survival."
    }
  ],
  "doc_id": "12345",
  "sections": [
    {
      "paragraphs": [
        {
          "entities": [
            {
              "class": "Gene",
              "end": 15,
              "normalized": "GENE:TP53",
              "start": 12,
              "surface": "p53"
            },
            {
              "class": "MeSH",
              "end": 40,
              "normalized": "MESH:APOPTOSIS",
              "start": 31,
              "surface": "apoptosis"
            },
            {
              "class": "Disease",
              "end": 63,
              "normalized": "DIS:BREASTCANCER",
              "start": 50,
              "surface": "breast cancer"
            }
          ],
          "paragraph_id": "0:0",
          "text": "We measured p53 expression and apoptosis rates in breast cancer tissue samples."
        },
        {
          "entities": [
            {
              "class": "SNP",
              "end": 39,
              "normalized": null,
              "start": 34,
              "surface": "rs334"
            }
          ],
          "paragraph_id": "0:1",
          "text": "Genotyping identified the variant rs334 in drug response cohorts of patients."
        }
      ],
      "section_id": 0,
      "title": "Methods"
    },
    {
      "paragraphs": [
        {
          "entities": [
            {
              "class": "Chemical",
              "end": 18,
              "normalized": "CHEM:HEATSHOCK",
              "start": 0,
              "surface": "Heat shock protein"
            },
            {
              "class": "Abbreviation",
              "end": 23,
              "normalized": null,
              "start": 20,
              "surface": "HSP"
            },
            {
              "class": "MeSH",
              "end": 56,
              "normalized": "MESH:SURVIVAL",
              "start": 48,
              "surface": "survival"
            }
          ],
          "paragraph_id": "1:0",
          "text": "Heat shock protein (HSP) levels correlated with survival and predicted outcome."
        },
        {
          "entities": [
            {
              "class": "Disease",
              "end": 5,
              "normalized": "DIS:TUMOR",
              "start": 0,
              "surface": "Tumor"
            },
            {
              "class": "MeSH",
              "end": 44,
              "normalized": "MESH:APOPTOSIS",
              "start": 35,
              "surface": "apoptosis"
            },
            {
              "class": "Gene",
              "end": 56,
              "normalized": "GENE:TP53",
              "start": 53,
              "surface": "p53"
            },
            {
              "class": "Gene",
              "end": 78,
              "normalized": "GENE:KIN1",
              "start": 72,
              "surface": "kinase"
            }
          ],
          "paragraph_id": "1:1",
          "text": "Tumor suppressor pathways regulate apoptosis through p53 and downstream kinase targets."
        }
      ],
      "section_id": 1,
      "title": "Results"
    }
  ],
  "title": "Regulation of p53 signaling in breast cancer"
} as const;

export const condensed = {
  "doc_id": "12345",
  "entries": [
    {
      "paragraph_id": "1:1",
      "qs_index": 0,
      "rss": {
        "coverage": 0.714286,
        "rss": 0.357143,
        "spread": 0.5
      },
      "scores": {
        "io": 0.714286,
        "pr_isr": 0.630134
      },
      "section_id": 1
    },
    {
      "paragraph_id": "0:1",
      "qs_index": 1,
      "rss": {
        "coverage": 0.833333,
        "rss": 0.416667,
        "spread": 0.5
      },
      "scores": {
        "io": 0.833333,
        "pr_isr": 0.630134
      },
      "section_id": 0
    },
    {
      "paragraph_id": "1:0",
      "qs_index": 2,
      "rss": {
        "coverage": 1.0,
        "rss": 0.5,
        "spread": 0.5
      },
      "scores": {
        "io": 1.0,
        "pr_isr": 0.882187
      },
      "section_id": 1
    }
  ],
  "rendered_paragraph_ids": [
    "0:1",
    "1:0",
    "1:1"
  ]
} as const;

export const condensedQs0 = {
  "doc_id": "12345",
  "entry": {
    "paragraph_id": "1:1",
    "qs_index": 0,
    "rss": {
      "coverage": 0.714286,
      "rss": 0.357143,
      "spread": 0.5
    },
    "scores": {
      "io": 0.714286,
      "pr_isr": 0.630134
    },
    "section_id": 1
  },
  "qs_index": 0
} as const;

export const entities = [
  {
    "class": "Gene",
    "count": 3,
    "key": "GENE:TP53"
  },
  {
    "class": "MeSH",
    "count": 3,
    "key": "MESH:APOPTOSIS"
  },
  {
    "class": "Chemical",
    "count": 2,
    "key": "CHEM:HEATSHOCK"
  },
  {
    "class": "Disease",
    "count": 2,
    "key": "DIS:BREASTCANCER"
  },
  {
    "class": "Disease",
    "count": 2,
    "key": "DIS:TUMOR"
  },
  {
    "class": "Abbreviation",
    "count": 2,
    "key": "HSP"
  },
  {
    "class": "MeSH",
    "count": 2,
    "key": "MESH:SURVIVAL"
  },
  {
    "class": "SNP",
    "count": 2,
    "key": "rs334"
  },
  {
    "class": "Gene",
    "count": 1,
    "key": "GENE:KIN1"
  }
] as const;

export const health = {
  "doc_count": 1,
  "status": "ok"
} as const;

export const search = [
  {
    "doc_id": "12345",
    "score": 0.486847,
    "title": "Regulation of p53 signaling in breast cancer"
  }
] as const;

