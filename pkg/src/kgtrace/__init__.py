"""kgtrace: detect text-level influence between documents via knowledge-graph embeddings.

The pipeline ingests a subject-grouped corpus with citation links, extracts a
per-document knowledge graph, embeds each graph with a contrastively trained
graph-convolutional encoder, and benchmarks citation prediction against three
classical similarity baselines (n-gram text reuse, LDA topic divergence, and
summed chunk embeddings).
"""

__version__ = "0.1.0"
