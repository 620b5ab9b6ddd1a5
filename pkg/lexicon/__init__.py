from .types import (
    RelationLabel,
    TermTable,
    EmbeddingMatrix,
    ScoredCandidate,
    VerifiedEdge,
    FinalCluster,
    canonical_pair,
    check_disjoint,
)
from .io import (
    load_term_table,
    save_term_table,
    load_embeddings,
    save_embeddings,
    load_dictionary,
    read_candidates,
    write_candidates,
    read_edges,
    write_edges,
    file_digest,
)
from .utils import print_rank_0, is_rank_0
