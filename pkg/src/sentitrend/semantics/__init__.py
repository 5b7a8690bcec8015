from .embeddings import (EmbeddingMatrix, SgnsConfig, cosine, most_similar, pair_gradients,
                         pair_loss, save_text, train_sgns)
from .entities import Entity, EntityKind, Gazetteer, entity_frequencies, extract_entities

__all__ = [
    "EmbeddingMatrix", "Entity", "EntityKind", "Gazetteer", "SgnsConfig", "cosine",
    "entity_frequencies", "extract_entities", "most_similar", "pair_gradients", "pair_loss",
    "save_text", "train_sgns",
]
