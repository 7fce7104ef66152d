from .rng import make_rng, random_matrix, random_unimodular

__all__ = ["make_rng", "random_matrix", "random_unimodular"]
