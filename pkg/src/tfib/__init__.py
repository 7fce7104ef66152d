"""T^3-fibration toolkit: monodromy, discriminant graphs, toric models and the quintic."""
