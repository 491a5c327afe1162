"""1-factors and the index sets in bijection with them."""
