"""Graph and product-automaton plumbing shared by methods and convergence."""
