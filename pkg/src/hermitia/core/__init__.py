"""Ring arithmetic, Hermitian lattices and the lattice catalog."""
