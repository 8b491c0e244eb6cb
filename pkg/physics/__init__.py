"""Scattering of a scalar relativistic particle by V(x) = a·tanh(b·x)."""
