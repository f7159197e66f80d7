"""Exact construction of e8 from 3x3 matrices over pairs of octonion algebras."""
