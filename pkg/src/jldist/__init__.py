"""Distinction of level-zero cuspidals of inner forms of GL_n, decided
from tame parameters and checked against finite-group computations."""

__version__ = "0.1.0"
