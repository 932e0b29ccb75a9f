"""
Dual Complex Eigen Toolkit

Inverses, eigenvalues, diagonalizability verdicts and Jordan forms of dual
complex matrices, with a command-line front end for batch use.
"""

__version__ = "1.0.0"
