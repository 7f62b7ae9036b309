"""Gaussian-shift path-integral approximation for quartic anharmonicity in
zero, one and two dimensions, with brute-force oracles for every estimate."""

__version__ = "0.1.0"
