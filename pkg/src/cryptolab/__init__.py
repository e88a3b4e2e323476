"""Cryptanalysis workbench: GF(2) algebra, Boolean functions, Reed-Muller key
binding, metric complements, block-cipher zerosums, protocol attacks, Latin
square authentication, a toy proof-of-work coin, and number theory."""

__version__ = "0.1.0"
