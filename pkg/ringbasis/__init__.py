"""
Groebner Bases over Coefficient Rings

Short reduced Groebner bases over Z, fields and k[t], the freeness test for
residue class rings, module bases and border bases.
"""

__version__ = "0.1.0"
