"""Exact computation and verification of two-variable Laguerre polynomials L_{n,m}(x, y)."""
from .laguerre1 import laguerre_explicit
from .laguerre2 import explicit, horn_form, recurrence_table, row_form_x, row_form_y
from .polyring import Poly1, Poly2

__all__ = [
    "Poly1",
    "Poly2",
    "explicit",
    "horn_form",
    "laguerre_explicit",
    "recurrence_table",
    "row_form_x",
    "row_form_y",
]

__version__ = "0.1.0"
