"""Gröbner bases of saturations and colon ideals over prime fields."""
