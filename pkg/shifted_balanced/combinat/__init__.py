"""Combinatorics of shifted tableaux, type B words and the bijections between them."""
