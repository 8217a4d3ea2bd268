"""Conjugacy class sizes of normal subgroups and their common-divisor graphs."""
