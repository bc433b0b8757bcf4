"""Exact invariants of non-connected affine Kac-Moody groups."""

from ._kmfold import CaseError, cartan, case, recognize, render, representatives, table, verify

__all__ = ["CaseError", "cartan", "case", "recognize", "render", "representatives", "table", "verify"]
