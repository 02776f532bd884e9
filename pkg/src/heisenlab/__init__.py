"""Exact computational laboratory for commuting graphs of Heisenberg and
unitriangular groups, their quasirandomness statistics, Rado-graph models,
and the associated random walks."""

__version__ = "0.1.0"
