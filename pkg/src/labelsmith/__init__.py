"""Labelsmith: a self-hostable service for crowdsourced design-pattern
labelling of Java source files."""

__version__ = "0.1.0"
