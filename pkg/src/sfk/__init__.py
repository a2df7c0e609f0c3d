"""Nowhere-zero flows on signed multigraphs."""
