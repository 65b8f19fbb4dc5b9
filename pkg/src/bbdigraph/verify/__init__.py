"""Enumeration, sampling, theorem verification, lemma audits and open-question search."""
