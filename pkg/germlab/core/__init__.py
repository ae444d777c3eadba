"""
Core algorithms: orbit trees, Diophantine systems, weighted chains,
blowup resolution and monodromy classification
"""
