"""Wire models and DOT rendering"""
