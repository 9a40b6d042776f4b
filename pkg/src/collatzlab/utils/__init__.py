"""Utility helpers for collatzlab."""
