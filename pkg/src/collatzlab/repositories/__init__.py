"""Repositories for collatzlab."""
