"""Configuration for collatzlab."""
