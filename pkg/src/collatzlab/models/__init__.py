"""Domain models for collatzlab."""
