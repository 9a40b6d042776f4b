"""Services for collatzlab."""
