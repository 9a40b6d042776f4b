"""Core mathematics: trajectories, representations, even/odd families and asymptotics."""
