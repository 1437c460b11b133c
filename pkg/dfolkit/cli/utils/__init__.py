"""Console helpers shared by the commands."""
