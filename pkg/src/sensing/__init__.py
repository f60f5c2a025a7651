"""Difference-set sensing matrices, their verification and sparse recovery."""
