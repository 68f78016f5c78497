"""Pytest configuration: keep the test directory importable for helpers."""
