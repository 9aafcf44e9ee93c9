"""Unit tests for the interface-layer solver."""
