"""Test suite for convlab."""
