"""Aharonov-Casher braiding simulator."""
