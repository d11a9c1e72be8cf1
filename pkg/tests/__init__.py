"""Tests for continuous regulatory intelligence system."""
