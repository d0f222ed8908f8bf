"""Tests for temporal_homogenization.circuits"""
