"""Tests for temporal_homogenization.integrate"""
