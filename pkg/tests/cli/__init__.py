"""Tests for temporal_homogenization.cli"""
