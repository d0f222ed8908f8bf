"""Tests for temporal_homogenization.algebra"""
