"""Tests for temporal_homogenization.series"""
