"""Tests for temporal_homogenization.growth"""
