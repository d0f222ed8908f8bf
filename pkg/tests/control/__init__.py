"""Tests for temporal_homogenization.control"""
