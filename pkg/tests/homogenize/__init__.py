"""Tests for temporal_homogenization.homogenize"""
