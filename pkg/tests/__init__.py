"""Tests for temporal_homogenization"""
