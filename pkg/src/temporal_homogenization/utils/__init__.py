"""temporal_homogenization.utils"""
