"""Test suite for curvature-bounds"""
