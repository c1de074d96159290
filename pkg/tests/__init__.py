"""
Test suite for k3lat
"""
