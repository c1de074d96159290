"""
Tests for environment configuration
"""

import os
from unittest.mock import patch

from k3lat.config import Config


class TestConfig:
    """Test Config getters"""

    def test_defaults(self):
        """Test defaults when no variables are set"""
        with patch.dict(os.environ, {}, clear=True):
            assert Config.get_threads() == 1
            assert Config.get_log_level() == "WARNING"
            assert Config.get_k_max() == 10
            assert Config.get_l_max() == 100

    def test_threads_from_env(self):
        """Test K3LAT_THREADS is read"""
        with patch.dict(os.environ, {"K3LAT_THREADS": "4"}):
            assert Config.get_threads() == 4

    def test_threads_clamped(self):
        """Test non-positive thread counts are clamped to 1"""
        with patch.dict(os.environ, {"K3LAT_THREADS": "0"}):
            assert Config.get_threads() == 1
        with patch.dict(os.environ, {"K3LAT_THREADS": "-3"}):
            assert Config.get_threads() == 1

    def test_threads_malformed(self):
        """Test a malformed value falls back to the default"""
        with patch.dict(os.environ, {"K3LAT_THREADS": "many"}):
            assert Config.get_threads() == Config.DEFAULT_THREADS

    def test_log_level(self):
        """Test log level is normalized and validated"""
        with patch.dict(os.environ, {"K3LAT_LOG_LEVEL": "debug"}):
            assert Config.get_log_level() == "DEBUG"
        with patch.dict(os.environ, {"K3LAT_LOG_LEVEL": "verbose"}):
            assert Config.get_log_level() == "WARNING"

    def test_bounds_from_env(self):
        """Test enumeration bounds"""
        with patch.dict(os.environ, {"K3LAT_K_MAX": "50", "K3LAT_L_MAX": "oops"}):
            assert Config.get_k_max() == 50
            assert Config.get_l_max() == Config.DEFAULT_L_MAX
