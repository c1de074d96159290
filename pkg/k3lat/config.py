"""
Configuration for k3lat
"""

import os


class Config:
    """Runtime configuration with environment variable support"""

    # Default values
    DEFAULT_THREADS = 1
    DEFAULT_LOG_LEVEL = "WARNING"
    DEFAULT_K_MAX = 10
    DEFAULT_L_MAX = 100

    @staticmethod
    def get_threads() -> int:
        """Get the parallelism cap from K3LAT_THREADS (at least 1)"""
        try:
            threads = int(os.getenv("K3LAT_THREADS", Config.DEFAULT_THREADS))
        except (ValueError, TypeError):
            return Config.DEFAULT_THREADS
        return max(threads, 1)

    @staticmethod
    def get_log_level() -> str:
        """Get log level name from environment with default"""
        level = os.getenv("K3LAT_LOG_LEVEL", Config.DEFAULT_LOG_LEVEL).strip().upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            return Config.DEFAULT_LOG_LEVEL
        return level

    @staticmethod
    def get_k_max() -> int:
        """Get default first-parameter bound for `families solve`"""
        try:
            return int(os.getenv("K3LAT_K_MAX", Config.DEFAULT_K_MAX))
        except (ValueError, TypeError):
            return Config.DEFAULT_K_MAX

    @staticmethod
    def get_l_max() -> int:
        """Get default second-parameter bound for `families solve`"""
        try:
            return int(os.getenv("K3LAT_L_MAX", Config.DEFAULT_L_MAX))
        except (ValueError, TypeError):
            return Config.DEFAULT_L_MAX
