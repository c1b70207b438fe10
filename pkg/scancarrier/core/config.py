from scancarrier.config.defaults import DEFAULT_CONFIG
from scancarrier.core.cache import PathCache


class Config:
    def __init__(self):
        self._config = DEFAULT_CONFIG.copy()
        self._path_cache = None

    def reset(self):
        self._config = DEFAULT_CONFIG.copy()
        self._path_cache = None

    def configure(self, **kwargs):
        """Update configuration settings"""
        unknown = set(kwargs) - set(DEFAULT_CONFIG)
        if unknown:
            raise AttributeError(f"Unknown settings: {', '.join(sorted(unknown))}")
        self._config.update(kwargs)
        self._path_cache = None  # Rebuild cache on config change

    def __getattr__(self, name):
        """Direct access to config values"""
        if name.startswith("_"):
            raise AttributeError(name)
        if name in self._config:
            return self._config[name]
        raise AttributeError(f"'{self.__class__.__name__}' has no attribute '{name}'")

    @property
    def path_cache(self) -> PathCache:
        """Lazy-loaded scan path cache"""
        if self._path_cache is None:
            self._path_cache = PathCache(max_entries=self._config["PATH_CACHE_SIZE"])
        return self._path_cache


# Global configuration instance
settings = Config()
