DEFAULT_CONFIG = {
    "DEFAULT_SCAN": "D0",  # scan used by presets
    "DEFAULT_KEYWORD": "UniversityOfMysore",
    "MAX_PIPELINE_DEPTH": 64,
    "PATH_CACHE_SIZE": 64,  # memoized scan paths
    "METRICS_FORMAT": "text",
    "LOG_LEVEL": "WARNING",
}
