LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DEFAULT_HANDLERS = ['console', ]

VERBOSITY_LEVELS = {0: 'WARNING', 1: 'INFO', 2: 'DEBUG'}


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': LOG_FORMAT
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
            'stream': 'ext://sys.stderr',
        },
    },
    'root': {
        'level': 'WARNING',
        'handlers': LOG_DEFAULT_HANDLERS,
    },
}


def level_for(verbosity: int, default: str = 'WARNING') -> str:
    if verbosity <= 0:
        return default
    return VERBOSITY_LEVELS[min(verbosity, max(VERBOSITY_LEVELS))]
