"""Runtime settings read from the environment and an optional ``.env`` file."""
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from dotenv import load_dotenv

from knotmosaic.errors import ConfigError

PREFIX = 'KNOTMOSAIC_'


@dataclass(frozen=True)
class Settings:
    crossing_cap: int = 16
    search_depth: int = 12
    search_pad: int = 2
    max_states: int = 5_000_000
    orbit_limit: int = 4
    jobs: int = 1
    catalog_extra: Tuple[str, ...] = ()

    @classmethod
    def from_env(cls, environ=None):
        environ = os.environ if environ is None else environ
        defaults = cls()
        values = {}
        for name in ('crossing_cap', 'search_depth', 'search_pad',
                     'max_states', 'orbit_limit', 'jobs'):
            key = PREFIX + name.upper()
            raw = environ.get(key)
            if raw is None or not raw.strip():
                values[name] = getattr(defaults, name)
                continue
            try:
                value = int(raw)
            except ValueError:
                raise ConfigError(f"{key} must be an integer, got {raw!r}")
            if value < 0 or (name == 'jobs' and value < 1):
                raise ConfigError(f"{key} out of range: {value}")
            values[name] = value
        extra = environ.get(PREFIX + 'CATALOG_EXTRA', '')
        values['catalog_extra'] = tuple(p for p in extra.split(os.pathsep)
                                        if p.strip())
        return cls(**values)


@lru_cache(maxsize=None)
def get_settings() -> Settings:
    load_dotenv()
    return Settings.from_env()
