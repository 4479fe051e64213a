import os

from pydantic import BaseSettings, Field

# Корень проекта
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
ENV_FILE_PATH = os.path.join(BASE_DIR, 'core', '.env')


class Settings(BaseSettings):
    # SPARQL endpoint
    timeout: float = Field(60.0, gt=0)
    page_size: int = Field(1000, ge=1)
    max_retries: int = Field(3, ge=0)
    backoff_factor: float = Field(0.5, ge=0)
    max_in_flight: int = Field(4, ge=1)
    get_max_bytes: int = 2000
    user_agent: str = 'g2pg/1.0'

    log_level: str = 'WARNING'

    class Config:
        env_prefix = 'G2PG_'
        env_file = ENV_FILE_PATH


settings = Settings()
