from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    log_level: str = 'WARNING'
    logging_config: Path = Path('logging.ini')
    max_order: int = 8
    plot_cell: int = 28
    plot_margin: int = 40

    model_config = SettingsConfigDict(env_prefix='UCYCLE_', env_file='.env', env_file_encoding='utf-8')


settings = Settings()
