"""Runtime configuration for the simulator."""
from pydantic_settings import BaseSettings


class SimulatorSettings(BaseSettings):
    """Configuration read from ``BPSIM_*`` environment variables or ``.env``."""

    log_level: str = "WARNING"
    max_rounds: int = 10_000
    independence_degree_guard: int = 25
    mcm_edge_guard: int = 40
    record_digests: bool = True
    keep_full_states: bool = False
    sweep_workers: int = 4
    default_epsilon: float = 0.5

    class Config:
        env_prefix = "BPSIM_"
        env_file = ".env"
        extra = "ignore"


# Global settings instance
_settings: SimulatorSettings | None = None


def get_settings() -> SimulatorSettings:
    """Get the global settings instance.

    Returns:
        The cached SimulatorSettings instance.
    """
    global _settings
    if _settings is None:
        _settings = SimulatorSettings()
    return _settings
