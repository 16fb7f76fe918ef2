from pathlib import Path
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Engine settings managed by Pydantic.
    Reads from environment variables and .env file.
    """
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    PROJECT_NAME: str = "Matsuo Fusion Engine"

    # Safety cap on the dimension of adjoint matrices. Hat algebras of E8
    # have dimension 240; symbolic elimination at that size is impractical.
    AXIAL_MAX_DIM: int = 300

    # Printed name of the formal parameter alpha in rational functions
    SYMBOL_NAME: str = "a"

    # Analysis defaults
    DEFAULT_ALPHA: str = "1/4"

    # Verification suite defaults
    VERIFY_MAX_RANK: int = 6
    VERIFY_ALPHAS: str = "1/4,1/7,1/32"
    FROBENIUS_SAMPLES: int = 25
    RANDOM_SEED: int = 20240601

    # Logging
    LOG_LEVEL: str = "INFO"

    # Storage Paths
    BASE_DIR: Path = Path(__file__).resolve().parent.parent
    REPORT_DIR: Path = BASE_DIR / "reports"


settings = Settings()
