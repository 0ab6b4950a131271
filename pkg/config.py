# File: config.py
import os
from typing import Optional
from pydantic_settings import BaseSettings
from dotenv import load_dotenv
from pydantic import field_validator

load_dotenv()

class Settings(BaseSettings):
    PROJECT_NAME: str = "cablehfk"

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")
    LOG_FILE: Optional[str] = os.getenv("LOG_FILE") or None
    LOG_JSON: bool = False

    # Output
    HFK_CABLE_NO_COLOR: bool = False

    # Linear algebra
    DENSE_CUTOFF: int = int(os.getenv("DENSE_CUTOFF", 64))

    # Cabling: heuristic large-n bound N = LARGE_N_FACTOR * deg HFK(K)
    LARGE_N_FACTOR: int = int(os.getenv("LARGE_N_FACTOR", 2))

    # Verify pipeline
    VERIFY_WORKERS: int = int(os.getenv("VERIFY_WORKERS", 4))
    DEFAULT_VERIFY_N_OFFSET: int = 1

    @field_validator("LOG_LEVEL", mode="before")
    def normalize_log_level(cls, v: str) -> str:
        return str(v).strip().upper()

    @field_validator("HFK_CABLE_NO_COLOR", mode="before")
    def parse_no_color(cls, v) -> bool:
        # any non-empty value other than an explicit false disables color
        if isinstance(v, str):
            return v.strip().lower() not in ("", "0", "false", "no")
        return bool(v)

    class Config:
        case_sensitive = True

settings = Settings()
