"""
Configuration Module with Pydantic Validation
"""
import os
from pathlib import Path
from pydantic import BaseModel, Field, field_validator
from dotenv import load_dotenv

load_dotenv()

BASE_DIR = Path(__file__).parent.parent.parent
LOG_DIR = BASE_DIR / "logs"

LOG_DIR.mkdir(exist_ok=True)

CARET_LETTERS = "re()ab"

class EnumerationConfig(BaseModel):
    max_carets: int = Field(12, ge=1, le=16)
    max_radius: int = Field(10, ge=0, le=12)

    class Config:
        frozen = True

class VerifyConfig(BaseModel):
    seed: int = Field(20240601, ge=0)
    max_carets: int = Field(7, ge=1, le=16)
    radius: int = Field(5, ge=0, le=12)
    wrong_samples: int = Field(1000, ge=0, le=100000)
    associativity_samples: int = Field(200, ge=0, le=100000)
    ogden_mutations: int = Field(10, ge=0, le=1000)
    quasigeodesic_radius: int = Field(8, ge=0, le=12)
    d_bound: float = Field(4.0, gt=0.0)

    class Config:
        frozen = True

class AutomataConfig(BaseModel):
    pad_symbol: str = Field("#", min_length=1, max_length=1)
    max_dot_states: int = Field(5000, ge=1)

    @field_validator('pad_symbol')
    @classmethod
    def validate_pad(cls, v: str) -> str:
        if v in CARET_LETTERS or v in ",{}\"":
            raise ValueError(f"pad symbol {v!r} collides with a caret letter or text separator")
        return v

    class Config:
        frozen = True

class APIConfig(BaseModel):
    host: str = Field("localhost")
    port: int = Field(8000, ge=1024, le=65535)
    reload: bool = Field(True)
    workers: int = Field(1, ge=1, le=8)

    class Config:
        frozen = True

class LoggingConfig(BaseModel):
    level: str = Field("INFO", pattern="^(DEBUG|INFO|WARNING|ERROR|CRITICAL)$")
    file_path: Path

    class Config:
        frozen = True

class Settings(BaseModel):
    enumeration: EnumerationConfig
    verify: VerifyConfig
    automata: AutomataConfig
    api: APIConfig
    logging: LoggingConfig

    class Config:
        frozen = True

    def validate_all(self) -> None:
        if self.verify.max_carets > self.enumeration.max_carets:
            raise ValueError("TF_VERIFY_MAX_CARETS exceeds TF_MAX_CARETS")
        if self.verify.radius > self.enumeration.max_radius:
            raise ValueError("TF_VERIFY_RADIUS exceeds TF_MAX_RADIUS")
        if self.verify.quasigeodesic_radius > self.enumeration.max_radius:
            raise ValueError("TF_QG_RADIUS exceeds TF_MAX_RADIUS")

def load_settings() -> Settings:
    try:
        settings = Settings(
            enumeration=EnumerationConfig(
                max_carets=int(os.getenv("TF_MAX_CARETS", "12")),
                max_radius=int(os.getenv("TF_MAX_RADIUS", "10"))
            ),
            verify=VerifyConfig(
                seed=int(os.getenv("TF_SEED", "20240601")),
                max_carets=int(os.getenv("TF_VERIFY_MAX_CARETS", "7")),
                radius=int(os.getenv("TF_VERIFY_RADIUS", "5")),
                wrong_samples=int(os.getenv("TF_WRONG_SAMPLES", "1000")),
                associativity_samples=int(os.getenv("TF_ASSOC_SAMPLES", "200")),
                ogden_mutations=int(os.getenv("TF_OGDEN_MUTATIONS", "10")),
                quasigeodesic_radius=int(os.getenv("TF_QG_RADIUS", "8")),
                d_bound=float(os.getenv("TF_D_BOUND", "4.0"))
            ),
            automata=AutomataConfig(
                pad_symbol=os.getenv("TF_PAD", "#"),
                max_dot_states=int(os.getenv("TF_MAX_DOT_STATES", "5000"))
            ),
            api=APIConfig(
                host=os.getenv("API_HOST", "localhost"),
                port=int(os.getenv("API_PORT", "8000")),
                reload=os.getenv("API_RELOAD", "true").lower() == "true",
                workers=int(os.getenv("API_WORKERS", "1"))
            ),
            logging=LoggingConfig(
                level=os.getenv("LOG_LEVEL", "INFO"),
                file_path=LOG_DIR / "app.log"
            )
        )
        settings.validate_all()
        return settings
    except Exception as e:
        raise ValueError(f"Configuration error: {e}")

settings = load_settings()

# Export for backward compatibility
MAX_CARETS = settings.enumeration.max_carets
MAX_RADIUS = settings.enumeration.max_radius
DEFAULT_SEED = settings.verify.seed
PAD = settings.automata.pad_symbol
MAX_DOT_STATES = settings.automata.max_dot_states
API_HOST = settings.api.host
API_PORT = settings.api.port
LOG_LEVEL = settings.logging.level
LOG_FILE = settings.logging.file_path

VERIFY_CONFIG = {
    "seed": settings.verify.seed,
    "max_carets": settings.verify.max_carets,
    "radius": settings.verify.radius,
    "wrong_samples": settings.verify.wrong_samples,
    "associativity_samples": settings.verify.associativity_samples,
    "ogden_mutations": settings.verify.ogden_mutations,
    "quasigeodesic_radius": settings.verify.quasigeodesic_radius,
    "d_bound": settings.verify.d_bound
}

def validate_config() -> bool:
    settings.validate_all()
    return True

def get_settings() -> Settings:
    return settings
