from dotenv import load_dotenv
from pydantic import BaseModel, Field
import os

load_dotenv()


class Settings(BaseModel):
    step_budget: int = Field(default=20_000_000, gt=0)
    log_level: str = "WARNING"
    oct_cap: int = Field(default=6, ge=0)
    alpha_cap_n: int = Field(default=40, ge=0)
    chromatic_cap_n: int = Field(default=60, ge=0)
    disjoint_cap_n: int = Field(default=14, ge=0)


def get_settings() -> Settings:
    """Read settings from the environment (and `.env`) on every call."""
    return Settings(
        step_budget=os.getenv("PROJWIDTH_STEP_BUDGET", "20000000"),
        log_level=os.getenv("PROJWIDTH_LOG_LEVEL", "WARNING"),
        oct_cap=os.getenv("PROJWIDTH_OCT_CAP", "6"),
        alpha_cap_n=os.getenv("PROJWIDTH_ALPHA_CAP_N", "40"),
        chromatic_cap_n=os.getenv("PROJWIDTH_CHROMATIC_CAP_N", "60"),
        disjoint_cap_n=os.getenv("PROJWIDTH_DISJOINT_CAP_N", "14"),
    )
