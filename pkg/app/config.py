"""Application configuration loaded from environment variables."""

from pydantic_settings import BaseSettings
from pydantic import Field


class Settings(BaseSettings):
    """Central configuration for the EcoGen analysis toolkit."""

    # Tolerances
    zero_tol: float = Field(default=1e-12, description="Absolute tolerance for comparisons against zero")
    boundary_tol: float = Field(
        default=1e-12, description="|W| below which coexistence is declared on the transcritical boundary"
    )

    # Integrator
    t_end: float = Field(default=2000.0, description="Default integration horizon (scaled time)")
    rel_tol: float = Field(default=1e-8, description="Default relative tolerance of the RK45 pair")
    abs_tol: float = Field(default=1e-10, description="Default absolute tolerance of the RK45 pair")
    output_intervals: int = Field(default=4096, description="Dense output intervals over [0, t_end]")
    max_steps: int = Field(default=2_000_000, description="Hard cap on attempted integrator steps")

    # Asymptotic classification
    transient_fraction: float = Field(default=0.5, description="Leading fraction of a trajectory discarded")
    steady_threshold: float = Field(default=1e-8, description="Terminal |rhs|_inf below which a state is steady")
    amplitude_threshold: float = Field(default=1e-3, description="Minimum X peak-to-peak for a limit cycle")
    period_tolerance: float = Field(default=0.05, description="Relative spread allowed among inter-peak intervals")
    period_intervals: int = Field(default=5, description="Number of trailing inter-peak intervals compared")
    min_window_points: int = Field(default=30, description="Minimum samples after the transient")

    # Bifurcation
    hopf_xtol: float = Field(default=1e-8, description="Bisection tolerance on the parameter")
    sweep_workers: int = Field(default=1, description="Thread workers used to evaluate sweep points")

    # Logging
    log_level: str = Field(default="INFO", description="Log level for API and CLI")

    # API
    api_host: str = Field(default="0.0.0.0", description="API host")
    api_port: int = Field(default=8000, description="API port")

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "env_prefix": "ECOGEN_",
        "case_sensitive": False,
    }


# Singleton instance
settings = Settings()
