"""FastAPI application entry point."""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.config import settings
from app.logging_setup import configure_logging

# ---------------------------------------------------------------------------
# Structured logging configuration
# ---------------------------------------------------------------------------

configure_logging(settings.log_level)

# ---------------------------------------------------------------------------
# App setup
# ---------------------------------------------------------------------------

app = FastAPI(
    title="EcoGen API",
    description=(
        "Numerical analysis of a predator-prey model with two predator genotypes and a "
        "Holling type II response: equilibria, Routh-Hurwitz classification along the "
        "half-saturation constant, trajectory simulation, and transcritical / Hopf location."
    ),
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# ---------------------------------------------------------------------------
# Mount routers
# ---------------------------------------------------------------------------

from app.routers.analysis import router as analysis_router
from app.routers.simulate import router as simulate_router
from app.routers.bifurcation import router as bifurcation_router

app.include_router(analysis_router)
app.include_router(simulate_router)
app.include_router(bifurcation_router)


# ---------------------------------------------------------------------------
# Health check
# ---------------------------------------------------------------------------

@app.get("/health", tags=["system"])
async def health_check():
    """Health check endpoint."""
    return {
        "status": "healthy",
        "service": "EcoGen API",
        "version": "1.0.0",
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run("app.main:app", host=settings.api_host, port=settings.api_port)
