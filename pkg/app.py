#!/usr/bin/env python3
"""
ASGI entry point for the MQSym service.
Mounts the computation API under /api and serves a small status surface.
"""

import sys
from pathlib import Path

import uvicorn
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import RedirectResponse

sys.path.insert(0, str(Path(__file__).parent))

from backend.api.app import app as api_app  # noqa: E402
from backend.config import get_settings  # noqa: E402

app = FastAPI(
    title="MQSym",
    description="Multi-quasisymmetric functions, quasi-shuffle Hopf algebras and free Rota-Baxter algebras",
    version="1.0.0",
    docs_url=None,
    redoc_url=None,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.mount("/api", api_app)


@app.get("/")
async def read_root():
    return {"message": "MQSym API is running! See /docs."}


@app.get("/health")
async def health_check():
    """Health check endpoint"""
    return {"status": "healthy", "message": "MQSym is running!"}


@app.get("/docs")
async def api_docs():
    """Redirect to API documentation"""
    return RedirectResponse(url="/api/docs")


if __name__ == "__main__":
    settings = get_settings()
    print(f"Starting MQSym on port {settings.port}")
    uvicorn.run("app:app", host="0.0.0.0", port=settings.port, reload=False)
