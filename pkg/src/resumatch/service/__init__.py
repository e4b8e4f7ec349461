"""Persistence, HTTP API and batch pipeline assembly."""

from .config import AppConfig, load_config
from .pipeline import ResumePipeline, ingest_resume
from .store import CandidateRecord, DirectoryStore, InMemoryStore, JobRecord, Store, open_store

__all__ = [
    "AppConfig",
    "load_config",
    "ResumePipeline",
    "ingest_resume",
    "CandidateRecord",
    "DirectoryStore",
    "InMemoryStore",
    "JobRecord",
    "Store",
    "open_store",
]
