"""Candidate and job records with in-memory and directory-backed stores.

The directory store keeps one JSON document per record and writes
atomically (temp file in the same directory, then rename), so a crash
mid-write leaves the previous version readable. Listing order is always
id-sorted.
"""

import json
import os
import threading
import uuid
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

from ..errors import NotFound
from ..extract.profile import ResumeProfile
from ..match import JobDescription


@dataclass(frozen=True)
class CandidateRecord:
    candidate_id: str
    profile: ResumeProfile
    source_file: str
    ingested_at: str  # ISO 8601
    pipeline_version: str

    def to_dict(self) -> dict:
        return {
            "candidate_id": self.candidate_id,
            "profile": self.profile.to_dict(),
            "source_file": self.source_file,
            "ingested_at": self.ingested_at,
            "pipeline_version": self.pipeline_version,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CandidateRecord":
        return cls(
            candidate_id=data["candidate_id"],
            profile=ResumeProfile.from_dict(data["profile"]),
            source_file=data["source_file"],
            ingested_at=data["ingested_at"],
            pipeline_version=data["pipeline_version"],
        )


@dataclass(frozen=True)
class JobRecord:
    job_id: str
    job: JobDescription
    created_at: str  # ISO 8601

    def to_dict(self) -> dict:
        return {
            "job_id": self.job_id,
            "job": self.job.to_dict(),
            "created_at": self.created_at,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "JobRecord":
        return cls(
            job_id=data["job_id"],
            job=JobDescription.from_dict(data["job"]),
            created_at=data["created_at"],
        )


class Store(Protocol):
    def put_candidate(self, record: CandidateRecord) -> None: ...

    def get_candidate(self, candidate_id: str) -> CandidateRecord: ...

    def list_candidates(self) -> list[CandidateRecord]: ...

    def put_job(self, record: JobRecord) -> None: ...

    def get_job(self, job_id: str) -> JobRecord: ...

    def list_jobs(self) -> list[JobRecord]: ...


class InMemoryStore:
    def __init__(self):
        self._candidates: dict[str, CandidateRecord] = {}
        self._jobs: dict[str, JobRecord] = {}
        self._lock = threading.Lock()

    def put_candidate(self, record: CandidateRecord) -> None:
        with self._lock:
            self._candidates[record.candidate_id] = record

    def get_candidate(self, candidate_id: str) -> CandidateRecord:
        try:
            return self._candidates[candidate_id]
        except KeyError:
            raise NotFound(f"candidate {candidate_id}") from None

    def list_candidates(self) -> list[CandidateRecord]:
        return [self._candidates[k] for k in sorted(self._candidates)]

    def put_job(self, record: JobRecord) -> None:
        with self._lock:
            self._jobs[record.job_id] = record

    def get_job(self, job_id: str) -> JobRecord:
        try:
            return self._jobs[job_id]
        except KeyError:
            raise NotFound(f"job {job_id}") from None

    def list_jobs(self) -> list[JobRecord]:
        return [self._jobs[k] for k in sorted(self._jobs)]


class DirectoryStore:
    """One JSON file per record under {root}/candidates and {root}/jobs."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.candidates_dir = self.root / "candidates"
        self.jobs_dir = self.root / "jobs"
        self.candidates_dir.mkdir(parents=True, exist_ok=True)
        self.jobs_dir.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def _write_atomic(self, path: Path, payload: dict) -> None:
        # Unique temp name in the same directory keeps the rename atomic on
        # POSIX; a crash between write and rename leaves the old file intact.
        tmp = path.with_name(f".{path.name}.{uuid.uuid4().hex}.tmp")
        with self._lock:
            try:
                tmp.write_text(json.dumps(payload, ensure_ascii=False, indent=1), "utf-8")
                os.replace(tmp, path)
            finally:
                if tmp.exists():
                    tmp.unlink()

    @staticmethod
    def _read(path: Path, kind: str, record_id: str) -> dict:
        if not path.exists():
            raise NotFound(f"{kind} {record_id}")
        return json.loads(path.read_text("utf-8"))

    def put_candidate(self, record: CandidateRecord) -> None:
        self._write_atomic(self.candidates_dir / f"{record.candidate_id}.json", record.to_dict())

    def get_candidate(self, candidate_id: str) -> CandidateRecord:
        data = self._read(self.candidates_dir / f"{candidate_id}.json", "candidate", candidate_id)
        return CandidateRecord.from_dict(data)

    def list_candidates(self) -> list[CandidateRecord]:
        ids = sorted(p.stem for p in self.candidates_dir.glob("*.json"))
        return [self.get_candidate(i) for i in ids]

    def put_job(self, record: JobRecord) -> None:
        self._write_atomic(self.jobs_dir / f"{record.job_id}.json", record.to_dict())

    def get_job(self, job_id: str) -> JobRecord:
        data = self._read(self.jobs_dir / f"{job_id}.json", "job", job_id)
        return JobRecord.from_dict(data)

    def list_jobs(self) -> list[JobRecord]:
        ids = sorted(p.stem for p in self.jobs_dir.glob("*.json"))
        return [self.get_job(i) for i in ids]


def open_store(store_dir: str | Path | None) -> Store:
    return InMemoryStore() if store_dir is None else DirectoryStore(store_dir)
