"""HTTP API over the pipeline, store and matcher.

Endpoints (JSON bodies, UTF-8):
  POST /resumes                     multipart file -> CandidateRecord
  GET  /resumes/{id}                -> CandidateRecord
  POST /jobs                        -> JobRecord
  GET  /jobs/{id}/ranking           ?k=&weights=s,e,d,l -> Ranking with breakdowns
  GET  /jobs/{jid}/candidates/{cid}/explanation -> Explanation
  GET  /health

Rankings are recomputed on demand; weight changes never see stale caches.
"""

import datetime
import tempfile
import uuid
from pathlib import Path

from fastapi import FastAPI, File, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .. import PIPELINE_VERSION
from ..embed import ExternalEmbeddingClient, FallbackProvider, HashedTrigramProvider
from ..errors import (
    EmptyDocument,
    InvalidJobDescription,
    InvalidWeights,
    MalformedDocument,
    NotFound,
    ResuMatchError,
)
from ..match import JobDescription, WeightProfile, build_ranking, explain, match, score_all
from .config import AppConfig
from .pipeline import ResumePipeline, ingest_resume
from .store import JobRecord, Store, open_store


def build_provider(config: AppConfig):
    builtin = HashedTrigramProvider()
    if config.embed_endpoint:
        external = ExternalEmbeddingClient(config.embed_endpoint, timeout=config.embed_timeout)
        return FallbackProvider(primary=external, fallback=builtin)
    return builtin


def create_app(
    config: AppConfig | None = None,
    store: Store | None = None,
    pipeline: ResumePipeline | None = None,
    provider=None,
) -> FastAPI:
    config = config or AppConfig()
    store = store if store is not None else open_store(config.store_dir)
    pipeline = pipeline or ResumePipeline.from_lexicon_dir(config.lexicon_dir)
    provider = provider if provider is not None else build_provider(config)

    app = FastAPI(title="resumatch", version=PIPELINE_VERSION)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ResuMatchError)
    async def on_error(_request, exc: ResuMatchError):
        if isinstance(exc, NotFound):
            status = 404
        elif isinstance(exc, (InvalidWeights, InvalidJobDescription, MalformedDocument, EmptyDocument)):
            status = 400
        else:
            status = 500
        return JSONResponse(status_code=status, content={"detail": str(exc)})

    def parse_weights(weights: str | None) -> WeightProfile:
        if weights is None:
            return config.default_weights
        return WeightProfile.parse(weights)

    @app.get("/health")
    def health():
        return {
            "status": "ok",
            "pipeline_version": PIPELINE_VERSION,
            "provider_id": provider.id,
            "candidates": len(store.list_candidates()),
            "jobs": len(store.list_jobs()),
        }

    @app.post("/resumes", status_code=201)
    async def post_resume(file: UploadFile = File(...)):
        data = await file.read()
        suffix = Path(file.filename or "resume").suffix or ".txt"
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / f"{Path(file.filename or 'resume').stem}{suffix}"
            target.write_bytes(data)
            record = ingest_resume(target, store, pipeline)
        return record.to_dict()

    @app.get("/resumes/{candidate_id}")
    def get_resume(candidate_id: str):
        return store.get_candidate(candidate_id).to_dict()

    @app.post("/jobs", status_code=201)
    def post_job(body: dict):
        job_id = str(body.get("id") or uuid.uuid4().hex)
        jd = JobDescription.from_dict({**body, "id": job_id})
        record = JobRecord(
            job_id=job_id,
            job=jd,
            created_at=datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
        )
        store.put_job(record)
        return record.to_dict()

    @app.get("/jobs/{job_id}")
    def get_job(job_id: str):
        return store.get_job(job_id).to_dict()

    @app.get("/jobs/{job_id}/ranking")
    def get_ranking(job_id: str, k: int | None = None, weights: str | None = None):
        job = store.get_job(job_id)
        weight_profile = parse_weights(weights)
        candidates = store.list_candidates()
        results = score_all(
            [(c.candidate_id, c.profile) for c in candidates],
            job.job,
            weight_profile,
            provider,
        )
        ranking = build_ranking(job_id, results, k=k)
        by_id = {r.candidate_id: r for r in results}
        return {
            "job_id": job_id,
            "weights": weight_profile.as_dict(),
            "k": k,
            "entries": [
                {
                    "candidate_id": cid,
                    "total": total,
                    "provider_id": by_id[cid].provider_id,
                    "breakdown": [c.to_dict() for c in by_id[cid].breakdown],
                    "skill_pairs": [p.to_dict() for p in by_id[cid].skill_pairs],
                }
                for cid, total in ranking.entries
            ],
        }

    @app.get("/jobs/{job_id}/candidates/{candidate_id}/explanation")
    def get_explanation(job_id: str, candidate_id: str, weights: str | None = None):
        job = store.get_job(job_id)
        candidate = store.get_candidate(candidate_id)
        weight_profile = parse_weights(weights)
        result = match(candidate.profile, job.job, weight_profile, provider, candidate_id=candidate_id)
        explanation = explain(result, job.job, candidate.profile, candidate_id=candidate_id)
        return explanation.to_dict()

    return app
