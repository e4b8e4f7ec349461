"""Text-to-vector encoding behind a provider contract.

The built-in provider is a deterministic hashed character-trigram
encoder: fold the text, pad with one boundary marker on each side, hash
every trigram with 64-bit FNV-1a into 256 buckets, weight buckets by
log(1 + count), and L2-normalize. It is bit-stable across runs and
platforms, which keeps the whole matching pipeline testable offline.

An HTTP client fills the external-provider slot for a real sentence
embedding service; a fallback wrapper degrades to the built-in provider
when the service is unavailable.
"""

import math
from dataclasses import dataclass
from typing import Protocol, Sequence

import numpy as np
import requests

from .errors import DimensionMismatch, EmptyText, MalformedResponse, ProviderUnavailable
from .extract.fuzzy import fold

NORM_TOLERANCE = 1e-6

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF

_BOUNDARY = "\x00"


@dataclass(frozen=True, eq=False)
class EmbeddingVector:
    values: np.ndarray
    provider_id: str

    @property
    def dimension(self) -> int:
        return int(self.values.shape[0])


class EmbeddingProvider(Protocol):
    id: str
    dimension: int

    def embed(self, text: str) -> EmbeddingVector: ...

    def embed_many(self, texts: Sequence[str]) -> list[EmbeddingVector]: ...


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME) & _MASK64
    return h


class HashedTrigramProvider:
    """Deterministic offline encoder; see module docstring for the recipe."""

    id = "trigram-fnv1a-256"
    dimension = 256

    def embed(self, text: str) -> EmbeddingVector:
        if not text.strip():
            raise EmptyText("cannot embed empty text")
        folded = fold(text)
        padded = _BOUNDARY + folded + _BOUNDARY
        counts: dict[int, int] = {}
        for i in range(len(padded) - 2):
            bucket = fnv1a64(padded[i : i + 3].encode("utf-8")) % self.dimension
            counts[bucket] = counts.get(bucket, 0) + 1
        values = np.zeros(self.dimension, dtype=np.float64)
        for bucket, count in counts.items():
            values[bucket] = math.log1p(count)
        values /= math.sqrt(float(np.dot(values, values)))
        return EmbeddingVector(values=values, provider_id=self.id)

    def embed_many(self, texts: Sequence[str]) -> list[EmbeddingVector]:
        return [self.embed(t) for t in texts]


def embed(text: str, provider: EmbeddingProvider) -> EmbeddingVector:
    return provider.embed(text)


def cosine(a: EmbeddingVector, b: EmbeddingVector) -> float:
    """Dot product of unit vectors, clamped to [-1, 1] against rounding."""
    if a.provider_id != b.provider_id or a.dimension != b.dimension:
        raise DimensionMismatch(
            f"cannot compare vectors from {a.provider_id}/{a.dimension} "
            f"and {b.provider_id}/{b.dimension}"
        )
    return float(min(1.0, max(-1.0, np.dot(a.values, b.values))))


MAX_BATCH = 128


class ExternalEmbeddingClient:
    """Client for an HTTP embedding service.

    Wire format: POST {endpoint} with JSON {"texts": [...]}, response JSON
    {"vectors": [[...], ...], "dim": int}. Vectors are normalized on
    receipt if the service did not.
    """

    id = "external"

    def __init__(self, endpoint: str, timeout: float = 10.0, provider_id: str = "external"):
        self.endpoint = endpoint
        self.timeout = timeout
        self.id = provider_id
        self.dimension = 0  # pinned on first successful response

    def embed_many(self, texts: Sequence[str]) -> list[EmbeddingVector]:
        if len(texts) > MAX_BATCH:
            raise ValueError(f"batch size {len(texts)} exceeds {MAX_BATCH}")
        for t in texts:
            if not t.strip():
                raise EmptyText("cannot embed empty text")
        try:
            response = requests.post(
                self.endpoint, json={"texts": list(texts)}, timeout=self.timeout
            )
        except requests.RequestException as exc:
            raise ProviderUnavailable(f"embedding service unreachable: {exc}") from exc
        if response.status_code != 200:
            raise ProviderUnavailable(f"embedding service returned {response.status_code}")
        try:
            payload = response.json()
            vectors = payload["vectors"]
            dim = int(payload["dim"])
        except (ValueError, KeyError, TypeError) as exc:
            raise MalformedResponse(f"invalid embedding response: {exc}") from exc
        if not isinstance(vectors, list) or len(vectors) != len(texts):
            raise MalformedResponse(
                f"expected {len(texts)} vectors, got {len(vectors) if isinstance(vectors, list) else 'non-list'}"
            )
        if self.dimension and dim != self.dimension:
            raise MalformedResponse(f"dimension changed from {self.dimension} to {dim}")
        out = []
        for vec in vectors:
            if not isinstance(vec, list) or len(vec) != dim:
                raise MalformedResponse("vector length does not match declared dim")
            values = np.asarray(vec, dtype=np.float64)
            norm = float(np.linalg.norm(values))
            if not math.isfinite(norm) or norm == 0.0:
                raise MalformedResponse("vector is zero or non-finite")
            if abs(norm - 1.0) > NORM_TOLERANCE:
                values = values / norm
            out.append(EmbeddingVector(values=values, provider_id=self.id))
        if not self.dimension:
            self.dimension = dim
        return out

    def embed(self, text: str) -> EmbeddingVector:
        return self.embed_many([text])[0]


def external_embed(texts: Sequence[str], client: ExternalEmbeddingClient) -> list[EmbeddingVector]:
    """One vector per input, order preserved."""
    return client.embed_many(texts)


class FallbackProvider:
    """Tries the primary provider, degrading to the fallback as a whole batch.

    Falling back per batch (never per text) keeps every vector in one
    match computation on the same provider, so cosine comparisons stay
    valid. The producing provider's id is carried on each vector, which
    is how degraded mode shows up in match results.
    """

    def __init__(self, primary: EmbeddingProvider, fallback: EmbeddingProvider):
        self.primary = primary
        self.fallback = fallback

    @property
    def id(self) -> str:
        return self.primary.id

    @property
    def dimension(self) -> int:
        return self.primary.dimension

    def embed_many(self, texts: Sequence[str]) -> list[EmbeddingVector]:
        try:
            return self.primary.embed_many(texts)
        except ProviderUnavailable:
            return self.fallback.embed_many(texts)

    def embed(self, text: str) -> EmbeddingVector:
        return self.embed_many([text])[0]
