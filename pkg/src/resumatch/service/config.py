"""Runtime configuration: JSON file with environment overrides.

Precedence: built-in defaults < config file < environment variables.

File keys / environment variables:
  store_dir        RESUMATCH_STORE_DIR        record directory (unset = in-memory)
  embed_endpoint   RESUMATCH_EMBED_ENDPOINT   external embedding service URL
  embed_timeout    RESUMATCH_EMBED_TIMEOUT    request timeout in seconds
  default_weights  RESUMATCH_WEIGHTS          "skills,experience,education,location"
  lexicon_dir      RESUMATCH_LEXICON_DIR      directory with lexicon files
"""

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from ..match import WeightProfile


@dataclass
class AppConfig:
    store_dir: str | None = None
    embed_endpoint: str | None = None
    embed_timeout: float = 10.0
    default_weights: WeightProfile = field(default_factory=WeightProfile.default)
    lexicon_dir: str | None = None


def load_config(path: str | Path | None = None, env: dict | None = None) -> AppConfig:
    env = os.environ if env is None else env
    config = AppConfig()

    if path is not None:
        data = json.loads(Path(path).read_text("utf-8"))
        if "store_dir" in data:
            config.store_dir = data["store_dir"]
        if "embed_endpoint" in data:
            config.embed_endpoint = data["embed_endpoint"]
        if "embed_timeout" in data:
            config.embed_timeout = float(data["embed_timeout"])
        if "default_weights" in data:
            w = data["default_weights"]
            config.default_weights = (
                WeightProfile.parse(w) if isinstance(w, str) else WeightProfile.from_dict(w)
            )
        if "lexicon_dir" in data:
            config.lexicon_dir = data["lexicon_dir"]

    if env.get("RESUMATCH_STORE_DIR"):
        config.store_dir = env["RESUMATCH_STORE_DIR"]
    if env.get("RESUMATCH_EMBED_ENDPOINT"):
        config.embed_endpoint = env["RESUMATCH_EMBED_ENDPOINT"]
    if env.get("RESUMATCH_EMBED_TIMEOUT"):
        config.embed_timeout = float(env["RESUMATCH_EMBED_TIMEOUT"])
    if env.get("RESUMATCH_WEIGHTS"):
        config.default_weights = WeightProfile.parse(env["RESUMATCH_WEIGHTS"])
    if env.get("RESUMATCH_LEXICON_DIR"):
        config.lexicon_dir = env["RESUMATCH_LEXICON_DIR"]
    return config
