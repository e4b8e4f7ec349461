"""Command line interface: parse, match, serve."""

import argparse
import json
import sys
from pathlib import Path

from .errors import ResuMatchError
from .match import JobDescription, WeightProfile, build_ranking, score_all
from .service.api import build_provider, create_app
from .service.config import load_config
from .service.pipeline import ResumePipeline

RESUME_SUFFIXES = (".pdf", ".txt")


def _pipeline(args) -> ResumePipeline:
    config = load_config(args.config) if getattr(args, "config", None) else load_config()
    return ResumePipeline.from_lexicon_dir(config.lexicon_dir)


def cmd_parse(args) -> int:
    pipeline = _pipeline(args)
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    status = 0
    for name in args.files:
        path = Path(name)
        try:
            profile = pipeline.parse_file(path)
        except (ResuMatchError, OSError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            status = 1
            continue
        payload = json.dumps(profile.to_dict(), ensure_ascii=False, indent=2)
        if out_dir:
            target = out_dir / f"{path.stem}.json"
            target.write_text(payload + "\n", "utf-8")
            print(f"{path} -> {target}")
        else:
            print(payload)
    return status


def cmd_match(args) -> int:
    config = load_config(args.config) if args.config else load_config()
    pipeline = ResumePipeline.from_lexicon_dir(config.lexicon_dir)
    provider = build_provider(config)
    weights = WeightProfile.parse(args.weights) if args.weights else config.default_weights

    job_data = json.loads(Path(args.job).read_text("utf-8"))
    job_data.setdefault("id", Path(args.job).stem)
    jd = JobDescription.from_dict(job_data)

    resume_dir = Path(args.resumes)
    paths = sorted(p for p in resume_dir.iterdir() if p.suffix.lower() in RESUME_SUFFIXES)
    if not paths:
        print(f"error: no resumes (*.pdf, *.txt) under {resume_dir}", file=sys.stderr)
        return 1

    profiles = []
    for path in paths:
        try:
            profiles.append((path.name, pipeline.parse_file(path)))
        except ResuMatchError as exc:
            print(f"warning: skipping {path}: {exc}", file=sys.stderr)

    results = score_all(profiles, jd, weights, provider)
    ranking = build_ranking(jd.id, results, k=args.top)
    by_id = {r.candidate_id: r for r in results}

    print(f"{'#':>3}  {'candidate':<32} {'total':>7}  {'skills':>7} {'exper':>7} {'educ':>7} {'locat':>7}")
    for position, (cid, total) in enumerate(ranking.entries, 1):
        raw = {c.criterion.value: c.raw for c in by_id[cid].breakdown}
        print(
            f"{position:>3}  {cid:<32} {total:7.4f}  "
            f"{raw['skills']:7.4f} {raw['experience']:7.4f} {raw['education']:7.4f} {raw['location']:7.4f}"
        )

    out_path = Path(args.out)
    payload = {
        "job_id": jd.id,
        "weights": weights.as_dict(),
        "entries": [
            {
                "candidate_id": cid,
                "total": total,
                "breakdown": [c.to_dict() for c in by_id[cid].breakdown],
                "skill_pairs": [p.to_dict() for p in by_id[cid].skill_pairs],
            }
            for cid, total in ranking.entries
        ],
    }
    out_path.write_text(json.dumps(payload, ensure_ascii=False, indent=2) + "\n", "utf-8")
    print(f"wrote {out_path}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    config = load_config(args.config) if args.config else load_config()
    if args.store:
        config.store_dir = args.store
    host, _, port = args.addr.partition(":")
    app = create_app(config)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8000))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="resumatch", description=__doc__)
    parser.add_argument("--config", help="path to a JSON config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p_parse = sub.add_parser("parse", help="parse resume files into profile JSON")
    p_parse.add_argument("files", nargs="+", help="resume files (.pdf or .txt)")
    p_parse.add_argument("--out", help="directory for per-file profile JSON")
    p_parse.set_defaults(func=cmd_parse)

    p_match = sub.add_parser("match", help="rank a directory of resumes against a job")
    p_match.add_argument("--job", required=True, help="job description JSON file")
    p_match.add_argument("--resumes", required=True, help="directory of resume files")
    p_match.add_argument("--weights", help="skills,experience,education,location")
    p_match.add_argument("--top", type=int, default=None, help="truncate to top k")
    p_match.add_argument("--out", default="ranking.json", help="ranking JSON output path")
    p_match.set_defaults(func=cmd_match)

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--addr", default="127.0.0.1:8000", help="host:port to bind")
    p_serve.add_argument("--store", help="directory for the record store")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResuMatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
