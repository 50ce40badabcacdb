"""Command-line entry points."""

from __future__ import annotations

import dataclasses
import json
import sys
from pathlib import Path

import click

from .evalbench import evaluate, load_sentiment140, report_table, write_benchmark
from .gateway import Settings, make_token_record, record_to_json
from .gateway.config import UPSTREAM_TOKEN_ENV


@click.group()
def main():
    """Sentiment analytics service for social posts."""


@main.command()
@click.option("--port", default=8000, show_default=True)
@click.option("--bind", default="127.0.0.1", show_default=True)
@click.option("--offline-corpus", type=click.Path(exists=True, path_type=Path),
              help="JSONL corpus replayed instead of a live upstream.")
@click.option("--upstream-url", help="Base URL of a Twitter-compatible search API.")
@click.option("--upstream-token-env", default=UPSTREAM_TOKEN_ENV, show_default=True,
              help="Environment variable holding the upstream bearer secret.")
@click.option("--lexicon-dir", type=click.Path(exists=True, path_type=Path),
              help="Directory with valence.tsv/polarity.tsv/boosters.tsv/negators.txt.")
@click.option("--cache-ttl", default=60.0, show_default=True)
@click.option("--cache-capacity", default=1024, show_default=True)
@click.option("--max-results", default=1000, show_default=True,
              help="Hard limit on posts per search.")
@click.option("--tokens-file", type=click.Path(exists=True, path_type=Path))
@click.option("--audit-log", type=click.Path(path_type=Path))
@click.option("--allow-cidr", multiple=True,
              help="Allowed caller networks; repeatable. Empty allows all.")
@click.option("--stopwords", type=click.Path(exists=True, path_type=Path))
def serve(port, bind, offline_corpus, upstream_url, upstream_token_env, lexicon_dir,
          cache_ttl, cache_capacity, max_results, tokens_file, audit_log,
          allow_cidr, stopwords):
    """Run the HTTP gateway."""
    import uvicorn

    from .gateway import create_app

    if offline_corpus is None and not upstream_url:
        raise click.UsageError("pass --offline-corpus or --upstream-url")
    settings = Settings(
        bind=bind, port=port, offline_corpus=offline_corpus,
        upstream_url=upstream_url, upstream_token_env=upstream_token_env,
        lexicon_dir=lexicon_dir, cache_ttl=cache_ttl, cache_capacity=cache_capacity,
        max_results=max_results, tokens_file=tokens_file, audit_log=audit_log,
        allow_cidrs=tuple(allow_cidr), stopwords_file=stopwords,
    )
    uvicorn.run(create_app(settings), host=bind, port=port, log_level="info")


@main.command(name="eval")
@click.option("--data", required=True, type=click.Path(exists=True, path_type=Path),
              help="Sentiment140-format CSV.")
@click.option("--engine", "engines", multiple=True,
              help="Engine id; repeatable. Defaults to all registered engines.")
@click.option("--sample", type=int, default=None,
              help="Stratified sample size (half per class).")
@click.option("--seed", default=42, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["table", "json"]),
              default="table", show_default=True)
def eval_command(data, engines, sample, seed, fmt):
    """Evaluate engine accuracy on labeled data."""
    from .engines import default_registry

    registry = default_registry()
    ids = list(engines) or registry.algorithms()
    loaded = load_sentiment140(data, sample_n=sample, seed=seed)
    if loaded.skipped:
        click.echo(f"skipped {loaded.skipped} rows with non-binary polarity", err=True)
    reports = [evaluate(algorithm, loaded, registry=registry) for algorithm in ids]
    if fmt == "json":
        click.echo(json.dumps([dataclasses.asdict(r) for r in reports], indent=2))
    else:
        click.echo(report_table(reports, dataset=Path(data).name))


@main.command(name="synth-bench")
@click.option("--out", required=True, type=click.Path(path_type=Path))
@click.option("--rows", default=6000, show_default=True)
@click.option("--seed", default=7, show_default=True)
def synth_bench(out, rows, seed):
    """Write a synthetic Sentiment140-format benchmark CSV."""
    write_benchmark(out, rows=rows, seed=seed)
    click.echo(f"wrote {rows} rows to {out}")


@main.command(name="synth-corpus")
@click.option("--out", required=True, type=click.Path(path_type=Path))
@click.option("--posts", default=300, show_default=True)
@click.option("--seed", default=11, show_default=True)
def synth_corpus(out, posts, seed):
    """Write a demo JSONL corpus for offline serving."""
    from .demo import write_demo_corpus

    write_demo_corpus(out, posts=posts, seed=seed)
    click.echo(f"wrote {posts} posts to {out}")


@main.command(name="make-token")
@click.option("--id", "token_id", required=True)
@click.option("--scopes", default="search", show_default=True,
              help="Comma-separated: search,export,admin.")
@click.option("--tokens-file", type=click.Path(path_type=Path),
              help="Create or update this token file in place.")
def make_token(token_id, scopes, tokens_file):
    """Mint an API token; the secret is printed once and never stored."""
    record, secret = make_token_record(token_id, {s.strip() for s in scopes.split(",") if s})
    entry = record_to_json(record)
    if tokens_file:
        existing = {"tokens": []}
        if tokens_file.exists():
            existing = json.loads(tokens_file.read_text("utf-8"))
        existing["tokens"] = [t for t in existing.get("tokens", [])
                              if t.get("token_id") != token_id]
        existing["tokens"].append(entry)
        tokens_file.write_text(json.dumps(existing, indent=2), encoding="utf-8")
        click.echo(f"updated {tokens_file}", err=True)
    else:
        click.echo(json.dumps({"tokens": [entry]}, indent=2), err=True)
    click.echo(f"bearer credential: {record.token_id}.{secret}")


if __name__ == "__main__":
    sys.exit(main())
