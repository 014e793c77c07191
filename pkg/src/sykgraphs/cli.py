"""Command-line front end: counting, series, kernel catalogs, sampling,
cross-checks, asymptotics, and file export.

Every subcommand reads its options from flags, optionally backed by a JSON
config file (--config) holding the same keys; flags win over the file.
Output is deterministic for a fixed configuration and seed: exact values
print as integers or rationals, and the only float emitter is the
asymptotics subcommand (15 significant digits).

Exit codes: 0 success, 1 cross-check mismatch, 2 bad configuration or a
refused size limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .kernels import (
    catalog_to_json,
    enumerate_kernels,
    kernel_to_dot,
)
from .oracle import SizeLimitError, count_table
from .sampler import (
    build_tables,
    chunk_rng,
    CHUNK_TRIALS,
    default_parallelism,
    sample_graph,
    survey,
)
from .series import (
    asymptotic_estimate_decimal,
    asymptotic_ratio,
    general_graphs_series,
    graphs_series,
)


class ConfigError(ValueError):
    """Bad or missing configuration value; maps to exit code 2."""


# per-subcommand option schema: (name, type, default). Defaults apply only
# after the config file merge, so a file can supply any of them.
_SCHEMAS = {
    "count": (
        ("q", int, None),
        ("n", int, None),
        ("n_range", str, None),
        ("general", bool, False),
        ("format", str, "tsv"),
        ("out", str, None),
    ),
    "series": (
        ("q", int, None),
        ("delta", int, None),
        ("n", int, None),
        ("general", bool, False),
        ("out", str, None),
    ),
    "kernels": (
        ("q", int, None),
        ("delta", int, None),
        ("dominant", bool, False),
        ("format", str, "json"),
        ("out", str, None),
    ),
    "sample": (
        ("q", int, None),
        ("delta", int, None),
        ("n", int, None),
        ("trials", int, None),
        ("seed", int, 0),
        ("general", bool, False),
        ("shallow", bool, False),
        ("emit", str, None),
        ("format", str, "json"),
        ("parallelism", int, None),
        ("out", str, None),
    ),
    "check": (
        ("q", int, None),
        ("delta", int, None),
        ("n", int, None),
        ("n_range", str, None),
        ("general", bool, False),
        ("out", str, None),
    ),
    "asymptotics": (
        ("q", int, None),
        ("delta", int, None),
        ("n", int, None),
        ("out", str, None),
    ),
}
# export accepts every other subcommand's options (defaults are filled from
# the target schema once --what is known)
_export_rows = [("what", str, None)]
_export_seen = {"what"}
for _command in ("count", "series", "kernels", "sample", "check", "asymptotics"):
    for _name, _typ, _default in _SCHEMAS[_command]:
        if _name not in _export_seen:
            _export_seen.add(_name)
            _export_rows.append((_name, _typ, None))
_SCHEMAS["export"] = tuple(_export_rows)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sykgraphs",
        description="Exact combinatorics of edge-colored graphs: count, "
        "expand, catalog, sample, cross-check.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    help_text = {
        "count": "enumerate classes by order for one n or an n range",
        "series": "print exact counting-series coefficients",
        "kernels": "print the kernel catalog at a given excess",
        "sample": "sample uniform graphs and report structural certificates",
        "check": "compare enumeration counts against series coefficients",
        "asymptotics": "print the asymptotic estimate and exact/estimate ratio",
        "export": "run another subcommand and write its output to a file",
    }
    for command, schema in _SCHEMAS.items():
        p = sub.add_parser(command, help=help_text[command])
        p.add_argument("--config", help="JSON file with the same keys as the flags")
        seen = set()
        for name, typ, _default in schema:
            if name in seen:
                continue
            seen.add(name)
            flag = "--" + name.replace("_", "-")
            if typ is bool:
                p.add_argument(flag, action="store_const", const=True, default=None)
            else:
                p.add_argument(flag, type=typ, default=None)
    return parser


def _merge_config(args: argparse.Namespace) -> dict:
    """Start from the schema defaults, overlay the config file, then the
    flags that were actually given."""
    schema = _SCHEMAS[args.command]
    cfg = {name: default for name, _typ, default in schema}
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file {args.config}: {exc}")
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
        for key, value in data.items():
            key = key.replace("-", "_")
            if key not in cfg:
                raise ConfigError(
                    f"config key {key!r} is not an option of {args.command!r}"
                )
            cfg[key] = value
    for name, _typ, _default in schema:
        value = getattr(args, name, None)
        if value is not None:
            cfg[name] = value
    return cfg


def _require(cfg: dict, *names: str):
    values = []
    for name in names:
        if cfg.get(name) is None:
            raise ConfigError(f"missing required option --{name.replace('_', '-')}")
        values.append(cfg[name])
    return values if len(values) > 1 else values[0]


def _n_values(cfg: dict) -> list[int]:
    """A single --n or an inclusive --n-range A:B."""
    if cfg.get("n_range") is not None:
        text = str(cfg["n_range"])
        try:
            lo, hi = (int(part) for part in text.split(":"))
        except ValueError:
            raise ConfigError(f"--n-range must look like A:B, got {text!r}")
        if lo < 1 or hi < lo:
            raise ConfigError(f"bad --n-range bounds {text!r}")
        return list(range(lo, hi + 1))
    n = _require(cfg, "n")
    return [n]


def _family(cfg: dict) -> str:
    return "general" if cfg.get("general") else "bipartite"


def _emit(cfg: dict, text: str) -> None:
    out = cfg.get("out")
    if out is None:
        sys.stdout.write(text)
        if text and not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if text and not text.endswith("\n"):
                fh.write("\n")


def _cmd_count(cfg: dict) -> int:
    q = _require(cfg, "q")
    family = _family(cfg)
    fmt = cfg["format"]
    if fmt not in ("tsv", "json"):
        raise ConfigError(f"count supports tsv or json output, got {fmt!r}")
    tables = [count_table(q, n, family=family) for n in _n_values(cfg)]
    if fmt == "json":
        text = "\n".join(t.to_json() for t in tables)
    else:
        # one header, then every table's data rows
        blocks = [t.to_tsv().splitlines() for t in tables]
        lines = [blocks[0][0]]
        for block in blocks:
            lines.extend(block[1:])
        text = "\n".join(lines) + "\n"
    _emit(cfg, text)
    return 0


def _cmd_series(cfg: dict) -> int:
    q, delta, n = _require(cfg, "q", "delta", "n")
    build = general_graphs_series if cfg.get("general") else graphs_series
    series = build(q, delta, n)
    lines = [f"{k} {series.coefficient(k)}" for k in range(1, n + 1)]
    _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _cmd_kernels(cfg: dict) -> int:
    q, delta = _require(cfg, "q", "delta")
    fmt = cfg["format"]
    if fmt not in ("json", "dot"):
        raise ConfigError(f"kernels supports json or dot output, got {fmt!r}")
    catalog = enumerate_kernels(q, delta, dominant_only=bool(cfg.get("dominant")))
    if fmt == "json":
        text = catalog_to_json(catalog)
    else:
        text = "\n".join(kernel_to_dot(k, name=f"kernel_{i}") for i, k in enumerate(catalog))
    _emit(cfg, text)
    return 0


def _cmd_sample(cfg: dict) -> int:
    q, delta, n, trials = _require(cfg, "q", "delta", "n", "trials")
    seed = int(cfg["seed"])
    family = _family(cfg)
    workers = cfg.get("parallelism")
    if workers is None:
        workers = default_parallelism()
    report = survey(
        q,
        delta,
        n,
        trials,
        seed=seed,
        family=family,
        deep_certificates=not cfg.get("shallow"),
        workers=workers,
    )
    emit_dir = cfg.get("emit")
    if emit_dir is not None:
        fmt = cfg["format"]
        if fmt not in ("json", "dot"):
            raise ConfigError(f"sample --emit supports json or dot, got {fmt!r}")
        os.makedirs(emit_dir, exist_ok=True)
        tables = build_tables(q, delta, n)
        written = 0
        chunk_index = 0
        # replaying the per-chunk streams reproduces exactly the surveyed
        # samples, because certificates never consume randomness
        while written < trials:
            rng = chunk_rng(seed, chunk_index)
            chunk_index += 1
            batch = min(CHUNK_TRIALS, trials - written)
            for _ in range(batch):
                graph = sample_graph(tables, rng, family=family)
                payload = graph.to_json() if fmt == "json" else graph.to_dot()
                path = os.path.join(emit_dir, f"sample_{written:06d}.{fmt}")
                with open(path, "w", encoding="utf-8") as fh:
                    fh.write(payload)
                    if not payload.endswith("\n"):
                        fh.write("\n")
                written += 1
    _emit(cfg, report.to_json())
    return 0


def _cmd_check(cfg: dict) -> int:
    q, delta = _require(cfg, "q", "delta")
    family = _family(cfg)
    build = general_graphs_series if family == "general" else graphs_series
    ns = _n_values(cfg)
    series = build(q, delta, max(ns))
    lines = []
    mismatch = False
    for n in ns:
        table = count_table(q, n, family=family)
        row = table.rows.get(delta)
        enumerated = row.total if row is not None else 0
        expanded = series.coefficient(n)
        status = "OK" if enumerated == expanded else "MISMATCH"
        mismatch = mismatch or status == "MISMATCH"
        lines.append(f"{n} {delta} {enumerated} {expanded} {status}")
    _emit(cfg, "\n".join(lines) + "\n")
    return 1 if mismatch else 0


def _cmd_asymptotics(cfg: dict) -> int:
    q, delta, n = _require(cfg, "q", "delta", "n")
    estimate = asymptotic_estimate_decimal(q, delta, n)
    exact = graphs_series(q, delta, n).coefficient(n)
    ratio = asymptotic_ratio(q, delta, n, exact)
    lines = [
        f"estimate {estimate:.15g}",
        f"ratio {ratio:.15g}",
    ]
    _emit(cfg, "\n".join(lines) + "\n")
    return 0


_RUNNERS = {
    "count": _cmd_count,
    "series": _cmd_series,
    "kernels": _cmd_kernels,
    "sample": _cmd_sample,
    "check": _cmd_check,
    "asymptotics": _cmd_asymptotics,
}


def _cmd_export(cfg: dict) -> int:
    what = _require(cfg, "what")
    if what not in _RUNNERS:
        raise ConfigError(
            f"--what must be one of {sorted(_RUNNERS)}, got {what!r}"
        )
    _require(cfg, "out")
    # unset keys take the target subcommand's own defaults
    for name, _typ, default in _SCHEMAS[what]:
        if cfg.get(name) is None:
            cfg[name] = default
    return _RUNNERS[what](cfg)


_RUNNERS["export"] = _cmd_export


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on malformed flags; keep run() returning codes
        return int(exc.code or 0)
    try:
        cfg = _merge_config(args)
        return _RUNNERS[args.command](cfg)
    except SizeLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
