"""Command-line front end.

Subcommands: ``shadow`` (compute and serialize a Garside shadow),
``automaton`` (export the voracious-language automaton), ``language``
(dump a slice of the voracious language), ``verify`` (run the ball
verification suite), ``project`` (inspect projections of one word).

All outputs are deterministic; the file-producing commands go through a
content-addressed cache keyed by the group matrix, the computation kind
and its parameters (directory from GARSIDE_CACHE_DIR, default
~/.cache/garside; ``--no-cache`` bypasses it).  Exit codes: 0 success,
1 I/O or parse errors, 2 shadow validation or group mismatch, 3 failed
verification checks.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from hashlib import sha256
from pathlib import Path

from .coxeter import (
    CoxeterSystem,
    GroupFileError,
    UnsupportedLabelError,
    parse_group_file,
)
from .shadows import (
    CutoffExceeded,
    ShadowFileError,
    garside_closure,
    shadow_from_gates,
    shadow_from_text,
    shadow_to_text,
    b_projection,
)
from .verify import full_suite
from .voracious import (
    build_voracious_fsa,
    enumerate_language,
    voracious_chain,
    voracious_projection,
)

FORMAT_VERSION = "1"

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_VERIFY_FAILED = 3


class CliError(Exception):
    def __init__(self, code: int, prefix: str, message: str):
        super().__init__(message)
        self.code = code
        self.prefix = prefix


def _cache_dir() -> Path:
    env = os.environ.get("GARSIDE_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "garside"


def _cache_key(*parts: str) -> str:
    return sha256("\x1f".join((FORMAT_VERSION,) + parts).encode("utf-8")).hexdigest()


def _cache_get(key: str) -> str | None:
    path = _cache_dir() / f"{key}.txt"
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return None


def _cache_put(key: str, payload: str) -> None:
    directory = _cache_dir()
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(payload)
        os.replace(tmp, directory / f"{key}.txt")
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_out(path: str, payload: str) -> None:
    target = Path(path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), suffix=".tmp")
    with os.fdopen(fd, "w", encoding="utf-8") as handle:
        handle.write(payload)
    os.replace(tmp, target)


def _load_system(group_path: str) -> CoxeterSystem:
    try:
        text = Path(group_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_IO, "io", f"cannot read group file: {exc}") from exc
    try:
        return CoxeterSystem(parse_group_file(text))
    except GroupFileError as exc:
        raise CliError(EXIT_IO, "group-parse", str(exc)) from exc
    except UnsupportedLabelError as exc:
        raise CliError(EXIT_IO, "unsupported-label", str(exc)) from exc


def _load_shadow(system: CoxeterSystem, shadow_path: str):
    try:
        text = Path(shadow_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_IO, "io", f"cannot read shadow file: {exc}") from exc
    try:
        return shadow_from_text(system, text), text
    except ShadowFileError as exc:
        raise CliError(EXIT_VALIDATION, "shadow-invalid", str(exc)) from exc


def _produce(args, key: str, compute) -> str:
    """Cache-aware computation of a deterministic text artifact."""
    if not args.no_cache:
        hit = _cache_get(key)
        if hit is not None:
            return hit
    payload = compute()
    if not args.no_cache:
        _cache_put(key, payload)
    return payload


# ---------------------------------------------------------------------------
# Subcommands


def cmd_shadow(args) -> int:
    system = _load_system(args.group)
    kind = args.kind
    if kind.startswith("mlow="):
        try:
            m = int(kind.split("=", 1)[1])
        except ValueError:
            raise CliError(EXIT_IO, "bad-kind", f"bad m in {kind!r}") from None
        kind_key, builder = (
            f"mlow={m}",
            lambda: shadow_from_gates(system, "m-low", m),
        )
    elif kind == "low":
        kind_key, builder = "low", lambda: shadow_from_gates(system, "low")
    elif kind == "gamma":
        kind_key, builder = "gamma", lambda: shadow_from_gates(system, "gamma")
    elif kind == "closure":
        seed_words = []
        seed_text = ""
        if args.seed:
            try:
                seed_text = Path(args.seed).read_text(encoding="utf-8")
            except OSError as exc:
                raise CliError(EXIT_IO, "io", f"cannot read seed file: {exc}") from exc
            for line in seed_text.splitlines():
                line = line.split("#", 1)[0].strip()
                if line:
                    seed_words.append(line)
        try:
            seed = [system.element(w) for w in seed_words]
        except ValueError as exc:
            raise CliError(EXIT_IO, "bad-word", str(exc)) from exc
        kind_key = f"closure:{sha256(seed_text.encode()).hexdigest()}:{args.cutoff}"
        builder = lambda: garside_closure(system, seed, args.cutoff)
    else:
        raise CliError(
            EXIT_IO, "bad-kind", f"kind must be low, mlow=M, gamma or closure, not {kind!r}"
        )

    def compute() -> str:
        try:
            return shadow_to_text(builder())
        except CutoffExceeded as exc:
            raise CliError(EXIT_VALIDATION, "cutoff-exceeded", str(exc)) from exc
        except ValueError as exc:
            raise CliError(EXIT_VALIDATION, "shadow-invalid", str(exc)) from exc

    key = _cache_key(system.matrix.content_hash(), "shadow", kind_key)
    _write_out(args.out, _produce(args, key, compute))
    return EXIT_OK


def cmd_automaton(args) -> int:
    system = _load_system(args.group)
    shadow, shadow_text = _load_shadow(system, args.shadow)
    if args.format not in ("dot", "text"):
        raise CliError(EXIT_IO, "bad-format", f"format must be dot or text, not {args.format!r}")
    key = _cache_key(
        system.matrix.content_hash(),
        "automaton",
        sha256(shadow_text.encode()).hexdigest(),
        args.format,
    )

    def compute() -> str:
        aut = build_voracious_fsa(shadow)
        return aut.to_dot() if args.format == "dot" else aut.to_text()

    _write_out(args.out, _produce(args, key, compute))
    return EXIT_OK


def cmd_language(args) -> int:
    system = _load_system(args.group)
    shadow, shadow_text = _load_shadow(system, args.shadow)
    key = _cache_key(
        system.matrix.content_hash(),
        "language",
        sha256(shadow_text.encode()).hexdigest(),
        str(args.max_len),
    )

    def compute() -> str:
        slice_ = enumerate_language(shadow, args.max_len)
        ordered = sorted(slice_.words, key=lambda w: (len(w), w))
        return "\n".join(system.render_word(w) for w in ordered) + "\n"

    _write_out(args.out, _produce(args, key, compute))
    return EXIT_OK


def cmd_verify(args) -> int:
    system = _load_system(args.group)
    shadow, shadow_text = _load_shadow(system, args.shadow)
    key = _cache_key(
        system.matrix.content_hash(),
        "verify",
        sha256(shadow_text.encode()).hexdigest(),
        str(args.radius),
    )

    def compute() -> str:
        return full_suite(shadow, args.radius).to_text()

    payload = _produce(args, key, compute)
    _write_out(args.out, payload)
    if payload.rstrip().endswith("result: pass"):
        return EXIT_OK
    return EXIT_VERIFY_FAILED


def cmd_project(args) -> int:
    system = _load_system(args.group)
    shadow, _ = _load_shadow(system, args.shadow)
    try:
        g = system.element(args.word)
    except ValueError as exc:
        raise CliError(EXIT_IO, "bad-word", str(exc)) from exc
    render = lambda x: system.render_word(x.word)
    pi = b_projection(shadow, g)
    nu = voracious_projection(shadow, g)
    chain = voracious_chain(shadow, g)
    print(f"word: {args.word}")
    print(f"element: {render(g)}")
    print(f"pi: {render(pi)}")
    print(f"nu: {render(nu)}")
    print(f"chain: {' '.join(render(x) for x in chain.steps)}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside",
        description="Garside shadows, voracious languages and their automata",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", required=True, help="group definition file")
    common.add_argument("--no-cache", action="store_true", help="bypass the result cache")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shadow", parents=[common], help="compute a Garside shadow")
    p.add_argument("--kind", required=True, help="low | mlow=M | gamma | closure")
    p.add_argument("--seed", help="seed word list for closure (one word per line)")
    p.add_argument("--cutoff", type=int, default=12, help="closure search-ball cutoff")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("automaton", parents=[common], help="export the language automaton")
    p.add_argument("--shadow", required=True, help="serialized shadow file")
    p.add_argument("--format", default="text", help="dot | text")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_automaton)

    p = sub.add_parser("language", parents=[common], help="dump a language slice")
    p.add_argument("--shadow", required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_language)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--shadow", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("project", parents=[common], help="project one word")
    p.add_argument("--shadow", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_project)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc.prefix}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
