"""File-level merge driver.

Ties the engines together behind one entry point usable standalone or as a
git merge driver: read three versions, merge per the configured mode,
write the result, and exit 0 when clean, 1 when the output carries
conflict blocks, 2 on I/O or internal errors.
"""

from __future__ import annotations

import enum
import os
import sys
import tempfile
from dataclasses import dataclass, field, replace
from pathlib import Path

from .javaparse import ParseError, parse_units
from .separators import SeparatorSet
from .textmerge import DEFAULT_LABELS, count_conflicts, merge_text
from .treemerge import (
    PLAIN_TEXTUAL,
    SEPARATOR_ENHANCED,
    BodyMergePolicy,
    merge_trees,
)


class EngineMode(enum.Enum):
    UNSTRUCTURED = "unstructured"
    SEMISTRUCTURED = "semistructured"
    SESAME = "sesame"


@dataclass(frozen=True)
class DriverConfig:
    mode: EngineMode = EngineMode.SESAME
    separators: SeparatorSet = field(default_factory=SeparatorSet)
    labels: tuple[str, str, str] = DEFAULT_LABELS
    base_marker: bool = False
    fallback_on_parse_error: bool = True


@dataclass
class EngineResult:
    output: bytes
    conflicts: int
    fell_back: bool = False
    fallback_reason: str = ""


def run_engine(
    base: bytes, left: bytes, right: bytes, config: DriverConfig
) -> EngineResult:
    """Merge three file contents per the configured engine mode.

    In the declaration-aware modes a parse failure falls back to the
    unstructured engine when ``fallback_on_parse_error`` is set, otherwise
    the ParseError propagates.
    """
    if config.mode is EngineMode.UNSTRUCTURED:
        output, conflicts = merge_text(
            base, left, right, config.labels, config.base_marker
        )
        return EngineResult(output, conflicts)
    try:
        trees = [parse_units(text) for text in (base, left, right)]
    except ParseError as exc:
        if not config.fallback_on_parse_error:
            raise
        output, conflicts = merge_text(
            base, left, right, config.labels, config.base_marker
        )
        return EngineResult(output, conflicts, fell_back=True, fallback_reason=str(exc))
    if config.mode is EngineMode.SESAME:
        policy = BodyMergePolicy(SEPARATOR_ENHANCED, config.separators)
    else:
        policy = BodyMergePolicy(PLAIN_TEXTUAL, config.separators)
    output = merge_trees(
        trees[0], trees[1], trees[2], policy, config.labels, config.base_marker
    )
    return EngineResult(output, count_conflicts(output))


def merge_files(
    base_path: str | Path,
    left_path: str | Path,
    right_path: str | Path,
    out_path: str | Path,
    config: DriverConfig,
) -> int:
    """Merge three files into ``out_path``; returns the process exit code.

    0 means a clean merge, 1 at least one conflict block, 2 an I/O error,
    an unparseable input with fallback disabled, or an internal failure.
    Nothing is written on exit 2.
    """
    try:
        base, left, right = (
            Path(p).read_bytes() for p in (base_path, left_path, right_path)
        )
    except OSError as exc:
        print(f"sesame: cannot read input: {exc}", file=sys.stderr)
        return 2
    try:
        result = run_engine(base, left, right, config)
    except ParseError as exc:
        print(f"sesame: parse failed and fallback is disabled: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal error: report, write nothing
        print(f"sesame: internal error: {exc}", file=sys.stderr)
        return 2
    if result.fell_back:
        print(
            f"sesame: warning: {config.mode.value} parse failed"
            f" ({result.fallback_reason}); used unstructured merge",
            file=sys.stderr,
        )
    try:
        _write_atomic(Path(out_path), result.output)
    except OSError as exc:
        print(f"sesame: cannot write output: {exc}", file=sys.stderr)
        return 2
    return 1 if result.conflicts else 0


def git_driver_entry(
    ancestor: str | Path,
    current: str | Path,
    other: str | Path,
    config: DriverConfig,
) -> int:
    """Git merge-driver contract: merge %O/%A/%B, overwriting the %A file."""
    return merge_files(ancestor, current, other, current, config)


def _write_atomic(path: Path, data: bytes) -> None:
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sesame-")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def load_config_file(path: str | Path) -> dict[str, str]:
    """Read a plain key=value config file; '#' starts a comment line."""
    values: dict[str, str] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"malformed config line: {raw!r}")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def apply_config_values(config: DriverConfig, values: dict[str, str]) -> DriverConfig:
    """Overlay config-file values onto a DriverConfig."""
    for key, value in values.items():
        if key == "mode":
            config = replace(config, mode=EngineMode(value))
        elif key == "separators":
            config = replace(config, separators=SeparatorSet.from_spec(value))
        elif key == "labels":
            parts = tuple(part.strip() for part in value.split(","))
            if len(parts) != 3:
                raise ValueError("labels must be three comma-separated names")
            config = replace(config, labels=parts)
        elif key == "diff3-style":
            config = replace(config, base_marker=value.lower() in ("1", "true", "yes"))
        elif key == "fallback":
            config = replace(
                config, fallback_on_parse_error=value.lower() in ("1", "true", "yes")
            )
        else:
            raise ValueError(f"unknown config key: {key!r}")
    return config
