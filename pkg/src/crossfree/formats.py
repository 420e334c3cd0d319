"""Reading and writing block lists with optional partition and coloring.

Plain format::

    n 21
    0 1 2
    ...
    X0: 0 1 2 3 4 5
    X1: ...
    X2: ...
    r: 3
    colors: 0 2 1 ...
    provenance: k=1 fallback=no

Blocks are written sorted; lines starting with ``#`` are ignored.  The
structured format is JSON with the same fields plus a format/version tag.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .design import BlockColoring, CrossFreePartition, TripleSystem

FORMAT_NAME = "crossfree.sts"
FORMAT_VERSION = 1


class FormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line else msg)
        self.line = line


@dataclass
class DesignFile:
    ts: TripleSystem
    partition: CrossFreePartition | None = None
    coloring: BlockColoring | None = None
    provenance: dict[str, str] = field(default_factory=dict)


def dumps_plain(d: DesignFile) -> str:
    lines = [f"n {d.ts.n}"]
    lines += [f"{a} {b} {c}" for a, b, c in d.ts.blocks]
    if d.partition is not None:
        for i, p in enumerate(d.partition.parts):
            lines.append(f"X{i}: " + " ".join(map(str, sorted(p))))
    if d.coloring is not None:
        lines.append(f"r: {d.coloring.r}")
        lines.append("colors: " + " ".join(map(str, d.coloring.colors)))
    if d.provenance:
        lines.append("provenance: " + " ".join(f"{k}={v}" for k, v in d.provenance.items()))
    return "\n".join(lines) + "\n"


def _ints(text: str, lineno: int) -> list[int]:
    try:
        return [int(t) for t in text.split()]
    except ValueError:
        raise FormatError(f"expected integers, got {text.strip()!r}", lineno) from None


def loads_plain(text: str) -> DesignFile:
    n = None
    blocks: list[list[int]] = []
    parts: dict[int, list[int]] = {}
    r = None
    colors = None
    prov: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            head = line.split()
            if len(head) != 2 or head[0] != "n":
                raise FormatError("first line must be 'n <points>'", lineno)
            n = _ints(head[1], lineno)[0]
            continue
        if ":" in line:
            key, _, rest = line.partition(":")
            key = key.strip()
            if key in ("X0", "X1", "X2"):
                parts[int(key[1])] = _ints(rest, lineno)
            elif key == "r":
                r = _ints(rest, lineno)[0]
            elif key == "colors":
                colors = _ints(rest, lineno)
            elif key == "provenance":
                for tok in rest.split():
                    k, _, v = tok.partition("=")
                    prov[k] = v
            else:
                raise FormatError(f"unknown field {key!r}", lineno)
            continue
        b = _ints(line, lineno)
        if len(b) != 3:
            raise FormatError(f"block needs 3 points, got {len(b)}", lineno)
        blocks.append(b)
    if n is None:
        raise FormatError("empty input")
    try:
        ts = TripleSystem(n, blocks)
        part = None
        if parts:
            if set(parts) != {0, 1, 2}:
                raise FormatError("partition needs X0, X1 and X2")
            part = CrossFreePartition([parts[0], parts[1], parts[2]])
            part.check_range(n)
        col = None
        if colors is not None or r is not None:
            if colors is None or r is None:
                raise FormatError("coloring needs both 'r:' and 'colors:'")
            if len(colors) != len(ts.blocks):
                raise FormatError(f"{len(colors)} colors for {len(ts.blocks)} blocks")
            col = BlockColoring(r, colors)
    except FormatError:
        raise
    except ValueError as e:
        raise FormatError(str(e)) from None
    return DesignFile(ts, part, col, prov)


def dumps_json(d: DesignFile) -> str:
    obj = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "n": d.ts.n,
        "blocks": [list(b) for b in d.ts.blocks],
        "partition": None if d.partition is None else [sorted(p) for p in d.partition.parts],
        "coloring": None if d.coloring is None else {"r": d.coloring.r,
                                                     "colors": list(d.coloring.colors)},
        "provenance": dict(d.provenance),
    }
    return json.dumps(obj, separators=(",", ":")) + "\n"


def loads_json(text: str) -> DesignFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"bad JSON: {e.msg}", e.lineno) from None
    if obj.get("format") != FORMAT_NAME:
        raise FormatError(f"not a {FORMAT_NAME} document")
    if obj.get("version") != FORMAT_VERSION:
        raise FormatError(f"unsupported version {obj.get('version')!r}")
    try:
        ts = TripleSystem(obj["n"], obj["blocks"])
        part = CrossFreePartition(obj["partition"]) if obj.get("partition") else None
        col = None
        if obj.get("coloring"):
            col = BlockColoring(obj["coloring"]["r"], obj["coloring"]["colors"])
            if len(col.colors) != len(ts.blocks):
                raise FormatError(f"{len(col.colors)} colors for {len(ts.blocks)} blocks")
    except KeyError as e:
        raise FormatError(f"missing field {e}") from None
    except FormatError:
        raise
    except ValueError as e:
        raise FormatError(str(e)) from None
    prov = {str(k): str(v) for k, v in (obj.get("provenance") or {}).items()}
    return DesignFile(ts, part, col, prov)


def loads(text: str) -> DesignFile:
    """Parse either format, sniffing JSON by its leading brace."""
    return loads_json(text) if text.lstrip().startswith("{") else loads_plain(text)


def dumps(d: DesignFile, fmt: str = "plain") -> str:
    if fmt == "plain":
        return dumps_plain(d)
    if fmt in ("json", "structured"):
        return dumps_json(d)
    raise ValueError(f"unknown format {fmt!r}")


def read(path: str | Path) -> DesignFile:
    return loads(Path(path).read_text())


def write(d: DesignFile, path: str | Path, fmt: str = "plain") -> None:
    Path(path).write_text(dumps(d, fmt))
