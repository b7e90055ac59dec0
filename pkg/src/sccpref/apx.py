"""Reading and writing the APX text format (``arg(x).`` / ``att(x,y).``)."""

from __future__ import annotations

import re
from typing import Iterable, TextIO

from .framework import ArgumentationFramework, Labelling


class ApxParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


_NAME = r"[^\s,()%.]+(?:\.[^\s,()%.]+)*"
_STATEMENT = re.compile(
    rf"\s*(arg|att)\s*\(\s*({_NAME})\s*(?:,\s*({_NAME})\s*)?\)\s*\.\s*"
)


def parse_apx(text: str) -> ArgumentationFramework:
    args: dict[str, None] = {}
    attacks: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0]
        pos = 0
        while pos < len(line):
            if not line[pos:].strip():
                break
            m = _STATEMENT.match(line, pos)
            if m is None:
                raise ApxParseError(lineno, f"malformed statement near {line[pos:].strip()!r}")
            kind, first, second = m.groups()
            if kind == "arg":
                if second is not None:
                    raise ApxParseError(lineno, "arg takes exactly one name")
                args[first] = None
            else:
                if second is None:
                    raise ApxParseError(lineno, "att takes two names")
                attacks.append((first, second, lineno))
            pos = m.end()
    for a, b, lineno in attacks:
        for endpoint in (a, b):
            if endpoint not in args:
                raise ApxParseError(lineno, f"attack uses undeclared argument {endpoint!r}")
    return ArgumentationFramework(args, [(a, b) for a, b, _ in attacks])


def format_apx(af: ArgumentationFramework) -> str:
    lines = [f"arg({a})." for a in af.names]
    lines += [f"att({a},{b})." for a, b in af.sorted_attacks()]
    return "\n".join(lines) + ("\n" if lines else "")


def format_extensions(result: Iterable[Labelling]) -> str:
    rows = sorted({"[" + ",".join(sorted(map(str, lab.in_))) + "]" for lab in result})
    return "\n".join([f"EXTENSIONS: {len(rows)}"] + rows) + "\n"


def print_extensions(result: Iterable[Labelling], sink: TextIO) -> None:
    sink.write(format_extensions(result))
