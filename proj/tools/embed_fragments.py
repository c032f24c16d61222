#!/usr/bin/env python3
"""Rewrites the embedded copies in include/datrtag/fragments.hpp from data/."""

import pathlib
import re

ROOT = pathlib.Path(__file__).resolve().parent.parent
HEADER = ROOT / "include" / "datrtag" / "fragments.hpp"
FILES = {
    "figure1": "figure1.datr",
    "extended": "extended.datr",
    "figure1_golden": "figure1.golden",
    "extended_golden": "extended.golden",
}


def main() -> None:
    text = HEADER.read_text()
    for name, file in FILES.items():
        body = (ROOT / "data" / file).read_text()
        if ")datr\"" in body:
            raise SystemExit(f"{file} contains the raw string delimiter")
        pattern = re.compile(
            r'(inline constexpr std::string_view ' + name + r' = R"datr\().*?(\)datr";)', re.S)
        text, n = pattern.subn(lambda m: m.group(1) + body + m.group(2), text)
        if n != 1:
            raise SystemExit(f"no slot for {name} in {HEADER}")
    HEADER.write_text(text)


if __name__ == "__main__":
    main()
