#!/usr/bin/env python3
"""Benchmark the compiled tokenizer backend against the pure-Python twin.

Usage: python benchmarks/bench_tokenize.py [repeats]
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

from labelsmith.highlight import _scanner_py

try:
    from labelsmith.highlight import _scanner as _scanner_c
except ImportError:
    _scanner_c = None

CORPUS = Path(__file__).parent.parent / "tests" / "data" / "java_corpus"


def load_corpus() -> str:
    texts = [p.read_text(encoding="utf-8") for p in sorted(CORPUS.rglob("*.java"))]
    return "\n".join(texts)


def bench(scan, source: str, repeats: int) -> tuple[float, int]:
    tokens = 0
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        result = scan(source)
        elapsed = time.perf_counter() - start
        best = min(best, elapsed)
        tokens = len(result)
    return best, tokens


def main() -> int:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    source = load_corpus() * 8
    print(f"input: {len(source):,} chars, best of {repeats} runs")

    py_time, py_tokens = bench(_scanner_py.scan, source, repeats)
    py_rate = py_tokens / py_time
    print(f"pure python : {py_time * 1000:8.1f} ms  {py_rate / 1e6:6.2f} Mtok/s")

    if _scanner_c is None:
        print("compiled    : not built (pip install -e . to compile)")
        return 0

    c_time, c_tokens = bench(_scanner_c.scan, source, repeats)
    assert c_tokens == py_tokens, "backends disagree on token count"
    c_rate = c_tokens / c_time
    print(f"compiled    : {c_time * 1000:8.1f} ms  {c_rate / 1e6:6.2f} Mtok/s")
    print(f"speedup     : {py_time / c_time:8.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
