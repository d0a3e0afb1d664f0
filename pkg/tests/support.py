"""Shared helpers for the test suite: corpus access, fuzz input generation,
and small database seeding utilities."""

from __future__ import annotations

import io
import random
import zipfile
from pathlib import Path

from labelsmith import store
from labelsmith.model import Role

DATA_DIR = Path(__file__).parent / "data"
JAVA_CORPUS_DIR = DATA_DIR / "java_corpus"


def corpus_files() -> list[Path]:
    return sorted(JAVA_CORPUS_DIR.rglob("*.java"))


def corpus_texts() -> list[str]:
    return [p.read_text(encoding="utf-8") for p in corpus_files()]


# -- fuzz inputs for the lexer round-trip property ----------------------

_FRAGMENTS = [
    "public", "class", "interface", "void", "int", "for", "while", "_",
    "var", "x", "Foo", "fooBar", "$it", "über", "名前",
    "0", "1_000", "0xFF", "0b1010", "3.14f", "1e-9", ".5d", "0x1.8p3", "1.",
    '"str"', '"say \\"hi\\""', '"unterminated', '""', '"""', '"""\n block """',
    "'c'", "'\\n'", "'unterminated",
    "// comment", "/* block */", "/* unterminated", "/** doc */",
    "@Override", "@interface", "@", "...", "::", ">>>=", ">>>", "->", "&&",
    "{", "}", "(", ")", ";", ",", ".", "==", "=", "#", "`", "\\",
    " ", "\t", "\n", "\r\n", "\r", "\f", " ", "€", "🎉",
]


def fuzz_inputs(count: int, seed: int = 20260809) -> list[str]:
    """Deterministic adversarial inputs mixing three generation modes."""
    rng = random.Random(seed)
    corpus = corpus_texts()
    inputs: list[str] = [""]
    while len(inputs) < count:
        mode = rng.randrange(3)
        if mode == 0:
            # token soup
            n = rng.randrange(1, 40)
            inputs.append("".join(rng.choice(_FRAGMENTS) for _ in range(n)))
        elif mode == 1:
            # random unicode codepoints, surrogates excluded
            n = rng.randrange(0, 120)
            chars = []
            for _ in range(n):
                r = rng.random()
                if r < 0.5:
                    chars.append(chr(rng.randrange(32, 127)))
                elif r < 0.8:
                    chars.append(chr(rng.randrange(0xA0, 0x2100)))
                else:
                    chars.append(chr(rng.randrange(0x1F300, 0x1F700)))
            inputs.append("".join(chars))
        else:
            # mutated slice of real code
            text = rng.choice(corpus)
            lo = rng.randrange(0, max(1, len(text) - 1))
            hi = min(len(text), lo + rng.randrange(1, 400))
            piece = list(text[lo:hi])
            for _ in range(rng.randrange(0, 4)):
                if not piece:
                    break
                pos = rng.randrange(len(piece))
                piece[pos] = rng.choice('"\'\\/*{}<>@._')
            inputs.append("".join(piece))
    return inputs[:count]


# -- corpus archives -----------------------------------------------------

def build_zip(entries: dict[str, bytes]) -> bytes:
    buf = io.BytesIO()
    with zipfile.ZipFile(buf, "w", zipfile.ZIP_DEFLATED) as zf:
        for name, payload in entries.items():
            zf.writestr(name, payload)
    return buf.getvalue()


def corpus_zip(limit: int | None = None, root: str = "corpus") -> bytes:
    entries = {}
    for path in corpus_files()[:limit]:
        rel = path.relative_to(JAVA_CORPUS_DIR)
        entries[f"{root}/{rel.as_posix()}"] = path.read_bytes()
    return build_zip(entries)


# -- database seeding ----------------------------------------------------

def seed_user(session, email: str, role: Role = Role.CONTRIBUTOR, name: str | None = None):
    return store.create_user(session, email, name or email.split("@")[0], role)


def seed_corpus(session, project_name: str, files: dict[str, str], required: int = 3):
    project = store.create_project(session, project_name)
    created = {
        path: store.add_file(session, project.id, path, content, required)
        for path, content in files.items()
    }
    return project, created
