import os
import struct
import hashlib

import numpy as np

from typing import Iterable, Iterator, List

from .types import TermTable, EmbeddingMatrix, ScoredCandidate, VerifiedEdge

EMBEDDING_MAGIC = b"LXEMB1"
EMBEDDING_HEADER = struct.Struct("<6sII")

CANDIDATE_HEADER = ("a_id", "b_id", "cosine")
EDGE_HEADER = ("a_id", "b_id", "confidence")


def read_lines(path) -> List[str]:
    """
    Split a UTF-8 file on LF. A single trailing LF terminates the last line;
    any other empty line is reported with its 1-based line number.
    """
    with open(path, "r", encoding="utf-8", newline="") as file:
        content = file.read()
    if not content:
        return []
    lines = content.split("\n")
    if lines[-1] == "":
        lines.pop()
    for lineno, line in enumerate(lines, start=1):
        if line == "":
            raise ValueError(f"{path}: empty line {lineno}")
    return lines


def load_term_table(path) -> TermTable:
    lines = read_lines(path)
    first_seen = {}
    for lineno, term in enumerate(lines, start=1):
        if term in first_seen:
            raise ValueError(f"{path}: duplicate term {term!r} on lines {first_seen[term]} and {lineno}")
        first_seen[term] = lineno
    return TermTable(tuple(lines))


def save_term_table(table: TermTable, path):
    with open(path, "w", encoding="utf-8", newline="") as file:
        for term in table:
            file.write(term + "\n")


def load_embeddings(path, expected_count: int = None) -> EmbeddingMatrix:
    with open(path, "rb") as file:
        header = file.read(EMBEDDING_HEADER.size)
        if len(header) < EMBEDDING_HEADER.size:
            raise ValueError(f"{path}: truncated embeddings header")
        magic, count, dim = EMBEDDING_HEADER.unpack(header)
        if magic != EMBEDDING_MAGIC:
            raise ValueError(f"{path}: bad magic {magic!r}, expected {EMBEDDING_MAGIC!r}")
        if expected_count is not None and count != expected_count:
            raise ValueError(f"{path}: header count {count} does not match expected count {expected_count}")
        payload = file.read()
    expected_bytes = count * dim * 4
    if len(payload) != expected_bytes:
        raise ValueError(f"{path}: payload has {len(payload)} bytes, header count={count} dim={dim} needs {expected_bytes}")
    data = np.frombuffer(payload, dtype="<f4").reshape(count, dim)
    return EmbeddingMatrix(data)


def save_embeddings(data, path):
    data = np.ascontiguousarray(data, dtype="<f4")
    assert data.ndim == 2, "embeddings must be a 2-dimensional array"
    with open(path, "wb") as file:
        file.write(EMBEDDING_HEADER.pack(EMBEDDING_MAGIC, data.shape[0], data.shape[1]))
        file.write(data.tobytes())


def load_dictionary(path) -> frozenset:
    """Parent dictionary: terms-file format, repeated entries collapse."""
    return frozenset(read_lines(path))


def read_tsv(path, header) -> Iterator[List[str]]:
    with open(path, "r", encoding="utf-8") as file:
        first = file.readline().rstrip("\n")
        if tuple(first.split("\t")) != header:
            raise ValueError(f"{path}: expected header {' '.join(header)!r}, got {first!r}")
        for lineno, line in enumerate(file, start=2):
            fields = line.rstrip("\n").split("\t")
            if len(fields) != len(header):
                raise ValueError(f"{path}: line {lineno} has {len(fields)} columns, expected {len(header)}")
            yield fields


def write_candidates(candidates: Iterable[ScoredCandidate], path) -> int:
    count = 0
    with open(path, "w", encoding="utf-8") as file:
        file.write("\t".join(CANDIDATE_HEADER) + "\n")
        for candidate in candidates:
            file.write(f"{candidate.a}\t{candidate.b}\t{float(candidate.cosine)!r}\n")
            count += 1
    return count


def read_candidates(path) -> Iterator[ScoredCandidate]:
    for a, b, cosine in read_tsv(path, CANDIDATE_HEADER):
        yield ScoredCandidate(int(a), int(b), float(cosine))


def write_edges(edges: Iterable[VerifiedEdge], path) -> int:
    count = 0
    with open(path, "w", encoding="utf-8") as file:
        file.write("\t".join(EDGE_HEADER) + "\n")
        for edge in edges:
            file.write(f"{edge.a}\t{edge.b}\t{float(edge.confidence)!r}\n")
            count += 1
    return count


def read_edges(path) -> Iterator[VerifiedEdge]:
    for a, b, confidence in read_tsv(path, EDGE_HEADER):
        yield VerifiedEdge(int(a), int(b), float(confidence))


def file_digest(path) -> str:
    sha = hashlib.sha256()
    with open(path, "rb") as file:
        for block in iter(lambda: file.read(1 << 20), b""):
            sha.update(block)
    return sha.hexdigest()


def ensure_dir(path):
    os.makedirs(path, exist_ok=True)
    return path
