"""Line-oriented coloring files.

Layout::

    hyperramsey-coloring 1
    mode rank            # explicit | rank | stepup | stepup-strong
    k 3
    N 6
    seed 1               # optional
    vertices int         # explicit mode only: int (1..N) or bits ({0,1}^N)
    data
    1 2 3                # rank: s_1 .. s_{k-1} value in 1..k
    ...

Explicit bodies list edges ``v_1 .. v_k R|B``; stepping-up bodies list the
base coloring ``s_1 .. s_{k-1} R|B``.  Every body must be total and free of
duplicates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import TextIO

from .colorings import (BaseTwoColoring, KaryBaseColoring, RankColoring, SteppingUpColoring,
                        EXPLICIT_STEPUP_MAX_N)
from .core import Color, ColoringOracle, TableColoring, colex_subsets, enumerate_k_subsets
from .delta import BitVertex, universe
from .errors import CapacityError, DomainError

MAGIC = "hyperramsey-coloring"
VERSION = 1
MODES = ("explicit", "rank", "stepup", "stepup-strong")


class FormatError(DomainError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class ColoringFile:
    mode: str
    k: int
    N: int
    seed: int | None = None
    vertices: str = "int"
    entries: dict[tuple, int | Color] = field(default_factory=dict)

    def oracle(self, t: int | None = None, allow_unverified: bool = False) -> ColoringOracle:
        if self.mode == "rank":
            return RankColoring(self.kary())
        if self.mode in ("stepup", "stepup-strong"):
            return SteppingUpColoring(self.base(), strong=self.mode == "stepup-strong", t=t,
                                      allow_unverified=allow_unverified)
        domain = universe(self.N) if self.vertices == "bits" else range(1, self.N + 1)
        return TableColoring(self.k, domain, self.entries)

    def kary(self) -> KaryBaseColoring:
        return KaryBaseColoring(self.N, self.k, [self.entries[S] for S in enumerate_k_subsets(self.N, self.k - 1)])

    def base(self) -> BaseTwoColoring:
        return BaseTwoColoring(self.N, self.k, [int(self.entries[S]) for S in enumerate_k_subsets(self.N, self.k - 1)])


def from_kary(phi: KaryBaseColoring, seed: int | None = None) -> ColoringFile:
    entries = {S: phi.assign(S) for S in enumerate_k_subsets(phi.N, phi.k - 1)}
    return ColoringFile("rank", phi.k, phi.N, seed, entries=entries)


def from_base(phi: BaseTwoColoring, strong: bool = False, seed: int | None = None) -> ColoringFile:
    entries = {S: phi.assign(S) for S in enumerate_k_subsets(phi.N, phi.k)}
    return ColoringFile("stepup-strong" if strong else "stepup", phi.target_k, phi.N, seed, entries=entries)


def explicit_from_oracle(oracle: ColoringOracle, seed: int | None = None) -> ColoringFile:
    """Tabulate every edge of an oracle (stepping-up only for N <= 6)."""
    dom = oracle.domain
    if isinstance(dom[0], BitVertex):
        n = len(dom[0])
        if n > EXPLICIT_STEPUP_MAX_N:
            raise CapacityError(f"explicit tables over {{0,1}}^{n} are refused for n > {EXPLICIT_STEPUP_MAX_N}")
        cf = ColoringFile("explicit", oracle.k, n, seed, vertices="bits")
    else:
        if list(dom) != list(range(1, len(dom) + 1)):
            raise DomainError("explicit files need the vertex domain 1..N")
        cf = ColoringFile("explicit", oracle.k, len(dom), seed)
    for e in colex_subsets(dom, oracle.k):
        cf.entries[e] = oracle.color(e)
    return cf


def _fmt_vertex(v) -> str:
    return str(v)


def dump(cf: ColoringFile, out: TextIO) -> None:
    out.write(f"{MAGIC} {VERSION}\n")
    out.write(f"mode {cf.mode}\nk {cf.k}\nN {cf.N}\n")
    if cf.seed is not None:
        out.write(f"seed {cf.seed}\n")
    if cf.mode == "explicit":
        out.write(f"vertices {cf.vertices}\n")
    out.write("data\n")
    for key, val in cf.entries.items():
        tail = str(val) if cf.mode == "rank" else Color(val).symbol
        out.write(" ".join(map(_fmt_vertex, key)) + f" {tail}\n")


def dumps(cf: ColoringFile) -> str:
    import io as _io
    buf = _io.StringIO()
    dump(cf, buf)
    return buf.getvalue()


def load(stream: TextIO) -> ColoringFile:
    lines = stream.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0].split() != [MAGIC, str(VERSION)]:
        raise FormatError(1, f"expected header '{MAGIC} {VERSION}'")
    header: dict[str, str] = {}
    i = 1
    while i < len(lines) and lines[i].strip() != "data":
        parts = lines[i].split()
        if len(parts) != 2 or parts[0] not in ("mode", "k", "N", "seed", "vertices"):
            raise FormatError(i + 1, f"bad header line {lines[i]!r}")
        if parts[0] in header:
            raise FormatError(i + 1, f"duplicate header key {parts[0]}")
        header[parts[0]] = parts[1]
        i += 1
    if i == len(lines):
        raise FormatError(i, "missing 'data' line")
    for key in ("mode", "k", "N"):
        if key not in header:
            raise FormatError(i + 1, f"missing header key {key}")
    mode = header["mode"]
    if mode not in MODES:
        raise FormatError(2, f"unknown mode {mode!r}")
    try:
        k, N = int(header["k"]), int(header["N"])
        seed = int(header["seed"]) if "seed" in header else None
    except ValueError:
        raise FormatError(2, "k, N and seed must be integers") from None
    vertices = header.get("vertices", "int")
    if vertices not in ("int", "bits") or (vertices == "bits" and mode != "explicit"):
        raise FormatError(2, f"bad vertices kind {vertices!r}")
    if k < 2 or N < 1:
        raise FormatError(2, "need k >= 2 and N >= 1")
    cf = ColoringFile(mode, k, N, seed, vertices)
    size = k if mode == "explicit" else k - 1
    for j in range(i + 1, len(lines)):
        ln = j + 1
        parts = lines[j].split()
        if not parts:
            continue
        if len(parts) != size + 1:
            raise FormatError(ln, f"expected {size} vertices and a value")
        try:
            if vertices == "bits":
                key = tuple(BitVertex.parse(p) for p in parts[:-1])
                if any(len(v) != N for v in key):
                    raise DomainError("bit strings must have length N")
            else:
                key = tuple(int(p) for p in parts[:-1])
                if any(not 1 <= v <= N for v in key):
                    raise DomainError(f"vertex outside 1..{N}")
        except (ValueError, DomainError) as exc:
            raise FormatError(ln, str(exc)) from None
        if list(key) != sorted(set(key)):
            raise FormatError(ln, "vertices must be strictly increasing")
        if key in cf.entries:
            raise FormatError(ln, f"duplicate entry {parts[:-1]}")
        tail = parts[-1]
        if mode == "rank":
            if not tail.isdigit() or not 1 <= int(tail) <= k:
                raise FormatError(ln, f"rank value must be in 1..{k}")
            cf.entries[key] = int(tail)
        else:
            if tail not in ("R", "B"):
                raise FormatError(ln, "color must be R or B")
            cf.entries[key] = Color.from_symbol(tail)
    universe_size = (1 << N) if vertices == "bits" else N
    expected = comb(universe_size, size)
    if len(cf.entries) != expected:
        raise FormatError(len(lines), f"{len(cf.entries)} entries, expected {expected} (files must be total)")
    return cf


def loads(text: str) -> ColoringFile:
    import io as _io
    return load(_io.StringIO(text))


def read(path) -> ColoringFile:
    with open(path) as fh:
        return load(fh)


def write(cf: ColoringFile, path) -> None:
    with open(path, "w") as fh:
        dump(cf, fh)
