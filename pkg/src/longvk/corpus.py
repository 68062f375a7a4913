"""Built-in example diagrams.

Two small collections ship with the package: classical.txt holds
planar-realizable codes (band-surface genus 0) and virtual.txt holds
codes that need positive genus, plus two disguised unknots useful as
regression inputs for the equivalence search.  Files are tab-separated
``name<TAB>code`` lines; ``0`` denotes the trivial diagram.
"""

from __future__ import annotations

from importlib import resources

from longvk.gauss import OpenGaussDiagram, parse_gauss_code


def _load(filename: str) -> dict[str, OpenGaussDiagram]:
    text = resources.files("longvk").joinpath(f"data/corpus/{filename}").read_text()
    out: dict[str, OpenGaussDiagram] = {}
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, sep, code = line.partition("\t")
        if not sep or not name:
            raise ValueError(f"{filename}: bad corpus line {line!r}")
        if name in out:
            raise ValueError(f"{filename}: duplicate corpus name {name!r}")
        out[name] = parse_gauss_code(code.strip())
    return out


def classical_corpus() -> dict[str, OpenGaussDiagram]:
    return _load("classical.txt")


def virtual_corpus() -> dict[str, OpenGaussDiagram]:
    return _load("virtual.txt")


def full_corpus() -> dict[str, OpenGaussDiagram]:
    merged = classical_corpus()
    for name, diagram in virtual_corpus().items():
        if name in merged:
            raise ValueError(f"corpus name {name!r} appears in both files")
        merged[name] = diagram
    return merged
