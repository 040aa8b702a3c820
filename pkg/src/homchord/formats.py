"""Plain-text facet and chain files.

Facet file::

    # comment
    vertices: a b c d        (optional; fixes the vertex order)
    a b c
    c d

Chain file (one term per line)::

    1 : a b
    -1/2 : b c
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from pathlib import Path

from .chains import Chain
from .complexes import SimplicialComplex, build_complex, face_key, bits
from .errors import ChainError, FaceError, ParseError
from .field import Field


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_complex(text: str) -> SimplicialComplex:
    header = None
    facets = []
    for no, line in _lines(text):
        if line.startswith("vertices:"):
            if header is not None or facets:
                raise ParseError("'vertices:' header must come first and only once", no)
            header = line[len("vertices:"):].split()
            if len(set(header)) != len(header):
                raise ParseError("duplicate label in 'vertices:' header", no)
            continue
        labels = line.split()
        if len(set(labels)) != len(labels):
            raise ParseError(f"repeated label in facet {' '.join(labels)!r}", no)
        if header is not None:
            unknown = [x for x in labels if x not in header]
            if unknown:
                raise ParseError(f"label {unknown[0]!r} not declared in header", no)
        facets.append((no, labels))
    if header is None:
        order: dict[str, None] = {}
        for _, labels in facets:
            for x in labels:
                order.setdefault(x, None)
        header = list(order)
    return build_complex(header, [labels for _, labels in facets])


def dump_complex(cx: SimplicialComplex) -> str:
    out = ["vertices: " + " ".join(cx.labels)]
    out += [" ".join(f) for f in cx.facet_list()]
    return "\n".join(out) + "\n"


def read_complex(path) -> SimplicialComplex:
    return parse_complex(Path(path).read_text())


def _coefficient(text: str, field: Field, no: int):
    try:
        if field.is_rational:
            return Fraction(text)
        return int(text)
    except ValueError:
        raise ParseError(f"bad coefficient {text!r}", no) from None


def parse_chain(text: str, cx, field: Field) -> Chain:
    """Chain on the faces of ``cx`` (a complex or relative pair)."""
    total = getattr(cx, "total", cx)
    terms: dict[int, object] = {}
    degree = None
    for no, line in _lines(text):
        if ":" not in line:
            raise ParseError("expected '<coeff> : v1 v2 ...'", no)
        coeff, face = line.split(":", 1)
        labels = face.split()
        try:
            mask = total.face(labels)
        except FaceError as err:
            raise ParseError(str(err), no) from None
        if mask not in cx:
            raise ParseError(f"{{{', '.join(labels)}}} is not a face of the complex", no)
        d = len(labels) - 1
        if degree is None:
            degree = d
        elif d != degree:
            raise ParseError(f"term of dimension {d} in a {degree}-chain", no)
        v = field.add(terms.get(mask, 0), field(_coefficient(coeff.strip(), field, no)))
        if v:
            terms[mask] = v
        else:
            terms.pop(mask, None)
    if degree is None:
        raise ChainError("chain file has no terms")
    return Chain(degree, terms, field, cx)


def dump_chain(c: Chain, labels) -> str:
    f = c.field
    return "".join(f"{f.format(v)} : {' '.join(labels[i] for i in bits(face))}\n"
                   for face, v in c.sorted_terms())


def chain_records(c: Chain, labels) -> list[str]:
    return dump_chain(c, labels).splitlines()


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def face_list(cx_labels, masks) -> list[list[str]]:
    return [[cx_labels[i] for i in bits(m)] for m in sorted(masks, key=face_key)]
