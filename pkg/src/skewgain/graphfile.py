"""The line-oriented graph file format.

::

    domain rational|gaussian|complex
    antiinvolution identity|inverse|conjugate|conjinverse
    vertices <n>
    edge <u> <v> <gain>      # gain of the oriented edge u -> v

``#`` starts a comment; blank lines are ignored.
"""
from .errors import ParseError, SkewGainError
from .graph import build_graph
from .scalar import AntiInvolution, Domain

_HEADER = ("domain", "antiinvolution", "vertices")


def parse_graph_file(text):
    header = {}
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key in _HEADER:
            if edges:
                raise ParseError(lineno, f"'{key}' must come before the edges")
            if key in header:
                raise ParseError(lineno, f"'{key}' given twice")
            if len(rest) != 1:
                raise ParseError(lineno, f"'{key}' takes exactly one value")
            try:
                if key == "domain":
                    header[key] = Domain(rest[0])
                elif key == "antiinvolution":
                    header[key] = AntiInvolution(rest[0])
                else:
                    header[key] = int(rest[0])
                    if header[key] < 1:
                        raise ValueError
            except ValueError:
                raise ParseError(lineno, f"bad value {rest[0]!r} for '{key}'") from None
        elif key == "edge":
            missing = [k for k in _HEADER if k not in header]
            if missing:
                raise ParseError(lineno, f"edge before header ({', '.join(missing)} missing)")
            if len(rest) != 3:
                raise ParseError(lineno, "edge needs: edge <u> <v> <gain>")
            try:
                u, v = int(rest[0]), int(rest[1])
            except ValueError:
                raise ParseError(lineno, "edge endpoints must be integers") from None
            try:
                gain = header["domain"].parse(rest[2])
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            n = header["vertices"]
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(lineno, f"vertex out of range 0..{n - 1}")
            if u == v:
                raise ParseError(lineno, f"loop at vertex {u}")
            if not gain:
                raise ParseError(lineno, "zero gain")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(lineno, f"duplicate edge {key}")
            seen.add(key)
            edges.append((u, v, gain))
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")
    missing = [k for k in _HEADER if k not in header]
    if missing:
        raise ParseError(len(text.splitlines()), f"missing header: {', '.join(missing)}")
    try:
        return build_graph(header["vertices"], edges, header["antiinvolution"], header["domain"])
    except SkewGainError as exc:
        raise ParseError(0, f"{type(exc).__name__}: {exc}") from None


def format_graph(G, comment=None):
    out = []
    if comment:
        out.append(f"# {comment}")
    out.append(f"domain {G.domain.value}")
    out.append(f"antiinvolution {G.f.value}")
    out.append(f"vertices {G.n}")
    for u, v, a in G.edges:
        out.append(f"edge {u} {v} {G.domain.format(a)}")
    return "\n".join(out) + "\n"
