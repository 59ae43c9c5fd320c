"""Command-line entry point: ``affine-cores {convert,project,enumerate,verify,render}``.

JSON payloads come from ``--payload``, ``--in FILE`` or stdin; results go to
stdout or ``--out FILE``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coxeter import Word, canonical_reduced_word, evaluate_word
from .errors import AffineCoresError
from .geometry import walk_from_word
from .lattice import (
    AbacusC, CorootPoint, Window, abacus_from_core, abacus_from_coroot, abacus_from_window,
    core_from_abacus, coroot_from_abacus, first_part, window_from_abacus,
)
from .projection import (
    domain_params, enumerate_codomain, enumerate_domain, phi_abacus, phi_word_trace,
)
from .svg import render_svg_rank2
from .type_a import (
    AbacusA, abacus_from_core_a, core_from_abacus_a, first_part_a, hyperplane_a, phi_a_abacus,
)
from .verify import SUITES, run_suite

MODELS = ("core", "abacus", "coroot", "window", "word")


def _field(payload, key):
    """Accept either a bare list or an object holding it under ``key``."""
    if isinstance(payload, dict):
        if key not in payload:
            raise AffineCoresError(f"payload needs a {key!r} field")
        return payload[key]
    return payload


def to_abacus_c(model: str, payload, n: int) -> AbacusC:
    if model == "core":
        return abacus_from_core(_field(payload, "parts"), n)
    if model == "abacus":
        return AbacusC(n, _field(payload, "levels"))
    if model == "coroot":
        return abacus_from_coroot(CorootPoint(_field(payload, "coords")))
    if model == "window":
        return abacus_from_window(Window(n, _field(payload, "values")))
    if model == "word":
        return evaluate_word(Word(n, _field(payload, "letters")))
    raise AffineCoresError(f"unknown model {model!r}")


def from_abacus_c(model: str, a: AbacusC) -> dict:
    if model == "core":
        return {"parts": list(core_from_abacus(a))}
    if model == "abacus":
        return {"levels": list(a.levels), "full": list(a.full)}
    if model == "coroot":
        return coroot_from_abacus(a).to_json()
    if model == "window":
        return {"values": list(window_from_abacus(a).values)}
    if model == "word":
        w = canonical_reduced_word(a)
        return {"letters": list(w.letters), "length": len(w), "word": str(w)}
    raise AffineCoresError(f"unknown model {model!r}")


def to_abacus_a(model: str, payload, n: int) -> AbacusA:
    if model == "core":
        return abacus_from_core_a(_field(payload, "parts"), n)
    if model in ("abacus", "coroot"):
        return AbacusA(n, _field(payload, "levels" if model == "abacus" else "coords"))
    raise AffineCoresError(f"type A supports core, abacus and coroot, not {model!r}")


def from_abacus_a(model: str, a: AbacusA) -> dict:
    if model == "core":
        return {"type": "A", "parts": list(core_from_abacus_a(a))}
    if model == "abacus":
        return a.to_json()
    if model == "coroot":
        return {"type": "A", "coords": list(a.levels)}
    raise AffineCoresError(f"type A supports core, abacus and coroot, not {model!r}")


def cmd_convert(args, payload) -> dict:
    if args.type == "A":
        return from_abacus_a(args.to, to_abacus_a(args.from_, payload, args.n))
    return from_abacus_c(args.to, to_abacus_c(args.from_, payload, args.n))


def cmd_project(args, payload) -> dict:
    if args.type == "A":
        a = to_abacus_a(args.from_, payload, args.n)
        k = first_part_a(a)
        if k == 0:
            return {"type": "A", "k": 0, "image": from_abacus_a(args.from_, AbacusA.identity(args.n - 1))}
        h = hyperplane_a(args.n, k)
        return {"type": "A", "k": k, "axis": h.axis, "level": h.level,
                "image": from_abacus_a(args.from_, phi_a_abacus(a))}
    a = to_abacus_c(args.from_, payload, args.n)
    k = first_part(a)
    if k == 0:
        return {"k": 0, "image": from_abacus_c(args.from_, AbacusC.identity(args.n - 1))}
    params = domain_params(args.n, k)
    # a reduced word may ride along with any payload; default to the canonical one
    given = args.from_ == "word" or (isinstance(payload, dict) and "letters" in payload)
    w = Word(args.n, _field(payload, "letters")) if given else canonical_reduced_word(a)
    image_word, trace = phi_word_trace(w, a)
    image = phi_abacus(a)
    out = {"k": k, "l1": params.l1, "l2": params.l2, "axis": params.axis,
           "level": params.level, "image": from_abacus_c(args.from_, image)}
    if args.from_ == "word":
        out["image"] = {"letters": list(image_word.letters), "length": len(image_word),
                        "word": str(image_word)}
    out["word"] = str(w)
    out["image_word"] = str(image_word)
    out["trace"] = [t.to_json() for t in trace]
    return out


def cmd_enumerate(args, payload) -> dict:
    points = enumerate_domain(args.n, args.k) if args.which == "domain" \
        else enumerate_codomain(args.n, args.k)
    return {"n": args.n, "k": args.k, "which": args.which,
            "params": domain_params(args.n, args.k).to_json(),
            "points": [list(p.coords) for p in points]}


def _parse_window(text):
    if text is None:
        return None
    vals = [float(v) if "." in v else int(v) for v in text.split(",")]
    if len(vals) != 4:
        raise AffineCoresError("--window takes xmin,ymin,xmax,ymax")
    return vals


def cmd_render(args, payload) -> str:
    walks = []
    if payload is not None:
        words = payload.get("walks") if isinstance(payload, dict) and "walks" in payload \
            else [payload]
        walks = [walk_from_word(Word(2, _field(w, "letters"))) for w in words]
    options = payload if isinstance(payload, dict) else {}
    k = args.k if args.k is not None else options.get("k")
    window = _parse_window(args.window) or options.get("window") or (-2, -2, 2, 2)
    params = domain_params(2, k) if k else None
    return render_svg_rank2(walks, params, tuple(window))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affine-cores", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def io(sp, payload=True):
        if payload:
            sp.add_argument("--payload", help="inline JSON payload")
            sp.add_argument("--in", dest="infile", help="read the JSON payload from a file")
        sp.add_argument("--out", help="write the result to a file")

    c = sub.add_parser("convert", help="convert between models")
    c.add_argument("--from", dest="from_", choices=MODELS, required=True)
    c.add_argument("--to", choices=MODELS, required=True)
    c.add_argument("--type", choices=("A", "C"), default="C")
    c.add_argument("--n", type=int, required=True)
    io(c)

    pr = sub.add_parser("project", help="apply the projection to rank n-1")
    pr.add_argument("--from", dest="from_", choices=MODELS, default="abacus")
    pr.add_argument("--type", choices=("A", "C"), default="C")
    pr.add_argument("--n", type=int, required=True)
    io(pr)

    e = sub.add_parser("enumerate", help="list the domain or codomain for (n, k)")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--which", choices=("domain", "codomain"), default="domain")
    io(e, payload=False)

    v = sub.add_parser("verify", help="run invariant suites; exit 0 iff none fail")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--n", type=int, default=2)
    v.add_argument("--kmax", type=int, default=6)
    io(v, payload=False)

    r = sub.add_parser("render", help="draw rank-2 alcove walks as SVG")
    r.add_argument("--walk", help="JSON file with {'letters': [...]} or {'walks': [...]}")
    r.add_argument("--k", type=int)
    r.add_argument("--window", help="xmin,ymin,xmax,ymax")
    r.add_argument("--out", help="write the SVG to a file")
    return p


def _read_payload(args):
    if getattr(args, "payload", None) is not None:
        return json.loads(args.payload)
    path = getattr(args, "infile", None) or getattr(args, "walk", None)
    if path:
        with open(path) as fh:
            return json.load(fh)
    if args.command in ("convert", "project"):
        return json.load(sys.stdin)
    return None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = _read_payload(args)
        if args.command == "render":
            _emit(cmd_render(args, payload), args.out)
            return 0
        if args.command == "verify":
            result = run_suite(args.suite, args.n, args.kmax)
        else:
            handler = {"convert": cmd_convert, "project": cmd_project,
                       "enumerate": cmd_enumerate}[args.command]
            result = handler(args, payload)
    except (AffineCoresError, json.JSONDecodeError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2
    _emit(json.dumps(result, sort_keys=True) + "\n", args.out)
    if args.command == "verify" and result["violations"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
