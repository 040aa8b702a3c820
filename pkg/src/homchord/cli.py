"""Command line front end: ``homchord <command> --complex FILE ...``.

Exit status is 0 when the verdict is true (or the command has no verdict),
1 when it is false and 2 on any error, including questions that are not
applicable to the input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import chordality as ch
from . import corpus, cuts, dirac
from .complexes import SimplicialComplex, alexander_dual, bits
from .errors import HomchordError
from .field import Field
from .formats import dump_chain, dump_complex, parse_chain, parse_complex, sha256_text
from .scan import MAX_SCAN_VERTICES

SCHEMA = 1


class _Verdict(Exception):
    pass


def _load_complex(spec: str) -> tuple[SimplicialComplex, str]:
    """A facet file path, ``-`` for stdin, or ``corpus:NAME[:P1,P2]``."""
    if spec.startswith("corpus:"):
        parts = spec.split(":")
        params = tuple(int(x) for x in parts[2].split(",")) if len(parts) > 2 and parts[2] else ()
        cx = corpus.named_complex(parts[1], *params)
        return cx, dump_complex(cx)
    text = sys.stdin.read() if spec == "-" else Path(spec).read_text()
    return parse_complex(text), text


def _face(cx: SimplicialComplex, labels: list[str]) -> int:
    words = [w for x in labels for w in x.replace(",", " ").split()]
    m = cx.face(words)
    cx.require_face(m)
    return m


def _labels(cx, mask):
    return [cx.labels[i] for i in bits(mask)]


# -- commands ----------------------------------------------------------------


def cmd_check(a, cx, field):
    if a.kind == "resolution":
        v = ch.is_resolution_chordal(cx, a.k, field)
    else:
        v = ch.is_decomposition_chordal(cx, a.k, field)
    res = {"kind": a.kind, "k": a.k, "holds": v.holds}
    if not v.holds:
        res["witness_vertices"] = v.witness_labels()
        res["witness_cycle"] = dump_chain(v.witness_cycle, cx.labels).splitlines()
    return v.holds, res


def _read_cycle(a, cx, field):
    return parse_chain(Path(a.cycle).read_text(), cx, field)


def cmd_resolve(a, cx, field):
    z = _read_cycle(a, cx, field)
    c = ch.resolve_cycle(cx, z, field)
    res = {"resolution": None if c is None else dump_chain(c, cx.labels).splitlines()}
    return c is not None, res


def cmd_decompose(a, cx, field):
    z = _read_cycle(a, cx, field)
    d = ch.decompose_cycle(cx, z, field)
    res = {"decomposition": None if d is None else
           [{"coefficient": field.format(c), "vertices": _labels(cx, s)} for c, s in d]}
    return d is not None, res


def cmd_leray(a, cx, field):
    return None, {"leray_number": ch.leray_number(cx, field)}


def cmd_regularity(a, cx, field):
    t = ch.betti_table(cx, field, a.threads)
    res = {"regularity": t.regularity}
    if a.table:
        res["table"] = t.rows()
        res["t"] = {str(i): t.t(i) for i in range(t.n + 1)}
    return None, res


def cmd_linear_resolution(a, cx, field):
    v = ch.has_linear_resolution(cx, field)
    return v, {"linear_resolution": v}


def cmd_cm(a, cx, field):
    v = ch.is_cohen_macaulay(cx, field)
    return v, {"cohen_macaulay": v}


def cmd_dual(a, cx, field):
    ground = None
    if a.ground:
        ground = cx.face([w for x in a.ground for w in x.replace(",", " ").split()])
    d = alexander_dual(cx, ground)
    return None, {"dual": dump_complex(d).splitlines()}


def cmd_dirac(a, cx, field):
    r = dirac.dirac_search(cx, a.k, a.budget)
    res = {"k": a.k, "status": r.status, "nodes": r.nodes,
           "certificate": r.certificate.to_json() if r.certificate else None}
    if r.status == dirac.BUDGET:
        raise _Verdict(res)
    return r.status == dirac.CERTIFIED, res


def cmd_cut(a, cx, field):
    s, t = _face(cx, a.sigma), _face(cx, a.tau)
    if a.minimal:
        rep = cuts.minimal_cut(cx, s, t, a.k, a.cut_mode)
    elif a.cut:
        faces = [_face(cx, [f]) for f in a.cut.split(";") if f.strip()]
        rep = cuts.is_cut(cx, faces, s, t, a.k, a.cut_mode)
    else:
        raise HomchordError("cut needs --minimal or --cut 'FACE;FACE;...'")
    if a.homology and rep.is_cut:
        rep = cuts.is_homology_cut(cx, rep.cut, s, t, a.k, field, a.cut_mode)
        if a.minimal:
            rep.is_minimal = True
    verdict = rep.two_sided if a.homology and rep.is_cut else rep.is_cut
    return bool(verdict), rep.to_json()


def cmd_elkcut(a, cx, field):
    sigma, rep = cuts.find_extended_link_minimal_cut(cx, a.k, field, a.cut_mode)
    return True, {"sigma": _labels(cx, sigma), "report": rep.to_json()}


def cmd_reverse_prop(a, cx, field):
    r = cuts.check_reverse_propagation(cx, _face(cx, a.sigma), a.k, field, a.cut_mode)
    res = {"decomposition_chordal": r.decomposition_chordal, "two_sided_cut": r.two_sided_cut,
           "upper_cut": r.upper_cut, "upper_cut_vacuous": r.upper_cut_vacuous,
           "conclusion": r.conclusion, "hypotheses_hold": r.hypotheses_hold,
           "violated": r.violated}
    if r.witness_pair:
        res["witness_pair"] = [_labels(cx, f) for f in r.witness_pair]
    return not r.violated, res


def cmd_propagation(a, cx, field):
    table = cx.vertex_mask.bit_count() <= MAX_SCAN_VERTICES
    r = ch.check_propagation(cx, a.k, field, with_table=table, threads=a.threads)
    res = {
        "k": a.k, "no_high_missing_faces": r.no_high_missing_faces,
        "decomposition_low": _keyed(r.decomposition_low),
        "resolution_low": _keyed(r.resolution_low),
        "resolution_high": _keyed(r.resolution_high),
        "decomposition_high": _keyed(r.decomposition_high),
        "leray": r.leray, "regularity": r.regularity,
        "linear_resolution": r.linear_resolution, "dual_cohen_macaulay": r.dual_cohen_macaulay,
        "herzog_srinivasan": r.herzog_srinivasan,
        "hypotheses_hold": r.hypotheses_hold, "conclusions_hold": r.conclusions_hold,
        "counterexamples": r.counterexamples,
    }
    return not r.counterexamples, res


def _keyed(d):
    return {str(k): v for k, v in d.items()}


def cmd_corpus(a, cx, field):
    if a.name.startswith("random."):
        model = a.name[len("random."):]
        nums = list(a.params)
        if not nums:
            raise HomchordError("random models need --params N [model parameters]")
        out = corpus.random_complex(model, int(nums[0]), tuple(nums[1:]), a.seed)
    else:
        out = corpus.named_complex(a.name, *(int(p) for p in a.params))
    return None, {"complex": dump_complex(out).splitlines()}


COMMANDS = {
    "check": cmd_check, "resolve": cmd_resolve, "decompose": cmd_decompose,
    "leray": cmd_leray, "regularity": cmd_regularity,
    "linear-resolution": cmd_linear_resolution, "cm": cmd_cm, "dual": cmd_dual,
    "dirac": cmd_dirac, "cut": cmd_cut, "elkcut": cmd_elkcut,
    "reverse-prop": cmd_reverse_prop, "propagation": cmd_propagation, "corpus": cmd_corpus,
}


# -- argument parsing ----------------------------------------------------------


def _common(defaults: bool) -> argparse.ArgumentParser:
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--complex", default=d(None),
                   help="facet file, '-' for stdin, or corpus:NAME[:P1,P2]")
    p.add_argument("--json", default=d(None), metavar="OUT", help="write the JSON report here ('-' = stdout)")
    p.add_argument("--threads", type=int, default=d(1))
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--field", default=d("q"), help="q, f2, f3, ... or fp:P")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homchord", parents=[_common(True)],
                                     description="Higher chordality, Leray numbers and cuts.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(False)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    p = add("check", "resolution/decomposition k-chordality")
    p.add_argument("--kind", choices=("resolution", "decomposition"), required=True)
    p.add_argument("--k", type=int, required=True)
    for name in ("resolve", "decompose"):
        p = add(name, f"{name} a cycle given as a chain file")
        p.add_argument("--cycle", required=True)
    add("leray", "Leray number")
    p = add("regularity", "Stanley-Reisner regularity via Hochster's formula")
    p.add_argument("--table", action="store_true")
    add("linear-resolution", "does the Stanley-Reisner ideal have a linear resolution")
    add("cm", "Cohen-Macaulay test (Reisner)")
    p = add("dual", "Alexander dual")
    p.add_argument("--ground", nargs="+", help="ground set labels (default: all declared labels)")
    p = add("dirac", "k-Dirac recognition with certificate")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p = add("cut", "relative k-cuts")
    p.add_argument("--sigma", nargs="+", required=True)
    p.add_argument("--tau", nargs="+", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cut", help="cut faces, e.g. 'a b;b c'")
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--homology", action="store_true")
    p.add_argument("--cut-mode", choices=cuts.MODES, default="edge")
    p = add("elkcut", "face whose extended link is a minimal k-cut")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cut-mode", choices=cuts.MODES, default="edge")
    p = add("reverse-prop", "check the reverse propagation hypotheses and conclusion")
    p.add_argument("--sigma", nargs="+", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cut-mode", choices=cuts.MODES, default="edge")
    p = add("propagation", "propagation hypotheses, conclusions and equivalences")
    p.add_argument("--k", type=int, required=True)
    p = add("corpus", "dump a named complex or a seeded random one (random.MODEL)")
    p.add_argument("--name", required=True)
    p.add_argument("--params", nargs="*", type=float, default=[])
    return parser


def _emit(record: dict, a, text_lines: list[str]):
    if a.json == "-":
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        if a.json:
            Path(a.json).write_text(json.dumps(record, indent=2, sort_keys=True) + "\n")
        for line in text_lines:
            print(line)


def _text(result) -> list[str]:
    out = []
    for key, val in result.items():
        if isinstance(val, list) and val and all(isinstance(x, str) for x in val):
            out.append(f"{key}:")
            out.extend(f"  {x}" for x in val)
        else:
            out.append(f"{key}: {json.dumps(val) if isinstance(val, (dict, list)) else val}")
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    a = parser.parse_args(argv)
    if a.command == "corpus":
        a.params = [int(x) if x.is_integer() else x for x in a.params]
    record = {"schema": SCHEMA, "command": ["homchord", *argv]}
    t0 = time.perf_counter()
    try:
        field = Field.parse(a.field)
        record["field"] = field.name
        cx = None
        if a.command != "corpus":
            if a.complex is None:
                raise HomchordError("--complex is required")
            cx, text = _load_complex(a.complex)
            record["input_sha256"] = sha256_text(text)
        verdict, result = COMMANDS[a.command](a, cx, field)
        code = 0 if verdict in (None, True) else 1
    except _Verdict as v:
        verdict, result, code = None, v.args[0], 2
        result["error"] = "search budget exhausted before a decision"
    except (HomchordError, ValueError, OSError, KeyError) as err:
        record["error"] = str(err)
        record["exit_code"] = 2
        record["timing_s"] = round(time.perf_counter() - t0, 6)
        print(f"homchord: error: {err}", file=sys.stderr)
        if a.json and a.json != "-":
            Path(a.json).write_text(json.dumps(record, indent=2, sort_keys=True) + "\n")
        elif a.json == "-":
            print(json.dumps(record, indent=2, sort_keys=True))
        return 2
    record.update(verdict=verdict, result=result, exit_code=code,
                  timing_s=round(time.perf_counter() - t0, 6))
    if a.command == "corpus":
        # plain facet file so the output can be fed back through --complex
        lines = list(result["complex"])
    else:
        lines = ([f"verdict: {verdict}"] if verdict is not None else []) + _text(result)
    _emit(record, a, lines)
    if code == 2:
        print(f"homchord: error: {result['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
