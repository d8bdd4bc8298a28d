"""Command-line front end.

Every verb prints a tab-delimited report on stdout.  Report verbs can also write
a PNG chart (``--figure``) and a TSV table (``--tsv``).  Exit status is 0 on
success, 1 for bad input or a domain error, 2 when a guaranteed property fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bgg import ClassifyingTriple, classify, realize
from .errors import DomainError, InvariantViolation
from .exactfield import get_field
from .formats import (
    complex_from_json,
    complex_to_json,
    dump_json,
    is_triple_doc,
    load_json,
    triple_from_json,
    triple_to_json,
)
from .kzero import class_of, finite_free_criterion, gr_fp_class, gr_fp_class_oracle, obstruction_report
from .perfcx import PerfectComplex, concentrated, homology, lambda_module
from .polys import (
    GradedIdeal,
    count_parameter_ideals_by_chains,
    enumerate_parameter_ideals,
    oliver_ideal,
)
from .skewalg import GroupTag
from .specseq import STABLE_PAGE, collapse_report, format_page, pages

EXIT_OK, EXIT_DOMAIN, EXIT_INVARIANT = 0, 1, 2


def _out(text: str = "") -> None:
    sys.stdout.write(text + "\n")


def _kv(key: str, value) -> None:
    _out(f"{key}\t{value}")


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def _ideal_str(J: GradedIdeal) -> str:
    return "(" + ", ".join(J.to_strings()) + ")"


def _write(path: str | None, doc: dict) -> None:
    text = dump_json(doc)
    if path is None or path == "-":
        _out(text)
    else:
        Path(path).write_text(text + "\n")


def _load_complex(path: str) -> PerfectComplex:
    doc = load_json(path)
    if is_triple_doc(doc):
        raise DomainError(f"{path} holds a triple; a complex file is needed here")
    return complex_from_json(doc)


def _homology_rows(C: PerfectComplex) -> list[dict]:
    H = homology(C)
    return [
        {"degree": d, "dim": H.pieces[d].dim, "class": str(class_of(C.field, H.q_matrix(d)))}
        for d in H.support()
    ]


# ---------------------------------------------------------------------------
# verbs


def cmd_classify(args) -> int:
    C = _load_complex(args.input)
    res = classify(C, args.bound)
    T = res.triple
    if args.json:
        doc = {
            "triple": triple_to_json(T, C.group),
            "m": res.m,
            "n": res.n,
            "t": res.t,
            "t_equals_m_plus_n": res.t_equals_m_plus_n,
            "gr_homology": _homology_rows(C),
        }
        _out(dump_json(doc))
    else:
        _kv("l", T.l)
        _kv("L", T.L)
        _kv("J", _ideal_str(T.J))
        _kv("m", res.m)
        _kv("n", res.n)
        _kv("t", res.t)
        _kv("t=m+n", _yes(res.t_equals_m_plus_n))
        _out("degree\tdim\tclass")
        for row in _homology_rows(C):
            _out(f"{row['degree']}\t{row['dim']}\t{row['class']}")
    if args.output:
        _write(args.output, triple_to_json(T, C.group))
    _report_files(args, C, homology_title=f"H*(C), l={T.l}")
    return EXIT_OK


def cmd_realize(args) -> int:
    T, group = triple_from_json(load_json(args.input))
    C = realize(T, group)
    _write(args.output, complex_to_json(C))
    if args.check:
        back = classify(C).triple
        if back != T:
            raise InvariantViolation(f"roundtrip mismatch: input {T}, re-classified {back}")
        sys.stderr.write("roundtrip\tok\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    field = get_field(args.field)
    d1, d2 = sorted((args.d1, args.d2))
    ideals = enumerate_parameter_ideals(d1, d2, field, args.invariant, args.steenrod, args.jobs)
    if not args.count_only:
        for J in ideals:
            _out(", ".join(J.to_strings()))
    _kv("count", len(ideals))
    if args.oracle:
        other = count_parameter_ideals_by_chains(d1, d2, field, args.invariant, args.steenrod)
        _kv("oracle_count", other)
        if other != len(ideals):
            raise InvariantViolation(f"enumerators disagree: {len(ideals)} vs {other}")
    return EXIT_OK


def cmd_obstruct(args) -> int:
    doc = load_json(args.input)
    if is_triple_doc(doc):
        T, group = triple_from_json(doc)
        C = realize(T, group)
    else:
        C = complex_from_json(doc)
    rep = obstruction_report(C)
    if args.json:
        _out(dump_json(rep.to_json()))
    else:
        for key, value in rep.to_json().items():
            if isinstance(value, bool):
                value = str(value).lower()
            elif value is None:
                value = "n/a"
            _kv(key, value)
        _kv("consistent", "true")
    return EXIT_OK


def _parse_page(text: str) -> int:
    if text.lower() in ("inf", "infinity", "oo"):
        return STABLE_PAGE
    try:
        r = int(text)
    except ValueError:
        raise DomainError(f"page must be an integer or 'inf', got {text!r}") from None
    if r < 0:
        raise DomainError("page index must be non-negative")
    return r


def cmd_spectral(args) -> int:
    C = _load_complex(args.input)
    r = _parse_page(args.page)
    ps = pages(C, max(r, STABLE_PAGE))
    P = ps[r]
    sys.stdout.write(format_page(P))
    surv = None
    H = homology(C)
    if H.total_dim() == 4:
        rep = collapse_report(C)
        surv = rep.survivors
        _kv("collapses at E2", _yes(rep.collapses_at_e2))
        _kv("E_inf columns", " ".join(map(str, rep.column_dims)))
        _kv("survivors", " ".join(f"({k},{t})" for k, t in rep.survivors))
        if rep.page_problems:
            raise InvariantViolation("; ".join(rep.page_problems))
    if args.figure:
        from .plotting import plot_page

        plot_page(P, args.figure, surv)
    if args.tsv:
        from .plotting import page_rows, write_tsv

        write_tsv(page_rows(P), args.tsv)
    return EXIT_OK


def cmd_rigidity(args) -> int:
    field = get_field(args.field)
    if args.m < 0 or args.n < 0:
        raise DomainError("m and n must be non-negative")
    m, n = sorted((args.m, args.n))
    ideals = enumerate_parameter_ideals(m + 1, n + 1, field, invariant=True, steenrod=True, jobs=args.jobs)
    _kv("degrees", f"({m + 1},{n + 1})")
    _kv("count", len(ideals))
    if len(ideals) > 1 and field.name == "F2":
        raise InvariantViolation(f"{len(ideals)} Steenrod closed invariant parameter ideals in degrees ({m + 1},{n + 1})")
    if not ideals:
        return EXIT_OK
    J = ideals[0]
    _kv("J", _ideal_str(J))
    _kv("finite_free", str(finite_free_criterion(J)).lower())
    C = realize(ClassifyingTriple(0, "triv", J))
    _kv("term_dims", " ".join(str(C.dim(i)) for i in C.degrees()))
    _kv("homology", " ".join(f"{d}:{k}" for d, k in homology(C).dims().items()))
    if args.output:
        _write(args.output, complex_to_json(C))
    return EXIT_OK


def _selftest_checks():
    F2 = get_field("F2")
    lam = concentrated(lambda_module(F2, GroupTag.C3))
    yield "classify Lambda", classify(lam).triple == ClassifyingTriple(0, "triv", GradedIdeal.parse(["x1", "x2"]))
    found = enumerate_parameter_ideals(3, 4, F2, invariant=True, steenrod=True)
    yield "Oliver uniqueness", found == [oliver_ideal()]
    yield "dual enumeration (3,4)", len(enumerate_parameter_ideals(3, 4, F2)) == count_parameter_ideals_by_chains(3, 4, F2)
    T = ClassifyingTriple(0, "triv", oliver_ideal())
    C = realize(T)
    yield "Oliver roundtrip", classify(C).triple == T
    yield "Oliver survivors", collapse_report(C).survivors == [(0, 0), (1, 2), (1, 3), (2, 5)]
    yield "Oliver obstruction vanishes", obstruction_report(C).vanishes
    sq = realize(ClassifyingTriple(0, "triv", GradedIdeal.parse(["x1^2", "x2^2"])))
    yield "(x1^2, x2^2) obstruction 2 - V", str(obstruction_report(sq).chi) == "2 - V"
    for name in ("F2", "F4"):
        f = get_field(name)
        yield f"gr F[P] class over {name}", gr_fp_class(f) == gr_fp_class_oracle(f)


def cmd_selftest(args) -> int:
    failed = 0
    for name, ok in _selftest_checks():
        _out(f"{'ok' if ok else 'FAIL'}\t{name}")
        failed += not ok
    _kv("failed", failed)
    if failed:
        raise InvariantViolation(f"{failed} self-test checks failed")
    return EXIT_OK


def _report_files(args, C: PerfectComplex, homology_title: str) -> None:
    if getattr(args, "figure", None):
        from .plotting import plot_homology

        plot_homology(homology(C), args.figure, homology_title)
    if getattr(args, "tsv", None):
        from .plotting import write_tsv

        write_tsv(_homology_rows(C), args.tsv)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="a4perfect", description="Perfect complexes over F2[A4] and their invariants.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("classify", help="compute the triple (l, L, J) of a complex")
    c.add_argument("input", help="complex JSON file")
    c.add_argument("--bound", type=int, default=None, help="degree bound for the Ext computation")
    c.add_argument("--json", action="store_true", help="print the report as JSON")
    c.add_argument("-o", "--output", help="also write the triple file here")
    c.add_argument("--figure", help="write a homology bar chart (PNG)")
    c.add_argument("--tsv", help="write the homology table as TSV")
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("realize", help="build a complex from a triple file")
    r.add_argument("input", help="triple JSON file")
    r.add_argument("-o", "--output", help="output complex file (default stdout)")
    r.add_argument("--check", action="store_true", help="re-classify the result and compare")
    r.set_defaults(func=cmd_realize)

    e = sub.add_parser("enumerate", help="list parameter ideals with generators in degrees d1, d2")
    e.add_argument("d1", type=int)
    e.add_argument("d2", type=int)
    e.add_argument("--field", default="F2", choices=("F2", "F4"))
    e.add_argument("--invariant", action="store_true", help="keep only C3-invariant ideals")
    e.add_argument("--steenrod", action="store_true", help="keep only Steenrod closed ideals")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--oracle", action="store_true", help="cross-check the count with the chain enumerator")
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(func=cmd_enumerate)

    o = sub.add_parser("obstruct", help="finiteness obstruction report for a complex or triple")
    o.add_argument("input", help="complex or triple JSON file")
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_obstruct)

    s = sub.add_parser("spectral", help="pages of the coradical spectral sequence")
    s.add_argument("input", help="complex JSON file")
    s.add_argument("--page", default="inf", help="page number or 'inf' (default)")
    s.add_argument("--figure", help="write the page chart (PNG)")
    s.add_argument("--tsv", help="write the page dimensions as TSV")
    s.set_defaults(func=cmd_spectral)

    g = sub.add_parser("rigidity", help="Steenrod closed invariant ideals in degrees (m+1, n+1)")
    g.add_argument("m", type=int)
    g.add_argument("n", type=int)
    g.add_argument("--field", default="F2", choices=("F2", "F4"))
    g.add_argument("-o", "--output", help="write the realized complex here")
    g.add_argument("--jobs", type=int, default=1)
    g.set_defaults(func=cmd_rigidity)

    t = sub.add_parser("selftest", help="run built-in consistency checks")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        sys.stderr.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT
    except (DomainError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
