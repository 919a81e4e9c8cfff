"""Command-line front end: ``digitwords <command> ...``.

Exit codes: 0 success, 2 usage error, 3 precision ceiling reached.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import automata, bbp, complexity, contfrac, fibonacci, fpseries, pinned, reals, words
from .reals import PrecisionError

EXIT_OK, EXIT_USAGE, EXIT_PRECISION = 0, 2, 3


class UsageError(Exception):
    pass


def parse_word(spec: str) -> words.WordStream | words.Word:
    """Word descriptors shared by ``word``, ``complexity`` and ``patterns``.

    Named words: fibonacci, thue_morse, rudin_shapiro, nesterenko, danilov,
    powers2 (the digits v_1 v_2 ... of sum 2^{-2^n}), and the automata ptm,
    baum_sweet, paper_fold.  Also ``text:abaab`` for a literal word and
    ``digits:<source>@<base>`` for the digits of a real.
    """
    named = {
        "fibonacci": words.fibonacci_word,
        "thue_morse": words.thue_morse_word,
        "rudin_shapiro": words.rudin_shapiro_word,
        "nesterenko": words.nesterenko_word,
        "danilov": fibonacci.danilov_stream,
        "powers2": lambda: automata.word_of(automata.builtin("powers2")).tail(1, name="powers2"),
    }
    if spec in named:
        return named[spec]()
    if spec in automata.BUILTINS:
        return automata.word_of(automata.builtin(spec))
    if spec.startswith("text:"):
        text = spec[5:]
        return words.Word.from_text(words.Alphabet.of(sorted(set(text))), text)
    if spec.startswith("digits:"):
        desc, _, base = spec[7:].rpartition("@")
        return _digit_stream(reals.parse_source(desc), int(base))
    raise UsageError(f"unknown word {spec!r}")


def _digit_stream(src: reals.RealSource, g: int) -> words.WordStream:
    def chunks():
        n = 4096
        done = 0
        while True:
            data = src.digit_values(g, n)
            yield data[done:]
            done, n = n, 2 * n

    return words.WordStream(words.Alphabet.digits(g), chunks(), name=src.descriptor)


def _emit(rows: list[list], header: list[str] | None, fmt: str, out) -> None:
    if fmt == "json":
        payload = [dict(zip(header, r)) for r in rows] if header else rows
        out.write(json.dumps(payload) + "\n")
        return
    w = csv.writer(out, lineterminator="\n")
    if header:
        w.writerow(header)
    w.writerows(rows)


# commands ------------------------------------------------------------------------


def cmd_word(a, out):
    if a.morphism:
        if a.morphism in words.MORPHISMS:
            mu, letter = words.MORPHISMS[a.morphism]
        else:
            with open(a.morphism) as fh:
                mu = words.Morphism.from_json(fh.read())
            letter = mu.source.letters[0]
        w = words.fixed_point(mu, a.letter or letter)
    else:
        w = parse_word(a.name)
    prefix = w.prefix(a.prefix) if isinstance(w, words.WordStream) else w[: a.prefix]
    out.write(f"{prefix}\n")


def cmd_automaton(a, out):
    m = automata.builtin(a.name) if not a.file else automata.Dfao.from_json(open(a.file).read())
    if a.action == "eval":
        if a.n is None:
            raise UsageError("automaton eval needs --n")
        out.write(m.eval(a.n, a.msd_first) + "\n")
        if a.trace:
            out.write(" ".join(m.trace(a.n, a.msd_first)) + "\n")
    elif a.action == "word":
        out.write(str(automata.word_of(m, a.msd_first).prefix(a.count)) + "\n")
    else:
        out.write(m.to_json() + "\n")


def cmd_complexity(a, out):
    w = parse_word(a.word)
    prof = complexity.complexity(w, a.max_m, a.horizon)
    if a.format == "json":
        out.write(json.dumps({"horizon": a.horizon, "m": list(range(1, a.max_m + 1)), "p": list(prof.counts)}) + "\n")
        return
    out.write(f"# horizon={a.horizon}\n")
    _emit([list(range(1, a.max_m + 1)), list(prof.counts)], None, "csv", out)


def cmd_fib(a, out):
    if a.action == "zeckendorf":
        z = fibonacci.zeckendorf(a.n)
        out.write(" ".join(map(str, z.indices)) + "\n")
    elif a.action == "rabbits":
        out.write("".join(fibonacci.rabbit(k) for k in range(1, a.n + 1)) + "\n")
    else:
        out.write(",".join(map(str, fibonacci.beatty_indices(a.kind, a.n))) + "\n")


def cmd_digits(a, out):
    src = reals.parse_source(a.source)
    if a.prec is not None:
        digits = src.digits(a.base, a.count, prec=a.prec)
        ip = src.integer_part()
        out.write(f"{ip if a.base == 10 else _int_in_base(ip, a.base)}.{digits}\n")
        return
    out.write(src.expansion(a.base, a.count) + "\n")


def _int_in_base(k: int, g: int) -> str:
    alphabet = words.Alphabet.digits(g)
    n = max(1, reals._ndigits(k, g))
    return alphabet.decode(reals.int_to_digits(k, g, n))


def cmd_normality(a, out):
    src = reals.parse_source(a.source)
    rep = reals.normality_stats(src, a.base, a.block_len, a.count, threshold=a.threshold, overlapping=not a.disjoint)
    rows = [[rep.block(i), int(c), f"{f:.8f}"] for i, (c, f) in enumerate(zip(rep.counts, rep.frequencies))]
    _emit(rows, ["block", "count", "frequency"], a.format, out)
    if a.format == "csv":
        out.write(f"# max_deviation={rep.max_deviation:.8f} threshold={rep.threshold} consistent={str(rep.consistent).lower()}\n")


def cmd_bbp(a, out):
    spec = bbp.spec_by_name(a.spec)
    if a.action == "eval":
        src = bbp.eval_spec(spec)
        base = a.base or spec.g
        out.write(src.expansion(base, a.count) + "\n")
    elif a.action == "digit":
        out.write(str(bbp.extract_digits(spec, a.position, a.count)) + "\n")
    else:
        orbit = bbp.hypothesis_a_orbit(spec, a.count)
        rows = [[n, f"{y:.17f}"] for n, y in enumerate(orbit.values)]
        _emit(rows, ["n", "y"], a.format, out)
        if a.format == "csv":
            out.write(f"# discrepancy={bbp.discrepancy(orbit.values[1:]):.10f} bits={orbit.bits}\n")


def cmd_fpseries(a, out):
    if a.action == "verify-ptm":
        ok = fpseries.verify_ptm_cubic(a.order)
        out.write(f"order={a.order} identity={'holds' if ok else 'fails'}\n")
        return EXIT_OK if ok else 1
    f = fpseries.mahler_product(a.order)
    out.write(",".join(map(str, f.coeffs)) + "\n")
    return EXIT_OK


def cmd_cf(a, out):
    if a.action == "expand":
        cf = contfrac.cf_expand(reals.parse_source(a.source), a.terms)
    elif a.action == "from-word":
        w = parse_word(a.word)
        if not isinstance(w, words.WordStream):
            raise UsageError("from-word needs an infinite word")
        cf = contfrac.cf_from_word(w, a.A, a.B)
    else:
        grid = contfrac.log_grid(10, a.xmax, a.points)
        rep = contfrac.roy_check(a.A, a.B, grid)
        rows = [[r.X, r.x0, r.x1, r.x2, f"{r.delta:.12e}", f"{r.s:.10f}"] for r in rep.rows]
        _emit(rows, ["X", "x0", "x1", "x2", "delta", "s"], a.format, out)
        if a.format == "csv":
            out.write(f"# c_emp={rep.c_emp:.10f} bits={rep.bits}\n")
        return
    terms = cf.terms(a.terms)
    out.write(f"[{terms[0]}; {', '.join(map(str, terms[1:]))}]\n")


def cmd_patterns(a, out):
    w = parse_word(a.word)
    horizon = min(a.horizon, len(w)) if isinstance(w, words.Word) else a.horizon
    hits = complexity.find_patterns(w, a.kind, horizon, Fraction(a.power) if a.power else None, a.max_root, a.min_length)
    rows = [[h.kind, h.start, h.length, h.root if h.root is not None else "", h.text(w)] for h in hits[: a.limit]]
    _emit(rows, ["kind", "start", "length", "root", "text"], a.format, out)
    if a.format == "csv":
        out.write(f"# total={len(hits)}\n")


def cmd_fixtures(a, out):
    if a.action == "path":
        out.write(str(pinned.fixtures_path()) + "\n")
    else:
        out.write(json.dumps(pinned.load_fixtures(), indent=2, sort_keys=True) + "\n")


# parser --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="digitwords", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")

    s = sub.add_parser("word", help="prefix of a morphic or named word")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--morphism", help=f"builtin {sorted(words.MORPHISMS)} or a JSON file")
    g.add_argument("--name", help="named word (see parse_word)")
    s.add_argument("--letter", help="starting letter of the fixed point")
    s.add_argument("--prefix", type=int, required=True)
    s.set_defaults(func=cmd_word)

    s = sub.add_parser("automaton", help="evaluate, run or export a DFAO")
    s.add_argument("action", choices=("eval", "word", "export"))
    s.add_argument("--name", default="ptm", choices=sorted(automata.BUILTINS))
    s.add_argument("--file", help="DFAO JSON file instead of a builtin")
    s.add_argument("--n", type=int)
    s.add_argument("--count", type=int, default=32)
    s.add_argument("--msd-first", action="store_true")
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_automaton)

    s = sub.add_parser("complexity", help="subword complexity p_N(1..max_m)")
    s.add_argument("--word", required=True)
    s.add_argument("--max-m", type=int, required=True)
    s.add_argument("--horizon", type=int, required=True)
    fmt(s)
    s.set_defaults(func=cmd_complexity)

    s = sub.add_parser("fib", help="Zeckendorf, rabbits, Beatty sequences")
    s.add_argument("action", choices=("zeckendorf", "rabbits", "beatty"))
    s.add_argument("n", type=int)
    s.add_argument("--kind", default="phi", choices=("phi", "phi2"))
    s.set_defaults(func=cmd_fib)

    s = sub.add_parser("digits", help="certified digits of a real")
    s.add_argument("--source", required=True)
    s.add_argument("--base", type=int, default=10)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--prec", type=int, help="starting working precision in bits")
    s.set_defaults(func=cmd_digits)

    s = sub.add_parser("normality", help="block frequencies of the digits of a real")
    s.add_argument("--source", required=True)
    s.add_argument("--base", type=int, default=10)
    s.add_argument("--block-len", type=int, default=1)
    s.add_argument("--count", type=int, default=100000)
    s.add_argument("--threshold", type=float, default=0.01)
    s.add_argument("--disjoint", action="store_true", help="non-overlapping blocks")
    fmt(s)
    s.set_defaults(func=cmd_normality)

    s = sub.add_parser("bbp", help="BBP evaluation, digit extraction, Hypothesis A orbit")
    s.add_argument("action", choices=("eval", "digit", "orbit"))
    s.add_argument("--spec", required=True, help=f"{sorted(bbp.CATALOG)} or a JSON file")
    s.add_argument("--position", type=int, default=1)
    s.add_argument("--count", type=int, default=16)
    s.add_argument("--base", type=int)
    fmt(s)
    s.set_defaults(func=cmd_bbp)

    s = sub.add_parser("fpseries", help="power-series identities")
    s.add_argument("action", choices=("verify-ptm", "mahler"))
    s.add_argument("--order", type=int, required=True)
    s.set_defaults(func=cmd_fpseries)

    s = sub.add_parser("cf", help="continued fractions")
    s.add_argument("action", choices=("expand", "from-word", "roy"))
    s.add_argument("--source")
    s.add_argument("--word", default="fibonacci")
    s.add_argument("--terms", type=int, default=20)
    s.add_argument("--A", type=int, default=1)
    s.add_argument("--B", type=int, default=2)
    s.add_argument("--xmax", type=int, default=10000)
    s.add_argument("--points", type=int, default=25)
    fmt(s)
    s.set_defaults(func=cmd_cf)

    s = sub.add_parser("patterns", help="squares, overlaps, w-powers, palindromes")
    s.add_argument("--word", required=True)
    s.add_argument("--kind", required=True, choices=complexity.PATTERN_KINDS)
    s.add_argument("--horizon", type=int, default=1000)
    s.add_argument("--power", help="rational exponent for w_power, e.g. 7/3")
    s.add_argument("--max-root", type=int)
    s.add_argument("--min-length", type=int, default=2)
    s.add_argument("--limit", type=int, default=100)
    fmt(s)
    s.set_defaults(func=cmd_patterns)

    s = sub.add_parser("fixtures", help="show pinned empirical constants")
    s.add_argument("action", choices=("show", "path"), nargs="?", default="show")
    s.set_defaults(func=cmd_fixtures)
    return p


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "cf" and args.action == "expand" and not args.source:
            raise UsageError("cf expand needs --source")
        code = args.func(args, out)
    except PrecisionError as exc:
        print(f"precision: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (UsageError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if code is None else code


def run_capture(argv: list[str]) -> tuple[int, str]:
    buf = io.StringIO()
    code = run(argv, buf)
    return code, buf.getvalue()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
