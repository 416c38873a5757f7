"""Command-line front end: classify, root, comb, equal, cr, gen, verify.

Words are signed generator indices separated by spaces or commas, with the
strand count given by ``-n``. When no word is given on the command line,
words are read one per line from stdin; blank lines and ``#`` comments are
skipped.

Exit codes: 0 success, 1 not a power (or failed verification), 2 parse or
validation error, 3 undecided because a budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, TextIO

from .braid import BraidError, BraidWord, crossing_matrix, parse_word
from .combing import DEFAULT_BUDGET, comb, in_A_n
from .halftwist import (
    Identity,
    NotPower,
    Power,
    Undecided,
    check_certificate,
    classify,
    random_half_twist_power,
)
from .word_problem import BudgetExceeded, equal

SCHEMA = 1
EXIT_OK, EXIT_NOT_POWER, EXIT_PARSE, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _lines(words: list[str], stdin: TextIO) -> Iterable[str]:
    if words:
        yield from words
        return
    for line in stdin:
        line = line.split("#", 1)[0].strip()
        if line:
            yield line


def _parse(text: str, n: int, lineno: int | None = None) -> BraidWord:
    """Parse a word, or the "word" field of a JSON record such as gen emits."""
    try:
        if text.lstrip().startswith("{"):
            try:
                letters = json.loads(text)["word"]
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise BraidError(f"bad JSON record: {exc}") from None
            text = " ".join(map(str, letters))
        return parse_word(text, n)
    except BraidError as exc:
        where = f"word {lineno}: " if lineno is not None else ""
        raise UsageError(f"{where}{exc}") from None


def _emit(out: TextIO, args, record: dict, text: str) -> None:
    if args.json:
        out.write(json.dumps({"schema": SCHEMA, **record}, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _verdict_record(w: BraidWord, res) -> dict:
    rec = {
        "n": w.strands,
        "word": list(w.letters),
        "verdict": None,
        "k": None,
        "root": None,
        "conjugator": None,
        "failed_step": None,
    }
    if isinstance(res, Power):
        rec.update(
            verdict="power",
            k=res.k,
            root=list(res.root.letters),
            conjugator=list(res.conjugator.letters),
        )
    elif isinstance(res, Identity):
        rec.update(verdict="identity", k=0)
    elif isinstance(res, NotPower):
        rec.update(verdict="not-power", failed_step=res.reason.value)
    else:
        rec.update(verdict="undecided", failed_step=res.detail)
    return rec


def _fmt(letters: list[int]) -> str:
    return " ".join(map(str, letters)) if letters else "(empty)"


def cmd_classify(args, stdin: TextIO, out: TextIO) -> int:
    code = EXIT_OK
    for lineno, text in enumerate(_lines(args.words, stdin), 1):
        w = _parse(text, args.n, lineno)
        res = classify(w, args.budget)
        rec = _verdict_record(w, res)
        if isinstance(res, Power):
            if args.command == "root":
                line = _fmt(rec["root"])
            else:
                line = f"power k={res.k} root: {_fmt(rec['root'])} conjugator: {_fmt(rec['conjugator'])}"
        elif isinstance(res, Identity):
            line = "identity"
        elif isinstance(res, NotPower):
            line = f"not-power failed_step={res.reason.value}"
            code = max(code, EXIT_NOT_POWER)
        else:
            line = f"undecided: {res.detail}"
            code = EXIT_UNDECIDED
        _emit(out, args, rec, line)
    return code


def cmd_comb(args, stdin: TextIO, out: TextIO) -> int:
    code = EXIT_OK
    for lineno, text in enumerate(_lines(args.words, stdin), 1):
        w = _parse(text, args.n, lineno)
        rec = {"n": w.strands, "word": list(w.letters), "combed": None}
        try:
            if not in_A_n(w):
                _emit(out, args, rec, "not combed")
                code = max(code, EXIT_NOT_POWER)
                continue
            fw = comb(w, args.budget)
        except BudgetExceeded as exc:
            rec["undecided"] = str(exc)
            _emit(out, args, rec, f"undecided: {exc}")
            code = EXIT_UNDECIDED
            continue
        rec["combed"] = str(fw)
        rec["syllables"] = list(fw.syllables)
        _emit(out, args, rec, str(fw))
    return code


def cmd_equal(args, stdin: TextIO, out: TextIO) -> int:
    if len(args.words) != 2:
        raise UsageError("equal needs exactly two words")
    u, v = (_parse(t, args.n, i) for i, t in enumerate(args.words, 1))
    result = equal(u, v)
    _emit(out, args, {"n": args.n, "equal": result}, "true" if result else "false")
    return EXIT_OK


def cmd_cr(args, stdin: TextIO, out: TextIO) -> int:
    for lineno, text in enumerate(_lines(args.words, stdin), 1):
        w = _parse(text, args.n, lineno)
        m = crossing_matrix(w)
        _emit(out, args, {"n": w.strands, "word": list(w.letters), "crossing": [list(r) for r in m.entries]}, str(m))
    return EXIT_OK


def cmd_gen(args, stdin: TextIO, out: TextIO) -> int:
    if args.k == 0:
        raise UsageError("--k must be nonzero")
    for seed in range(args.seed, args.seed + args.count):
        b, (root, p) = random_half_twist_power(args.n, args.k, args.conj_len, seed)
        rec = {
            "n": args.n,
            "k": args.k,
            "seed": seed,
            "word": list(b.letters),
            "root": list(root.letters),
            "conjugator": list(p.letters),
        }
        _emit(out, args, rec, _fmt(rec["word"]))
    return EXIT_OK


def _verify_one(n: int, word, k, root, conj) -> bool:
    def mk(letters) -> BraidWord:
        if isinstance(letters, str):
            return _parse(letters, n)
        try:
            return BraidWord(n, tuple(letters))
        except BraidError as exc:
            raise UsageError(str(exc)) from None

    return check_certificate(mk(word), k, mk(root), mk(conj))


def cmd_verify(args, stdin: TextIO, out: TextIO) -> int:
    checks = []
    if args.words:
        if args.n is None or args.k is None or args.root is None or args.conjugator is None:
            raise UsageError("verify WORD needs -n, --k, --root and --conjugator")
        checks.append((args.n, args.words[0], args.k, args.root, args.conjugator))
    else:
        for lineno, line in enumerate(stdin, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                rec = json.loads(line)
                n = rec.get("n", args.n)
                checks.append((n, rec["word"], rec["k"], rec["root"], rec["conjugator"]))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise UsageError(f"record {lineno}: {exc}") from None
    code = EXIT_OK
    for n, word, k, root, conj in checks:
        if n is None or k is None or root is None or conj is None:
            ok = False
        else:
            ok = _verify_one(n, word, k, root, conj)
        code = code if ok else EXIT_NOT_POWER
        _emit(out, args, {"n": n, "word": word, "valid": ok}, "valid" if ok else "invalid")
    return code


COMMANDS = {
    "classify": cmd_classify,
    "root": cmd_classify,
    "comb": cmd_comb,
    "equal": cmd_equal,
    "cr": cmd_cr,
    "gen": cmd_gen,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, help="strand count")
    common.add_argument("--json", action="store_true", help="emit JSON lines")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="combing size limit")

    parser = argparse.ArgumentParser(prog="braidtwist", description="Half-twist power recognition in braid groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("classify", "decide whether each word is a power of a half-twist"),
        ("root", "print the half-twist root of each word"),
        ("comb", "write a combed braid in the free generators a_i"),
        ("equal", "decide whether two words are the same braid"),
        ("cr", "print the crossing-index matrix"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("words", nargs="*")

    p = sub.add_parser("gen", parents=[common], help="generate seeded half-twist powers")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--conj-len", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)

    p = sub.add_parser("verify", parents=[common], help="check a root/conjugator certificate")
    p.add_argument("words", nargs="*")
    p.add_argument("--k", type=int)
    p.add_argument("--root")
    p.add_argument("--conjugator")
    return parser


def main(argv: list[str] | None = None, stdin: TextIO | None = None, out: TextIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        if args.command != "verify" and (args.n is None or args.n < 2):
            raise UsageError("-n must be given and at least 2")
        return COMMANDS[args.command](args, stdin, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
