"""Command-line front end: ``mcgfac <command> ...``.

Exit status is 0 when every check passes, 1 when a check fails and 2 for usage
or parse errors.  ``--format json`` prints one JSON document with a top-level
``"schema": 1``; text output is line-oriented.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .core import WordError, parse_word, project_base
from .delta import assert_all_distinct, delta_profile
from .lattice import (
    LatticeError, enumerate_roots, root_of_factorization, vector_record, weight_of_factorization,
)
from .tables import (
    EXPECTED_TOTALS, Factorization, TableError, base_word, default_corpus_text, expand_all,
    lookup, parse_corpus, samples,
)
from .verify import (
    CHAINS, DerivationError, FactorSeq, chain_script_name, check_script, hurwitz_move,
    is_identity_sl2, load_script, run_script, script_names,
)

SCHEMA = 1
CHECKS = ("counts", "sl2", "projection", "scripts", "distinct")
CORPUS_ENV = "MCGFAC_CORPUS"


class UsageError(Exception):
    pass


@dataclass
class CommandReport:
    command: str
    status: str = "ok"
    counters: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)
    payload: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)   # text-mode body
    summary: bool = True

    def fail(self, finding: str) -> None:
        self.status = "fail"
        self.findings.append(finding)

    @property
    def exit_code(self) -> int:
        return 0 if self.status == "ok" else 1

    def to_json(self) -> str:
        doc = {"schema": SCHEMA, "command": self.command, "status": self.status,
               "counters": self.counters, "findings": self.findings}
        doc.update(self.payload)
        return json.dumps(doc, separators=(",", ":"))

    def to_text(self) -> str:
        out = list(self.lines)
        out += [f"FAIL {f}" for f in self.findings]
        if not self.summary and self.status == "ok":
            return "\n".join(out)
        summary = ", ".join(f"{k}={v}" for k, v in self.counters.items())
        out.append(f"{self.command}: {self.status}" + (f" ({summary})" if summary else ""))
        return "\n".join(out)


# -- helpers ----------------------------------------------------------------

def _corpus_text(path: str | None) -> str:
    path = path or os.environ.get(CORPUS_ENV)
    if not path:
        return default_corpus_text()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read corpus {path}: {exc}") from None


def _word(text: str, d: int):
    try:
        return parse_word(text, d)
    except WordError as exc:
        raise UsageError(f"cannot parse word {text!r}: {exc}") from None


def _factorization(text: str, d: int) -> Factorization:
    try:
        return Factorization(d, _word(text, d))
    except TableError as exc:
        raise UsageError(str(exc)) from None


# -- commands ---------------------------------------------------------------

def cmd_expand(args) -> CommandReport:
    rep = CommandReport("expand", summary=False)   # one line per factorization
    records = []
    for t in expand_all(args.d):
        records.append({"type": t.type_id, "shift": t.shift, "variation": list(t.variation),
                        "word": str(t.word)})
        rep.lines.append(f"{t.type_id}\t{t.shift}\t{''.join(map(str, t.variation))}\t{t.word}")
    rep.counters["count"] = len(records)
    rep.payload = {"d": args.d, "records": records}
    return rep


def _check_counts(d, entries, rep):
    expected = Counter()
    for row in samples(d):
        expected[row.type_id] = row.declared_count
    got = Counter(e.type_id for e in entries)
    if len(entries) != EXPECTED_TOTALS[d]:
        rep.fail(f"counts: {len(entries)} factorizations, expected {EXPECTED_TOTALS[d]}")
    for type_id in expected:
        if got[type_id] != expected[type_id]:
            rep.fail(f"counts: type {type_id} has {got[type_id]}, table declares {expected[type_id]}")
    known = {t.word.letters: t.type_id for t in expand_all(d)}
    for e in entries:
        if known.get(e.word.letters) != e.type_id:
            rep.fail(f"counts: line {e.lineno} not an expanded type {e.type_id} factorization: {e.text}")


def _check_scripts(d, rep) -> int:
    n = 0
    for source, target in CHAINS[d]:
        name = chain_script_name(d, source, target)
        try:
            check_script(load_script(name))
            n += 1
        except DerivationError as exc:
            rep.fail(f"scripts: {name}: {exc}")
    if d == 1:
        for name in script_names():
            if name.endswith("_to_ab6"):
                try:
                    check_script(load_script(name))
                    n += 1
                except DerivationError as exc:
                    rep.fail(f"scripts: {name}: {exc}")
    return n


def cmd_verify(args) -> CommandReport:
    rep = CommandReport("verify")
    wanted = CHECKS if args.checks == "all" else tuple(c.strip() for c in args.checks.split(","))
    for c in wanted:
        if c not in CHECKS:
            raise UsageError(f"unknown check {c!r}; choose from {', '.join(CHECKS)} or all")
    try:
        entries = [e for e in parse_corpus(_corpus_text(args.corpus)) if e.d == args.d]
    except TableError as exc:
        rep.fail(f"corpus: {exc}")
        return rep
    rep.counters["factorizations"] = len(entries)
    if "counts" in wanted:
        _check_counts(args.d, entries, rep)
    if "sl2" in wanted:
        bad = [e for e in entries if not is_identity_sl2(e.word)]
        for e in bad:
            rep.fail(f"sl2: line {e.lineno}: {e.text}")
        rep.counters["sl2_identity"] = len(entries) - len(bad)
    if "projection" in wanted:
        # Factorization already refuses words that do not project; this re-checks explicitly.
        base = base_word(args.d)
        for e in entries:
            if project_base(e.word.letters, args.d) != base:
                rep.fail(f"projection: line {e.lineno}: {e.text}")
    if "distinct" in wanted:
        report = assert_all_distinct(delta_profile(e.word) for e in entries)
        for key, idx in report.collisions:
            rep.fail("distinct: lines " + ", ".join(str(entries[i].lineno) for i in idx) + " share a profile")
        rep.counters["distinct_profiles"] = report.distinct
    if "scripts" in wanted:
        rep.counters["scripts"] = _check_scripts(args.d, rep)
    if rep.status == "ok":
        rep.lines.append(f"{len(entries)} verified")
    rep.payload = {"d": args.d, "checks": list(wanted)}
    return rep


def cmd_delta(args) -> CommandReport:
    rep = CommandReport("delta")
    f = _factorization(args.word, args.d)
    try:
        p = delta_profile(f)
    except ValueError as exc:
        rep.fail(str(exc))
        return rep
    rep.lines.append(p.render())
    rep.payload = {"d": args.d, "word": str(f), **p.to_json()}
    return rep


def cmd_root(args) -> CommandReport:
    rep = CommandReport("root")
    w = _word(args.word, args.d)
    tagged = lookup(w, args.d)
    if tagged is None:
        rep.fail(f"[{w}] is not an expanded d={args.d} factorization")
        return rep
    p = delta_profile(tagged.word)
    try:
        v = root_of_factorization(tagged.word) if args.d == 1 else weight_of_factorization(tagged.word)
    except LatticeError as exc:
        rep.fail(str(exc))
        return rep
    rec = vector_record(v)
    key = "root" if args.d == 1 else "weight"
    rep.payload = {"d": args.d, "type": tagged.type_id, "word": str(w), key: rec, **p.to_json()}
    rep.lines.append(f"{key} {v.normalized()}" + (f" den={rec['den']}" if "den" in rec else ""))
    rep.lines.append(f"delta {p.render()}")
    return rep


def cmd_bijection(args) -> CommandReport:
    rep = CommandReport("bijection")
    try:
        entries = [e for e in parse_corpus(_corpus_text(args.corpus)) if e.d == 1]
    except TableError as exc:
        rep.fail(f"corpus: {exc}")
        return rep
    owner: dict = {}
    for e in entries:
        try:
            v = root_of_factorization(e.word)
        except (LatticeError, ValueError) as exc:
            rep.fail(f"line {e.lineno}: {exc}")
            continue
        if v in owner:
            rep.fail(f"collision: lines {owner[v].lineno} and {e.lineno} give root {v}")
            continue
        owner[v] = e
    roots = set(enumerate_roots("E8"))
    covered = len(roots & set(owner))
    stray = set(owner) - roots
    for v in sorted(stray, key=lambda r: r.coords):
        rep.fail(f"not a root of E8: {v}")
    if covered != len(roots):
        rep.fail(f"{covered}/{len(roots)} roots covered")
    closed = all(-v in owner for v in owner)
    if not closed:
        rep.fail("image is not closed under negation")
    rep.counters = {"factorizations": len(entries), "covered": covered, "roots": len(roots)}
    rep.lines.append(f"{covered}/{len(roots)} roots covered; " + ("negation-closed" if closed else "not negation-closed"))
    rep.payload = {"negation_closed": closed}
    return rep


def cmd_hurwitz(args) -> CommandReport:
    rep = CommandReport("hurwitz")
    seq = FactorSeq.from_word(_word(args.word, args.d))
    try:
        out = hurwitz_move(seq, args.index, args.dir)
    except IndexError as exc:
        raise UsageError(str(exc)) from None
    rep.lines.append(str(out))
    rep.payload = {"d": args.d, "factors": [str(w) for w in out.words()], "product": str(out.product())}
    return rep


def cmd_derive(args) -> CommandReport:
    rep = CommandReport("derive")
    if args.list:
        names = script_names()
        rep.lines += names
        rep.payload = {"scripts": names}
        return rep
    if not args.script:
        raise UsageError("give a script name or --list")
    try:
        script = load_script(args.script)
    except DerivationError as exc:
        raise UsageError(str(exc)) from None
    start = _word(args.start, script.d) if args.start else script.start
    try:
        final, trace = run_script(start, script)
    except DerivationError as exc:
        rep.fail(str(exc))
        return rep
    steps = []
    for entry in trace:
        label = str(entry.step) if entry.step is not None else "START"
        state = " | ".join(str(f) for f in entry.state)
        steps.append({"step": label, "state": state})
        rep.lines.append(f"{label:32s} {state}")
    if args.start is None and final != script.end:
        rep.fail(f"ended at [{final}], script declares [{script.end}]")
    rep.payload = {"script": args.script, "d": script.d, "final": str(final), "trace": steps}
    return rep


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcgfac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, d=True, corpus=False):
        p = sub.add_parser(name, help=help_text)
        if d:
            p.add_argument("--d", type=int, choices=(1, 2, 3), required=True)
        if corpus:
            p.add_argument("--corpus", help=f"corpus file (default: bundled; env {CORPUS_ENV})")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    add("expand", cmd_expand, "list every variation of every sample factorization")
    p = add("verify", cmd_verify, "run consistency checks over the corpus", corpus=True)
    p.add_argument("--checks", default="all", help="comma list of " + ",".join(CHECKS) + " or all")
    p = add("delta", cmd_delta, "delta profile of a factorization")
    p.add_argument("--word", required=True)
    p = add("root", cmd_root, "root (d=1) or dual weight (d=2,3) of a factorization")
    p.add_argument("--word", required=True)
    add("bijection", cmd_bijection, "check the 240 d=1 factorizations against the E8 roots",
        d=False, corpus=True)
    p = add("hurwitz", cmd_hurwitz, "apply one Hurwitz move to a word of single twists")
    p.add_argument("--word", required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--dir", choices=("L", "R"), required=True)
    p = add("derive", cmd_derive, "replay a shipped derivation script", d=False)
    p.add_argument("script", nargs="?")
    p.add_argument("--start", help="start word (default: the script's own)")
    p.add_argument("--list", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = args.func(args)
    except UsageError as exc:
        print(f"mcgfac {args.command}: error: {exc}", file=sys.stderr)
        return 2
    print(rep.to_json() if args.format == "json" else rep.to_text())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
