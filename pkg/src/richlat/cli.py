"""
Command-line front end.

    richlat --type A4 classify s2.s1.s3.s2 s3.s2.s1.s4.s3.s4.s2.s3
    richlat --type A2 rpoly "" s1.s2.s1
    richlat --type A3 --output json verify --max-gap 3

Exit status: 0 for any answer (including "empty" and "not toric"), 2 when
an internal invariant is violated, 3 for configuration, parse or budget
errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
import time
from dataclasses import dataclass, field

from . import bruhat_poset, kl_polynomials
from .bruhat_poset import build_interval, classify_rank3, export_hasse
from .errors import (BudgetExceeded, ConfigurationError, EmptyIntervalError, PreconditionError,
                     RichlatError, StructuralError, UnsupportedTypeError)
from .kl_polynomials import (inverse_kl_polynomial, kl_polynomial, point_count, r_polynomial,
                             r_polynomial_deodhar)
from .qpoly import QPolynomial
from .richardson_toric import (classify, coxeter_factorization_toric, enumerate_toric_pairs,
                               grassmannian_audit, grassmannian_toric)
from .root_system import RootSystemType, build_root_system
from .weyl import (DEFAULT_BUDGET, bruhat_leq, enumerate_group, format_word, from_word,
                   parabolic_quotient, parse_word, reduced_word)

EXIT_OK = 0
EXIT_INVARIANT = 2
EXIT_CONFIG = 3

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Config:
    root_system: str
    budget: int = DEFAULT_BUDGET
    cache_dir: str | None = None
    output: str = "text"
    paranoid: bool = False
    strict: bool = False

    def __post_init__(self):
        if self.budget <= 0:
            raise ConfigurationError("budget must be positive")
        if self.output not in ("text", "json", "dot"):
            raise ConfigurationError(f"unknown output format {self.output!r}")
        RootSystemType.parse(self.root_system)

    @property
    def rs(self):
        return build_root_system(self.root_system)


@dataclass
class RunReport:
    command: str
    inputs: dict
    result: dict
    timing: dict = field(default_factory=dict)
    cache: dict = field(default_factory=dict)
    text: list[str] = field(default_factory=list)
    violations: int = 0

    def to_json(self, timing: bool = False) -> str:
        data = {"command": self.command, "inputs": self.inputs, "result": self.result,
                "cache": self.cache}
        if timing:
            data["timing"] = self.timing
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

    def to_text(self, timing: bool = False) -> str:
        lines = list(self.text)
        if timing:
            lines.append(f"elapsed: {self.timing.get('seconds', 0):.3f}s")
        return "\n".join(lines) + "\n"


def _element(config: Config, text: str):
    return from_word(config.rs, parse_word(text))


def _word(x) -> str:
    return format_word(reduced_word(x))


def _echo(config: Config, **words) -> dict:
    """Raw and canonical forms of each input word."""
    out = {"root_system": config.rs.name}
    for name, text in words.items():
        out[name] = {"input": text, "canonical": _word(_element(config, text))}
    return out


def _poly(p: QPolynomial) -> dict:
    return {"coefficients": p.to_json(), "canonical": str(p), "descending": p.descending()}


def _empty(command: str, inputs: dict, v, w) -> RunReport:
    msg = f"empty: v ≰ w ({_word(v) or 'e'} is not below {_word(w) or 'e'})"
    return RunReport(command, inputs, {"empty": True, "toric": False}, text=[msg])


# -- commands ------------------------------------------------------------------------

def cmd_classify(config: Config, v_word: str, w_word: str) -> RunReport:
    v, w = _element(config, v_word), _element(config, w_word)
    inputs = _echo(config, v=v_word, w=w_word)
    if not bruhat_leq(v, w):
        return _empty("classify", inputs, v, w)
    verdict = classify(v, w, config.paranoid, config.strict)
    interval = build_interval(v, w)
    census = interval.crown_census()
    result = dict(verdict.to_json(), empty=False, toric=verdict.toric,
                  size=len(interval), crown_census={str(k): c for k, c in census.items()})
    text = [
        f"[{verdict.to_json()['v'] or 'e'}, {verdict.to_json()['w'] or 'e'}] in {config.rs.name}",
        f"toric: {str(verdict.toric).lower()}",
        f"gap: {verdict.gap} (rank bound {config.rs.rank}: "
        f"{'within' if verdict.within_rank_bound else 'exceeded'})",
        f"by_roots: {str(verdict.by_roots).lower()}",
        f"by_s3_free: {str(verdict.by_s3_free).lower()}",
        f"by_lattice: {str(verdict.by_lattice).lower()}",
        f"by_r_poly: {str(verdict.by_r_polynomial).lower()}",
        f"interval size: {len(interval)}",
        "rank-3 census: " + (", ".join(f"{c} x {k}" for k, c in census.items()) or "none"),
    ]
    return RunReport("classify", inputs, result, text=text)


def _poly_report(command, label, inputs, p: QPolynomial) -> RunReport:
    return RunReport(command, inputs, _poly(p), text=[f"{label} = {p.descending()}",
                                                     f"canonical: {p}"])


def cmd_rpoly(config: Config, u_word: str, v_word: str, policy: str = "min") -> RunReport:
    u, v = _element(config, u_word), _element(config, v_word)
    return _poly_report("rpoly", "R", _echo(config, u=u_word, v=v_word),
                        r_polynomial(u, v, policy))


def cmd_kl(config: Config, u_word: str, v_word: str, inverse: bool = False) -> RunReport:
    u, v = _element(config, u_word), _element(config, v_word)
    p = inverse_kl_polynomial(u, v) if inverse else kl_polynomial(u, v)
    return _poly_report("kl", "P*" if inverse else "P", _echo(config, u=u_word, v=v_word), p)


def cmd_points(config: Config, v_word: str, w_word: str) -> RunReport:
    v, w = _element(config, v_word), _element(config, w_word)
    inputs = _echo(config, v=v_word, w=w_word)
    if not bruhat_leq(v, w):
        return _empty("points", inputs, v, w)
    return _poly_report("points", "#X(F_q)", inputs, point_count(v, w))


def _verify_pairs(config: Config, max_gap: int):
    """Cross-module invariants over all pairs with gap <= max_gap.

    Returns (counts, above-bound disagreements, dependent-root pairs inside
    the rank bound, violation messages).
    """
    rs = config.rs
    verdicts = enumerate_toric_pairs(rs, max_gap, config.budget, config.paranoid, config.strict)
    counts = {"pairs": len(verdicts), "by_roots": 0, "by_s3_free": 0, "by_lattice": 0,
              "by_r_poly": 0, "within_rank_bound": 0, "rank_bound_exceptions": 0}
    above = []
    exceptions = []
    problems = []
    for t in verdicts:
        for key, val in (("by_roots", t.by_roots), ("by_s3_free", t.by_s3_free),
                         ("by_lattice", t.by_lattice), ("by_r_poly", t.by_r_polynomial),
                         ("within_rank_bound", t.within_rank_bound)):
            counts[key] += int(val)
        if not t.within_rank_bound and not t.agree:
            above.append(t.to_json())
        if t.rank_bound_exception:
            counts["rank_bound_exceptions"] += 1
            exceptions.append(t.to_json())
        pair = f"[{_word(t.v) or 'e'}, {_word(t.w) or 'e'}]"
        if coxeter_factorization_toric(t.v, t.w) and not t.by_roots:
            problems.append(f"{pair}: Coxeter factorization but roots dependent")
        if r_polynomial(t.v, t.w, "min") != r_polynomial(t.v, t.w, "max"):
            problems.append(f"{pair}: R-polynomial depends on descent choice")
        if r_polynomial_deodhar(t.v, t.w, reduced_word(t.w)) != r_polynomial(t.v, t.w):
            problems.append(f"{pair}: Deodhar sum differs from recursion")
        if t.gap == 3:
            try:
                classify_rank3(build_interval(t.v, t.w), config.paranoid)
            except StructuralError as exc:
                problems.append(f"{pair}: {exc}")
    q = QPolynomial.q()
    elems = enumerate_group(rs, config.budget)
    for v in elems:
        total = sum((r_polynomial(u, v) for u in elems if u.length <= v.length), QPolynomial())
        if total != q ** v.length:
            problems.append(f"sum of R_(u,{_word(v) or 'e'}) is {total}, not q^{v.length}")
    return counts, above, exceptions, problems


def cmd_verify(config: Config, max_gap: int | None = None) -> RunReport:
    rs = config.rs
    max_gap = rs.rank if max_gap is None else max_gap
    counts, above, exceptions, problems = _verify_pairs(config, max_gap)
    result = {"max_gap": max_gap, "counts": counts, "violations": problems,
              "above_bound_disagreements": above, "rank_bound_exceptions": exceptions}
    text = [f"verify {rs.name} up to gap {max_gap}",
            f"pairs: {counts['pairs']}",
            *(f"{k}: {counts[k]}" for k in ("by_roots", "by_s3_free", "by_lattice", "by_r_poly",
                                             "within_rank_bound")),
            f"above-bound disagreements: {len(above)}",
            f"dependent roots inside the rank bound: {len(exceptions)}",
            *(f"  [{x['v'] or 'e'}, {x['w']}]" for x in exceptions),
            f"violations: {len(problems)}",
            *(f"  {p}" for p in problems)]
    return RunReport("verify", {"root_system": rs.name, "max_gap": max_gap}, result,
                     text=text, violations=len(problems))


def cmd_export(config: Config, v_word: str, w_word: str, fmt: str = "dot",
               path: str | None = None) -> RunReport:
    v, w = _element(config, v_word), _element(config, w_word)
    inputs = _echo(config, v=v_word, w=w_word)
    if not bruhat_leq(v, w):
        return _empty("export", inputs, v, w)
    interval = build_interval(v, w)
    body = export_hasse(interval, fmt)
    result = {"format": fmt, "nodes": len(interval), "edges": len(interval.hasse_edges)}
    if path:
        try:
            with open(path, "w") as fh:
                fh.write(body)
        except OSError as exc:
            raise ConfigurationError(f"cannot write {path}: {exc.strerror}") from exc
        result["path"] = path
        text = [f"wrote {path} ({len(interval)} nodes, {len(interval.hasse_edges)} edges)"]
    else:
        result["body"] = body
        text = [body.rstrip("\n")]
    return RunReport("export", inputs, result, text=text)


def _parse_J(rs, J: str | None, omit: int | None) -> frozenset[int]:
    if (J is None) == (omit is None):
        raise ConfigurationError("give exactly one of --J and --omit")
    if omit is not None:
        if not 1 <= omit <= rs.rank:
            raise ConfigurationError(f"--omit {omit} out of range for {rs.name}")
        return frozenset(range(1, rs.rank + 1)) - {omit}
    # plain indices; parse_word would read "1" as the identity
    try:
        out = frozenset(int(t.lstrip("s")) for t in re.split(r"[\s.,]+", J.strip()) if t)
    except ValueError:
        raise ConfigurationError(f"cannot parse J = {J!r}") from None
    if any(not 1 <= i <= rs.rank for i in out):
        raise ConfigurationError(f"J = {J!r} out of range for {rs.name}")
    return out


def cmd_grassmann(config: Config, v_word: str, w_word: str, J: str | None = None,
                  omit: int | None = None) -> RunReport:
    rs = config.rs
    Jset = _parse_J(rs, J, omit)
    parabolic_quotient(rs, Jset, config.budget)
    v, w = _element(config, v_word), _element(config, w_word)
    inputs = dict(_echo(config, v=v_word, w=w_word), J=sorted(Jset))
    if not bruhat_leq(v, w):
        return _empty("grassmann", inputs, v, w)
    verdict = grassmannian_toric(rs, Jset, v, w)
    audit = grassmannian_audit(rs, Jset, v, w)
    if audit != verdict.toric:
        raise StructuralError(f"Grassmannian verdict {verdict.toric} but root audit {audit}")
    result = dict(verdict.to_json(), audit=audit)
    text = [f"toric: {str(verdict.toric).lower()}",
            f"coxeter factor: {result['coxeter_factor'] if verdict.coxeter_factor else 'none'}"]
    return RunReport("grassmann", inputs, result, text=text)


def cmd_enumerate(config: Config, max_gap: int | None = None) -> RunReport:
    rs = config.rs
    max_gap = rs.rank if max_gap is None else max_gap
    verdicts = enumerate_toric_pairs(rs, max_gap, config.budget, config.paranoid, config.strict)
    rows = [t.to_json() for t in verdicts]
    text = [f"{r['v'] or 'e'}\t{r['w'] or 'e'}\t{r['gap']}\t{'toric' if r['by_roots'] else '-'}"
            for r in rows]
    return RunReport("enumerate", {"root_system": rs.name, "max_gap": max_gap},
                     {"verdicts": rows, "toric": sum(r["by_roots"] for r in rows)}, text=text)


# -- argument parsing -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="richlat", description="Toric Richardson varieties in finite Weyl groups.")
    p.add_argument("--type", dest="root_system", required=True, help='root system, e.g. "A4"')
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max group elements")
    p.add_argument("--cache", dest="cache_dir", help="directory for the polynomial cache")
    p.add_argument("--paranoid", action="store_true", help="explicit isomorphism checks")
    p.add_argument("--output", choices=("text", "json", "dot"), default="text")
    p.add_argument("--strict", action="store_true",
                   help="treat any disagreement inside the rank bound as fatal")
    p.add_argument("--timing", action="store_true", help="report wall-clock time")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("classify", "points"):
        s = sub.add_parser(name)
        s.add_argument("v")
        s.add_argument("w")
    s = sub.add_parser("rpoly")
    s.add_argument("u")
    s.add_argument("v")
    s.add_argument("--policy", choices=("min", "max"), default="min")
    s = sub.add_parser("kl")
    s.add_argument("u")
    s.add_argument("v")
    s.add_argument("--inverse", action="store_true")
    for name in ("verify", "enumerate"):
        s = sub.add_parser(name)
        s.add_argument("--max-gap", type=int)
    s = sub.add_parser("export")
    s.add_argument("v")
    s.add_argument("w")
    s.add_argument("--format", choices=("dot", "json"))
    s.add_argument("-o", "--out")
    s = sub.add_parser("grassmann")
    s.add_argument("v")
    s.add_argument("w")
    s.add_argument("--J", help='simple roots in the parabolic, e.g. "1,3"')
    s.add_argument("--omit", type=int, help="maximal parabolic leaving out this simple root")
    return p


def run(config: Config, args) -> RunReport:
    c = args.command
    if c == "classify":
        return cmd_classify(config, args.v, args.w)
    if c == "rpoly":
        return cmd_rpoly(config, args.u, args.v, args.policy)
    if c == "kl":
        return cmd_kl(config, args.u, args.v, args.inverse)
    if c == "points":
        return cmd_points(config, args.v, args.w)
    if c == "verify":
        return cmd_verify(config, args.max_gap)
    if c == "enumerate":
        return cmd_enumerate(config, args.max_gap)
    if c == "export":
        fmt = args.format or ("json" if config.output == "json" else "dot")
        return cmd_export(config, args.v, args.w, fmt, args.out)
    if c == "grassmann":
        return cmd_grassmann(config, args.v, args.w, args.J, args.omit)
    raise ConfigurationError(f"unknown command {c!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    previous = bruhat_poset.PARANOID
    try:
        config = Config(args.root_system, args.budget, args.cache_dir, args.output,
                        args.paranoid, args.strict)
        if config.output == "dot" and args.command != "export":
            raise ConfigurationError("--output dot only applies to export")
        bruhat_poset.set_paranoid(config.paranoid)
        if config.cache_dir:
            kl_polynomials.load_cache(config.cache_dir, config.rs)
        start = time.perf_counter()
        report = run(config, args)
        report.timing = {"seconds": round(time.perf_counter() - start, 6)}
        report.cache = kl_polynomials.cache_stats()
        if config.cache_dir:
            kl_polynomials.save_cache(config.cache_dir, config.rs)
    except (ConfigurationError, BudgetExceeded, PreconditionError, UnsupportedTypeError) as exc:
        print(f"richlat: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except EmptyIntervalError as exc:
        print(f"empty: {exc}")
        return EXIT_OK
    except StructuralError as exc:
        print(f"richlat: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (RichlatError, ValueError) as exc:
        print(f"richlat: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    finally:
        bruhat_poset.set_paranoid(previous)
    if config.output == "json":
        sys.stdout.write(report.to_json(args.timing))
    elif config.output == "dot" or args.command == "export" and "body" in report.result:
        sys.stdout.write(report.result.get("body", report.to_text(args.timing)))
    else:
        sys.stdout.write(report.to_text(args.timing))
    return EXIT_INVARIANT if report.violations else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
