"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 verification failure, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, TextIO

from .errors import (
    DivisibilityError,
    InternalError,
    ParseError,
    PreconditionError,
    VerificationError,
)
from .invariants import (
    block_descriptor,
    block_support,
    blocks_of,
    has_complexity_one,
    is_young_projective,
    perm_module_complexity,
    poincare_series,
    poincare_spec,
    specht_relative_vertex_upper,
    specht_vertex_bounds,
    young_module_complexity,
)
from .partitions import (
    Composition,
    Partition,
    enumerate_partitions,
    hook_lengths,
    l_adic_expansion,
    l_core,
    l_weight,
    parse_parts,
    rho,
    to_abacus,
)
from .qpoly import cyclotomic_factorization, graded_dim_specht, specht_dim
from .typebd import (
    Bipartition,
    QSpec,
    f_B_invertible,
    f_D_invertible,
    morita_component,
    typeB_young_complexity,
    typeBD_trivial_complexity,
    typeD_clifford_complexity,
)
from .verify import KNOWN_FAULTS, Failure, Report, verify_suite

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3, 4

CONFIG_ENV = "HECKE_CONFIG"
FORMATS = ("json", "csv", "table")

# subcommand -> (kind of positional input, needs l)
COMMANDS: dict[str, tuple[str, bool]] = {
    "core": ("partition", True),
    "weight": ("partition", True),
    "adic": ("partition", True),
    "hooks": ("partition", False),
    "dimq": ("partition", False),
    "factor": ("partition", False),
    "dim": ("partition", False),
    "young": ("partition", True),
    "perm": ("composition", True),
    "block": ("partition", True),
    "blocks": ("integer", True),
    "vertex": ("partition", True),
    "poincare": ("composition", True),
    "typebd": ("bipartition", True),
    "enumerate": ("integer", False),
    "verify": ("none", False),
}
SEMISIMPLE_COMMANDS = frozenset({"young", "perm", "block", "blocks"})


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class Request:
    command: str
    inputs: list[str] = field(default_factory=list)
    ls: list[int] = field(default_factory=list)
    fmt: str = "table"
    degree: int = 12
    beads: Optional[int] = None
    max_n: int = 10
    file: Optional[str] = None
    workers: int = 1
    semisimple: bool = False
    kind: str = "B"
    Q: Optional[QSpec] = None
    faults: frozenset[str] = frozenset()
    verbose: bool = False


def default_config_path() -> Path:
    base = os.environ.get("XDG_CONFIG_HOME") or os.path.join(os.path.expanduser("~"), ".config")
    return Path(base) / "hecke" / "config"


def load_config(env: Optional[dict[str, str]] = None) -> dict[str, str]:
    """Read ``key=value`` lines from $HECKE_CONFIG or the default path.

    Recognised keys are ``l`` and ``format``; a missing file is an empty
    config.
    """
    env = os.environ if env is None else env
    path = Path(env[CONFIG_ENV]) if env.get(CONFIG_ENV) else default_config_path()
    if not path.is_file():
        return {}
    config: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in ("l", "format"):
            raise UsageError(f"{path}:{lineno}: expected 'l=<int>' or 'format=<json|csv|table>'")
        config[key] = value
    if "format" in config and config["format"] not in FORMATS:
        raise UsageError(f"{path}: unknown format {config['format']!r}")
    return config


def _parse_ls(text: str) -> list[int]:
    try:
        ls = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--l expects an integer or comma list, got {text!r}") from None
    if not ls or any(l < 1 for l in ls):
        raise UsageError(f"--l values must be positive integers, got {text!r}")
    return ls


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--l", dest="l", metavar="L", help="root-of-unity order, or comma list")
    fmt = common.add_mutually_exclusive_group()
    for name in FORMATS:
        fmt.add_argument(f"--{name}", dest="fmt", action="store_const", const=name)
    common.add_argument("--file", help="read one input per line from this file")
    common.add_argument("--workers", type=int, default=1, help="worker processes for batch input")

    parser = _Parser(prog="hecke", description="Invariants of Hecke algebras at a root of unity.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    for name, (kind, _) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common])
        if kind != "none":
            p.add_argument("inputs", nargs="*", metavar=kind.upper())
        if name in ("core", "weight"):
            p.add_argument("--beads", type=int)
        if name == "poincare":
            p.add_argument("--degree", type=int, default=12)
        if name == "verify":
            p.add_argument("--max-n", dest="max_n", type=int, default=10)
            p.add_argument("--verbose", action="store_true",
                           help="also print notes, such as clamped vertex lower bounds")
            p.add_argument("--inject-fault", dest="faults", action="append", default=[],
                           help=argparse.SUPPRESS)
        if name == "typebd":
            p.add_argument("--type", dest="kind", choices=("B", "D", "b", "d"), default="B")
            p.add_argument("--Q", dest="Q", help="parameter Q as +q^m or -q^m (type B)")
        if name in SEMISIMPLE_COMMANDS:
            p.add_argument("--semisimple", action="store_true",
                           help="q not a root of unity: every complexity is 0")
    return parser


def parse_args(argv: Sequence[str], env: Optional[dict[str, str]] = None) -> Request:
    config = load_config(env)
    ns = _build_parser().parse_args(list(argv))
    req = Request(command=ns.command)
    req.inputs = list(getattr(ns, "inputs", []) or [])
    req.fmt = ns.fmt or config.get("format", "table")
    req.file = ns.file
    if ns.workers < 1:
        raise UsageError("--workers must be >= 1")
    req.workers = ns.workers
    l_text = ns.l if ns.l is not None else config.get("l")
    needs_l = COMMANDS[ns.command][1]
    if l_text is not None:
        req.ls = _parse_ls(l_text)
    elif needs_l and not getattr(ns, "semisimple", False):
        raise UsageError(f"{ns.command}: --l is required (or set l= in the config file)")
    req.beads = getattr(ns, "beads", None)
    req.degree = getattr(ns, "degree", 12)
    if req.degree < 0:
        raise UsageError("--degree must be nonnegative")
    req.max_n = getattr(ns, "max_n", 10)
    if req.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    req.semisimple = getattr(ns, "semisimple", False)
    req.verbose = getattr(ns, "verbose", False)
    req.kind = getattr(ns, "kind", "B").upper()
    q_text = getattr(ns, "Q", None)
    if q_text is not None:
        try:
            req.Q = QSpec.parse(q_text)
        except ParseError as exc:
            raise UsageError(str(exc)) from None
    faults = frozenset(getattr(ns, "faults", []))
    if faults - KNOWN_FAULTS:
        raise UsageError(f"unknown fault {sorted(faults - KNOWN_FAULTS)}")
    req.faults = faults
    if req.command == "verify" and not req.ls:
        req.ls = [2, 3]
    return req


def _plist(p: Partition) -> list[int]:
    return list(p.parts)


def _support_json(datum: Any, semisimple: bool) -> dict[str, Any]:
    out = datum.to_json()
    if semisimple:
        out["l"] = None
    return out


def _eval_partition(command: str, lam: Partition, l: Optional[int], req: Request) -> list[dict[str, Any]]:
    if command == "core":
        rec: dict[str, Any] = {"core": _plist(l_core(lam, l, req.beads)), "weight": l_weight(lam, l, req.beads)}
        if req.beads is not None:
            abacus = to_abacus(lam, l, req.beads)
            rec["beads"] = list(abacus.beads)
            rec["settled"] = list(abacus.slide()[0].beads)
        return [rec]
    if command == "weight":
        return [{"weight": l_weight(lam, l, req.beads)}]
    if command == "adic":
        exp = l_adic_expansion(lam, l)
        return [{"lambda0": _plist(exp.lambda0), "lambda1": _plist(exp.lambda1), "rho": _plist(rho(lam, l))}]
    if command == "hooks":
        return [{"hooks": sorted(hook_lengths(lam), reverse=True)}]
    if command == "dimq":
        poly = graded_dim_specht(lam)
        return [{
            "poly": poly.to_json(),
            "factorization": cyclotomic_factorization(lam).to_json(),
            "dim": poly(1),
        }]
    if command == "factor":
        f = cyclotomic_factorization(lam)
        return [{"factorization": f.to_json(), "text": str(f)}]
    if command == "dim":
        sd = specht_dim(lam)
        return [{"dim": sd.value, "primes": {str(p): e for p, e in sd.prime_exponents.items()}}]
    if command == "young":
        c, rho_part, datum = young_module_complexity(lam, l)
        return [{
            "complexity": c,
            "rho": _plist(rho_part),
            "support": _support_json(datum, req.semisimple),
            "projective": is_young_projective(lam, l),
            "complexity_one": has_complexity_one(lam, l),
        }]
    if command == "block":
        desc = block_descriptor(lam, l)
        rec = desc.to_json()
        rec["bound"] = desc.weight
        rec["support"] = _support_json(block_support(lam, l), req.semisimple)
        return [rec]
    if command == "vertex":
        rec = specht_vertex_bounds(lam, l).to_json()
        rec["upper"] = _plist(specht_relative_vertex_upper(lam, l))
        return [rec]
    raise AssertionError(command)


def _evaluate(task: tuple[str, str, Optional[int], Request]) -> list[dict[str, Any]]:
    command, text, l, req = task
    kind = COMMANDS[command][0]
    if kind == "partition":
        lam = _parse_partition(text)
        if req.semisimple:
            l = max(lam.size, 1) + 1
        return _eval_partition(command, lam, l, req)
    if kind == "composition":
        comp = Composition(parse_parts(text))
        if req.semisimple:
            l = max(comp.size, 1) + 1
        if command == "perm":
            c, datum = perm_module_complexity(comp, l)
            return [{"complexity": c, "support": _support_json(datum, req.semisimple)}]
        spec = poincare_spec(comp, l)
        rec = spec.to_json()
        rec["coefficients"] = poincare_series(comp, l, req.degree)
        return [rec]
    if kind == "integer":
        n = _parse_int(text)
        if command == "enumerate":
            return [{"partition": _plist(p)} for p in enumerate_partitions(n)]
        if req.semisimple:
            l = max(n, 1) + 1
        return [
            {
                "core": _plist(b.descriptor.core),
                "weight": b.descriptor.weight,
                "rho_max": _plist(b.descriptor.rho_max),
                "members": [_plist(m) for m in b.members],
                "young_complexities": list(b.young_complexities),
            }
            for b in blocks_of(n, l)
        ]
    if kind == "bipartition":
        try:
            b = Bipartition.from_string(text)
        except PreconditionError as exc:
            raise ParseError(str(exc)) from None
        return [_eval_typebd(b, l, req)]
    raise AssertionError(kind)


def _parse_partition(text: str) -> Partition:
    try:
        return Partition(parse_parts(text))
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def _parse_int(text: str) -> int:
    try:
        n = int(text.strip())
    except ValueError:
        raise ParseError(f"expected a nonnegative integer, got {text!r}") from None
    if n < 0:
        raise ParseError(f"expected a nonnegative integer, got {text!r}")
    return n


def _eval_typebd(b: Bipartition, l: int, req: Request) -> dict[str, Any]:
    n = b.n
    if n < 1:
        raise PreconditionError("type B/D needs n >= 1")
    rec: dict[str, Any] = {"type": req.kind, "n": n, "component": morita_component(b)}
    if req.kind == "B":
        if req.Q is None:
            raise PreconditionError("type B needs --Q")
        rec["Q"] = str(req.Q)
        rec["invertible"] = f_B_invertible(n, l, req.Q)
        rec["complexity"] = typeB_young_complexity(b, l, req.Q)
        rec["trivial_complexity"] = typeBD_trivial_complexity(n, l, "B", req.Q)
    else:
        rec["invertible"] = f_D_invertible(n, l)
        rec["trivial_complexity"] = typeBD_trivial_complexity(n, l, "D")
        if n % 2 == 0 and b.left.size == b.right.size:
            rec["complexity"] = typeD_clifford_complexity(b.left, b.right, l)
        else:
            rec["complexity"] = young_module_complexity(b.left, l)[0] + young_module_complexity(b.right, l)[0]
    return rec


def _read_lines(stream: Iterable[str]) -> list[str]:
    out = []
    for line in stream:
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def run(req: Request, stdin: Optional[TextIO] = None) -> Report:
    """Execute a request and collect its records in input order."""
    if req.command == "verify":
        return verify_suite(req.max_n, req.ls, req.faults, req.workers)
    if req.semisimple and req.command not in SEMISIMPLE_COMMANDS:
        raise PreconditionError(f"--semisimple is not supported by {req.command}")
    inputs = list(req.inputs)
    if req.file is not None:
        try:
            with open(req.file, encoding="utf-8") as fh:
                inputs.extend(_read_lines(fh))
        except OSError as exc:
            raise UsageError(f"cannot read {req.file}: {exc.strerror}") from None
    if not req.inputs and req.file is None:
        inputs = _read_lines(stdin if stdin is not None else sys.stdin)
    ls: list[Optional[int]] = list(req.ls) if req.ls else [None]
    tasks = [(req.command, text, l, req) for text in inputs for l in ls]
    if req.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=req.workers) as pool:
            chunks = list(pool.map(_evaluate, tasks))
    else:
        chunks = [_evaluate(t) for t in tasks]
    return Report(records=[rec for chunk in chunks for rec in chunk])


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (int, str)):
        return str(value)
    return json.dumps(value, separators=(",", ":"))


def _columns(records: list[dict[str, Any]]) -> list[str]:
    cols: list[str] = []
    for rec in records:
        for key in rec:
            if key not in cols:
                cols.append(key)
    return cols


def _table_cell(value: Any) -> str:
    if isinstance(value, list):
        if value and all(isinstance(v, list) for v in value):
            return " ".join("(" + ",".join(map(str, v)) + ")" for v in value)
        return ",".join(map(str, value))
    if isinstance(value, dict):
        return " ".join(f"{k}:{_table_cell(v)}" for k, v in value.items())
    return _cell(value)


def render(records: list[dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(rec, separators=(",", ":")) + "\n" for rec in records)
    cols = _columns(records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if cols:
            writer.writerow(cols)
        for rec in records:
            writer.writerow([_cell(rec.get(c)) for c in cols])
        return buf.getvalue()
    rows = [cols] + [[_table_cell(rec.get(c)) for c in cols] for rec in records]
    if not cols:
        return ""
    widths = [max(len(r[i]) for r in rows) for i in range(len(cols))]
    return "".join(
        "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() + "\n" for r in rows
    )


def _render_failures(failures: list[Failure]) -> str:
    seen: set[str] = set()
    lines = []
    for f in failures:
        if f.rule in seen:
            continue
        seen.add(f.rule)
        lines.append(f"FAIL {f.rule}: {f.input}: expected {f.expected}, got {f.got}\n")
    return "".join(lines)


def main(argv: Optional[Sequence[str]] = None, stdin: Optional[TextIO] = None,
         stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None,
         env: Optional[dict[str, str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    handlers: list[tuple[type, int]] = [
        (UsageError, EXIT_USAGE),
        (ParseError, EXIT_USAGE),
        (PreconditionError, EXIT_PRECONDITION),
        (VerificationError, EXIT_VERIFY),
        (InternalError, EXIT_INTERNAL),
        (DivisibilityError, EXIT_INTERNAL),
    ]
    try:
        req = parse_args(argv, env)
        report = run(req, stdin)
    except tuple(cls for cls, _ in handlers) as exc:
        code = next(c for cls, c in handlers if isinstance(exc, cls))
        print(f"error: {exc}", file=stderr)
        return code
    stdout.write(render(report.records, req.fmt))
    if req.verbose:
        stderr.write("".join(f"note: {n}\n" for n in report.notes))
    if report.failures:
        stderr.write(_render_failures(report.failures))
    return report.exit_code


def entry_point() -> None:
    sys.exit(main())
