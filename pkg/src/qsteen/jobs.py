"""Job configuration, report assembly and export.

A report is a plain JSON-compatible dict, so ``parse(export(r, "json")) == r``
holds by construction.  Every number in it is an exact integer.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from . import __version__
from .equivariant import (
    NonMember,
    QuotientDescriptor,
    kernel_element,
    member,
    multiplication_diagnostic,
    ps,
)
from .errors import ConfigError
from .loop_space import LoopRingElement, nonvanishing, ps_prefix
from .quantum_ring import QHElement, RingDescriptor, ker_r_power, sh_quotient
from .quantum_steenrod import EqElement, qs_power, sorted_terms
from .req_solver import req_constraint_solver

SPACES = ("oline", "tstar-sphere")
FORMATS = ("json", "markdown")
SECTIONS = ("kernel", "qs", "ps", "membership", "solver", "loop")


@dataclass(frozen=True)
class JobConfig:
    space: str = "oline"
    m: int | None = None
    k: int | None = None
    n: int | None = None
    truncation_order: int = 32
    output_format: str = "json"
    cache_path: str | None = None
    imax: int = 5
    sections: tuple | None = None

    def validate(self):
        errors = {}
        if self.space not in SPACES:
            errors["space"] = f"must be one of {', '.join(SPACES)}"
        elif self.space == "oline":
            if self.m is None or self.m < 1:
                errors["m"] = "oline needs m >= 1"
            k = 1 if self.k is None else self.k
            if self.m is not None and not 1 <= k <= max(self.m, 1):
                errors["k"] = "oline needs 1 <= k <= m"
            if self.n is not None:
                errors["n"] = "n applies only to tstar-sphere"
        else:
            if self.n is None or self.n < 2:
                errors["n"] = "tstar-sphere needs n >= 2"
            if self.m is not None:
                errors["m"] = "m applies only to oline"
            if self.k is not None:
                errors["k"] = "k applies only to oline"
            if self.imax < 0:
                errors["imax"] = "must be >= 0"
        if self.truncation_order < 0:
            errors["truncation_order"] = "must be >= 0"
        if self.output_format not in FORMATS:
            errors["output_format"] = f"must be one of {', '.join(FORMATS)}"
        if self.sections is not None:
            bad = [s for s in self.sections if s not in SECTIONS]
            if bad:
                errors["sections"] = f"unknown sections {bad}"
        if errors:
            raise ConfigError(errors)
        return self

    def key_fields(self) -> dict:
        """Fields that determine the output (everything but the cache location)."""
        d = asdict(self)
        d.pop("cache_path")
        if d["sections"] is not None:
            d["sections"] = list(d["sections"])
        d["engine_version"] = __version__
        return d


# -- element encodings -------------------------------------------------------

def qh_to_json(f: QHElement) -> dict:
    return {"ring": f.ring.to_json(), "terms": [{"x": a, "T": e} for a, e in sorted(f.terms)]}


def eq_to_json(f: EqElement) -> dict:
    out = {
        "ring": f.ring.to_json(),
        "terms": [{"x": a, "T": e, "h": c} for c, a, e in sorted_terms(f)],
    }
    if f.truncation_order is not None:
        out["through_h"] = f.truncation_order
    return out


def eq_from_json(data: dict) -> EqElement:
    ring = RingDescriptor(**data["ring"])
    terms = [(t.get("h", 0), t.get("x", 0), t.get("T", 0)) for t in data.get("terms", [])]
    return EqElement.from_terms(ring, terms, data.get("through_h"))


def loop_to_json(f: LoopRingElement) -> dict:
    return {"terms": [{"x": a, "y": b} for a, b in sorted(f.terms)]}


# -- job dispatch ------------------------------------------------------------

def _want(cfg, name):
    return cfg.sections is None or name in cfg.sections


def _x_label(a):
    return "1" if a == 0 else ("x" if a == 1 else f"x^{a}")


def _oline(cfg: JobConfig) -> dict:
    ring = RingDescriptor(cfg.m, 1 if cfg.k is None else cfg.k)
    report = {
        "space": "oline",
        "ring": ring.to_json(),
        "T_degree": ring.T_degree,
        "truncation_order": cfg.truncation_order,
    }
    if _want(cfg, "kernel"):
        gen, stable = ker_r_power(ring)
        report["kernel"] = {
            "generator": qh_to_json(gen),
            "stable_exponent": stable,
            "sh_basis": [str(b) for b in sh_quotient(ring).basis],
        }
    if ring.k != 1:
        report["notes"] = ["quantum Steenrod closed forms are available only for k = 1"]
        return report
    if _want(cfg, "qs"):
        report["qs"] = [
            {"input": _x_label(i), "value": eq_to_json(qs_power(i, ring))}
            for i in range(ring.m + 2)
        ]
    q = None
    if any(_want(cfg, s) for s in ("ps", "membership")):
        q = QuotientDescriptor(ring, cfg.truncation_order)
    if _want(cfg, "ps"):
        rows = []
        for a in range(ring.m):
            rows.append({"input": _x_label(a), "value": eq_to_json(ps(QHElement.x_power(ring, a), q))})
        rows.append({"input": "T", "value": eq_to_json(ps(QHElement(ring, [(0, 1)]), q))})
        report["ps"] = rows
    if _want(cfg, "membership"):
        x = QHElement.x_power(ring, 1)
        probes = [
            (f"QS({kernel_element(ring)})", q.generator),
            ("x", EqElement.constant(x)),
            ("x * QS(x^m + T)", q.generator * x),
        ]
        rows = []
        for label, f in probes:
            rows.append({"element": label, **verdict_to_json(member(f, q))})
        report["membership"] = rows
        report["multiplication_diagnostic"] = eq_to_json(multiplication_diagnostic(q))
    if _want(cfg, "solver"):
        report["solver"] = solver_to_json(req_constraint_solver(ring))
    return report


def verdict_to_json(v) -> dict:
    if isinstance(v, NonMember):
        return {"verdict": "NonMember", "h_degree": v.h_degree}
    return {"verdict": "ZeroThroughOrder", "order": v.order}


def solver_to_json(rep) -> dict:
    return {
        "n_unknowns": rep.n_unknowns,
        "n_equations": rep.n_equations,
        "rank": rep.rank,
        "entries": [
            {
                "i": e.i,
                "a": e.a,
                "status": e.status,
                "value": None if e.value is None else qh_to_json(e.value),
                "free": [list(t) for t in e.free],
            }
            for e in rep.entries
        ],
    }


def _tstar(cfg: JobConfig) -> dict:
    n = cfg.n
    classes = [LoopRingElement.monomial(n, 0, i) for i in range(cfg.imax + 1)]
    classes += [LoopRingElement.monomial(n, 1, i) for i in range(cfg.imax + 1)]
    rows = []
    for a in classes:
        pre = ps_prefix(a)
        rows.append({
            "input": str(a),
            "known": [loop_to_json(pre.known[r]) for r in range(pre.bound)],
            "bound": pre.bound,
            "tail": pre.tail.value,
            "verdict": nonvanishing(a).value,
        })
    return {"space": "tstar-sphere", "n": n, "imax": cfg.imax, "prefixes": rows}


def run_job(cfg: JobConfig) -> dict:
    cfg.validate()
    if cfg.space == "oline":
        return _oline(cfg)
    return _tstar(cfg)


# -- export ------------------------------------------------------------------

def _fmt_mono(parts):
    out = []
    for name, e in parts:
        if e == 0:
            continue
        out.append(name if e == 1 else f"{name}^{e}")
    return " ".join(out) or "1"


def format_terms(data: dict) -> str:
    terms = data.get("terms", [])
    if not terms:
        return "0"
    # h, then x, then T (or x, then y for loop classes)
    keyed = sorted(terms, key=lambda t: (t.get("h", 0), t.get("x", 0), t.get("T", 0), t.get("y", 0)))
    body = " + ".join(
        _fmt_mono([("x", t.get("x", 0)), ("y", t.get("y", 0)), ("T", t.get("T", 0)), ("h", t.get("h", 0))])
        for t in keyed
    )
    if "through_h" in data:
        body += f" + O(h^{data['through_h'] + 1})"
    return body


def _table(header, rows):
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for r in rows:
        lines.append("| " + " | ".join(str(c) for c in r) + " |")
    return "\n".join(lines)


def to_markdown(report: dict) -> str:
    if not report:
        return ""
    blocks = []
    if report.get("space") == "oline":
        ring = report["ring"]
        blocks.append(f"# Tot(O(-{ring['k']}) -> CP^{ring['m']}), |T| = {report['T_degree']}")
    if "kernel" in report:
        k = report["kernel"]
        blocks.append(_table(
            ["ker generator", "stable exponent", "SH basis"],
            [[format_terms(k["generator"]), k["stable_exponent"], ", ".join(k["sh_basis"])]],
        ))
    for note in report.get("notes", []):
        blocks.append(f"_{note}_")
    if "qs" in report:
        blocks.append("## QS\n\n" + _table(
            ["a", "QS(a)"], [[r["input"], format_terms(r["value"])] for r in report["qs"]]
        ))
    if "ps" in report:
        blocks.append("## PS (normal form)\n\n" + _table(
            ["a", "PS(a)"], [[r["input"], format_terms(r["value"])] for r in report["ps"]]
        ))
    if "membership" in report:
        rows = []
        for r in report["membership"]:
            detail = r.get("order", r.get("h_degree"))
            rows.append([r["element"], r["verdict"], detail])
        blocks.append("## Membership in QS(x^m + T) Lambda[[h]]\n\n" + _table(
            ["element", "verdict", "order / first h-degree"], rows
        ))
    if "multiplication_diagnostic" in report:
        blocks.append("normal form of x * QS(x^m + T): "
                      + format_terms(report["multiplication_diagnostic"]))
    if "solver" in report:
        blocks.append("## r_eq entries\n\n" + solver_markdown(report["solver"]))
    if "prefixes" in report:
        n = report["n"]
        header = ["class"] + [f"h^{r}" for r in range(n + 1)] + ["tail", "verdict"]
        rows = []
        for r in report["prefixes"]:
            cells = [format_terms(v) for v in r["known"]]
            cells += [""] * (n + 1 - len(cells))
            rows.append([r["input"], *cells, r["tail"], r["verdict"]])
        blocks.append(f"# PS prefixes on SH*(T*S^{n})\n\n" + _table(header, rows))
    return "\n\n".join(blocks) + "\n"


def solver_markdown(solver: dict) -> str:
    rows = []
    for e in solver["entries"]:
        val = "?" if e["value"] is None else format_terms(e["value"])
        rows.append([f"r_{e['i']}(x^{e['a']})", e["status"], val])
    return _table(["entry", "status", "value"], rows)


def export(report: dict, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report, sort_keys=True, indent=2) + "\n").encode() if report else b"{}"
    if fmt == "markdown":
        return to_markdown(report).encode()
    raise ConfigError({"output_format": f"unknown format {fmt!r}"})


def parse(data: bytes) -> dict:
    return json.loads(data.decode())
