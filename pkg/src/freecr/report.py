"""Pipeline orchestration and deterministic result documents."""

import json
from dataclasses import dataclass

from .crverify import verify
from .errors import FreeCRError
from .exactfield import format_scalar
from .invariant import (
    assemble_P, flatness_verdict, independent_entries, solve_normalization, structure_functions,
)

CONVENTIONS = {
    "sign_rule": "dθ^a(X_b, X_c) = -θ^a([X_b, X_c])",
    "levi_fields": "X_[i jb] = -[X_i, X_jb], stored for every ordered pair (i, j)",
    "chart": "w_kk is one purely imaginary coordinate, so [Z_k, Zb_k] = 2 d/dw_kk",
    "indices": "1-based; a trailing b marks a conjugate index; target indices come first",
    "nijenhuis": "N^{kb}_{ij} is the X_kb coefficient of [X_i, X_j]; N(X_i, X_j) = 4 N^{kb}_{ij} X_kb",
}


def label(family, key):
    k = [x + 1 for x in key]
    if family == "f_r_ijk":
        r, i, j, l = k
        return f"f^{r}_{{{i},[{j}{l}b]}}"
    if family == "f_r_bijk":
        r, i, j, l = k
        return f"f^{r}_{{{i}b,[{j}{l}b]}}"
    if family == "f_r_ijkl":
        r, i, j, a, b = k
        return f"f^{r}_{{[{i}{j}b],[{a}{b}b]}}"
    if family == "f_rs_ijk":
        r, s, i, j, l = k
        return f"f^{{[{r}{s}b]}}_{{{i},[{j}{l}b]}}"
    if family == "f_rs_bijk":
        r, s, i, j, l = k
        return f"f^{{[{r}{s}b]}}_{{{i}b,[{j}{l}b]}}"
    if family == "f_rs_ijkl":
        r, s, i, j, a, b = k
        return f"f^{{[{r}{s}b]}}_{{[{i}{j}b],[{a}{b}b]}}"
    if family == "P":
        i, j, r, s, t = k
        return f"P^{{[{i}{j}b]}}_{{{r}{s},{t}b}}"
    if family == "A":
        i, a, b = k
        return f"A^{i}_{{{a}{b}}}"
    if family == "B":
        i, a, b = k
        return f"B^{i}_{{{a}b,{b}}}"
    if family == "C":
        i, a, b = k
        return f"C^{i}_{{{a},{b}b}}"
    if family == "N":
        i, j, l = k
        return f"N^{{{l}b}}_{{{i}{j}}}"
    raise KeyError(family)


def _entry(family, key, value):
    return {"label": label(family, key), "index": [x + 1 for x in key], "value": format_scalar(value)}


def _entries(family, d):
    return [_entry(family, k, v) for k, v in sorted(d.items())]


@dataclass(frozen=True)
class ResultDocument:
    data: dict

    @property
    def verdict(self):
        return self.data["verdict"]

    def to_json(self):
        return json.dumps(self.data, indent=2, ensure_ascii=False) + "\n"

    def to_text(self):
        return render_text(self.data)


def _cr_section(rep):
    out = {
        "nondegenerate": rep.nondegenerate,
        "totally_real": rep.totally_real,
        "integrable": rep.integrable,
    }
    if rep.nijenhuis is not None:
        out["nijenhuis"] = [_entry("N", tuple(x - 1 for x in k), v) for k, v in sorted(rep.nijenhuis.items())]
    out["witnesses"] = [
        {"check": w.check, "pair": list(w.pair),
         "residual": w.residual if isinstance(w.residual, str) else _field_text(w.residual)}
        for w in rep.witnesses
    ]
    return out


def _field_text(V):
    items = sorted(V.components.items(), key=lambda kv: V.chart.index(kv[0]))
    return " + ".join(f"({format_scalar(c)})*d/d{a}" for a, c in items) or "0"


def check_document(doc):
    """CR checks only; returns ``(ResultDocument, passed)``."""
    rep = verify(doc.vector_fields(), doc.base_point_map())
    data = {
        "command": "check",
        "input_sha256": doc.digest(),
        "n": doc.n,
        "cr": _cr_section(rep),
    }
    # at n = 2 a non-integrable (Nijenhuis) part is allowed
    ok = rep.nondegenerate and rep.totally_real and (doc.n == 2 or rep.integrable)
    data["verdict"] = "accepted" if ok else "rejected"
    data["conventions"] = CONVENTIONS
    return ResultDocument(data), ok


def run_pipeline(doc):
    """Frame -> CR checks -> structure functions -> normalization -> P -> verdict.

    Failures are reported inside the document with verdict ``rejected``.
    """
    data = {"command": "invariant", "input_sha256": doc.digest(), "n": doc.n}
    rep = verify(doc.vector_fields(), doc.base_point_map())
    data["cr"] = _cr_section(rep)

    def reject(check, reason):
        data["verdict"] = "rejected"
        data["rejected_by"] = check
        data["reason"] = reason
        data["conventions"] = CONVENTIONS
        return ResultDocument(data)

    if not rep.nondegenerate:
        return reject("nondegenerate", rep.witnesses[0].residual)
    if not rep.totally_real:
        return reject("totally_real", f"Levi component in the bracket of pair {list(rep.witnesses[0].pair)}")
    if doc.n > 2 and not rep.integrable:
        w = [w for w in rep.witnesses if w.check == "integrable"][0]
        return reject("integrable", f"[X_i, X_j] leaves span(X_k) for pair {list(w.pair)}")
    try:
        sf = structure_functions(rep.frame)
        coeffs = solve_normalization(sf)
        P = assemble_P(sf, coeffs)
    except FreeCRError as e:
        return reject(type(e).__name__, str(e))
    verdict = flatness_verdict(P, rep.nijenhuis if doc.n == 2 else None)

    data["structure_functions"] = [_entry(name, k, v) for name, k, v in sf.entries()]
    data["structure_functions_independent"] = [_entry(name, k, v) for name, k, v in independent_entries(sf)]
    data["A"] = _entries("A", coeffs.A)
    data["B"] = _entries("B", coeffs.B)
    data["C"] = _entries("C", coeffs.C)
    data["P"] = _entries("P", P.P)
    data["P_independent"] = [_entry("P", k, v) for k, v in P.independent_entries()]
    data["verdict"] = verdict.label
    conv = dict(CONVENTIONS)
    conv["gauge"] = "; ".join(coeffs.gauge)
    conv["c_relation"] = coeffs.c_variant
    data["conventions"] = conv
    return ResultDocument(data)


def render_text(data):
    """Key/value lines plus one table section per list."""
    out = []
    for key, value in data.items():
        if isinstance(value, dict):
            out.append(f"[{key}]")
            for k, v in value.items():
                if isinstance(v, list) and v and not any(isinstance(x, dict) for x in v):
                    out.append(f"{k}: {' '.join(_scalar(x) for x in v)}")
                elif isinstance(v, list):
                    out.append(f"{k}: {len(v)} entries")
                    out += [f"  {_row(x)}" for x in v]
                else:
                    out.append(f"{k}: {_scalar(v)}")
            out.append("")
        elif isinstance(value, list):
            out.append(f"[{key}] {len(value)} entries")
            out += [f"  {_row(x)}" for x in value]
            out.append("")
        else:
            out.append(f"{key}: {_scalar(value)}")
    while out and not out[-1]:
        out.pop()
    return "\n".join(out) + "\n"


def _scalar(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _row(x):
    if isinstance(x, dict) and "label" in x:
        return f"{x['label']} = {x['value']}"
    if isinstance(x, dict):
        return ", ".join(f"{k}={_scalar(v)}" for k, v in x.items())
    return str(x)
