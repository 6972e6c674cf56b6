"""Report assembly and consistency checking for graph corpora.

Builds one flat report per graph (spectral quantities, rigidity verdict,
threshold-condition flags), serialises reports deterministically, and
drives the sweep jobs exposed by the command line.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional, Sequence

from .graphcore import (
    Graph,
    Graph6Error,
    complete_split_graph,
    linked_cliques,
    parse_graph6,
    vertex_connectivity,
    write_graph6,
)
from .oracle import (
    numeric_rank,
    packing_condition_holds,
    packing_violation_search,
    random_placement,
)
from .rigidity import (
    canonical_form,
    enumerate_minimally_rigid,
    is_globally_rigid,
    is_redundantly_rigid,
    pebble_rank,
    rigidity_verdict,
)
from .spectral import (
    algebraic_connectivity,
    complete_split_rho,
    hong_bound,
    linked_cliques_rho,
    spectral_radius,
)

REPORT_TOL = 1e-9

REPORT_KEYS = (
    "graph6",
    "n",
    "m",
    "min_degree",
    "vertex_connectivity",
    "rho",
    "algebraic_connectivity",
    "hong_bound",
    "rigidity",
    "rigid_condition_applicable",
    "rigid_condition_consistent",
    "global_condition_applicable",
    "global_condition_consistent",
    "rho_threshold_rigid",
    "rho_threshold_global",
)

RIGIDITY_KEYS = (
    "rank",
    "rigid",
    "minimally_rigid",
    "redundantly_rigid",
    "globally_rigid",
)


def _threshold(n: int, delta: int, links: int) -> Optional[float]:
    a = delta + 1
    if not 1 <= a <= n - 1:
        return None
    if links > min(a, n - a):
        return None
    return linked_cliques_rho(n, a, links)


def _isomorphic_to_family(g: Graph, links: int) -> bool:
    delta = g.min_degree()
    ref = linked_cliques(g.n, delta + 1, links)
    if g.m != ref.m or sorted(g.degrees()) != sorted(ref.degrees()):
        return False
    return canonical_form(g) == canonical_form(ref)


def analyze_graph(g: Graph, graph6: Optional[str] = None,
                  tol: float = REPORT_TOL) -> dict:
    """Full per-graph report with threshold-condition consistency flags.

    The two flag pairs encode: whenever connectivity, minimum degree,
    order, and spectral radius clear the stated thresholds, the graph must
    be (globally) rigid or be the matching two-clique extremal graph; a
    False `*_consistent` field marks a counterexample.
    """
    if g.n < 1:
        raise ValueError("reports need at least 1 vertex")
    n, m = g.n, g.m
    delta = g.min_degree()
    kappa = vertex_connectivity(g) if n >= 2 else 0
    rho = spectral_radius(g)
    mu = algebraic_connectivity(g) if n >= 2 else None
    hb = hong_bound(n, m, delta) if delta >= 1 else None
    verdict = rigidity_verdict(g)
    thr_r = _threshold(n, delta, 2)
    thr_g = _threshold(n, delta, 3)

    app_r = kappa >= 2 and delta >= 6 and n >= 2 * delta + 4
    cons_r = True
    if app_r and thr_r is not None and rho >= thr_r - tol:
        cons_r = verdict.rigid or _isomorphic_to_family(g, 2)

    app_g = kappa >= 3 and delta >= 6 and n >= 2 * delta + 4
    cons_g = True
    if app_g and thr_g is not None and rho >= thr_g - tol:
        cons_g = verdict.globally_rigid or _isomorphic_to_family(g, 3)

    return {
        "graph6": graph6 if graph6 is not None else write_graph6(g),
        "n": n,
        "m": m,
        "min_degree": delta,
        "vertex_connectivity": kappa,
        "rho": rho,
        "algebraic_connectivity": mu,
        "hong_bound": hb,
        "rigidity": verdict.as_dict(),
        "rigid_condition_applicable": app_r,
        "rigid_condition_consistent": cons_r,
        "global_condition_applicable": app_g,
        "global_condition_consistent": cons_g,
        "rho_threshold_rigid": thr_r,
        "rho_threshold_global": thr_g,
    }


def report_is_consistent(report: dict) -> bool:
    return bool(
        report["rigid_condition_consistent"]
        and report["global_condition_consistent"]
    )


# -- deterministic serialisation ------------------------------------------


def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"non-finite value in report: {x}")
    if x == 0.0:
        return "0"
    return format(x, ".12g")


def _emit(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_fmt_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(k)))
            out.append(":")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(",")
            _emit(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")


def json_stable(obj) -> str:
    """Compact JSON with insertion-order keys and floats at 12 significant
    digits, so equal reports serialise to identical bytes."""
    out: list[str] = []
    _emit(obj, out)
    return "".join(out)


def _flatten(report: dict) -> dict:
    flat = {}
    for k in REPORT_KEYS:
        v = report[k]
        if k == "rigidity":
            for rk in RIGIDITY_KEYS:
                flat[f"rigidity_{rk}"] = v[rk]
        else:
            flat[k] = v
    return flat


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if v is True:
        return "true"
    if v is False:
        return "false"
    if isinstance(v, float):
        return _fmt_float(v)
    return str(v)


def reports_to_csv(reports: Sequence[dict]) -> str:
    """CSV with a fixed flattened column order matching the JSON keys."""
    import csv
    import io

    cols = []
    for k in REPORT_KEYS:
        if k == "rigidity":
            cols.extend(f"rigidity_{rk}" for rk in RIGIDITY_KEYS)
        else:
            cols.append(k)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in reports:
        flat = _flatten(r)
        w.writerow([_csv_cell(flat[c]) for c in cols])
    return buf.getvalue()


# -- corpus analysis ------------------------------------------------------


def _analyze_payload(payload: tuple[int, str, float]):
    lineno, text, tol = payload
    try:
        g = parse_graph6(text)
        if g.n < 1:
            raise Graph6Error("empty graph not supported in reports")
        return lineno, analyze_graph(g, graph6=text, tol=tol), None
    except (Graph6Error, ValueError) as exc:
        return lineno, None, f"line {lineno}: {exc}"


def analyze_lines(
    lines: Iterable[str], tol: float = REPORT_TOL, jobs: int = 1
) -> tuple[list[dict], list[str]]:
    """Analyze a graph6 corpus, one graph per nonblank line.

    Returns (reports in input order, error messages carrying line numbers).
    """
    payloads = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text:
            payloads.append((lineno, text, tol))
    reports: list[dict] = []
    errors: list[str] = []
    if jobs <= 1 or len(payloads) < 2:
        results = map(_analyze_payload, payloads)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        chunk = max(1, len(payloads) // (4 * jobs))
        results = pool.map(_analyze_payload, payloads, chunksize=chunk)
    for _, report, err in results:
        if err is not None:
            errors.append(err)
        else:
            reports.append(report)
    return reports, errors


# -- sweep drivers --------------------------------------------------------


def laman_extremal_report(nmin: int, nmax: int) -> dict:
    """Enumerate minimally rigid graphs per order and compare the maximum
    spectral radius with the hub-pair closed form (1 + sqrt(8n-15))/2."""
    if not 3 <= nmin <= nmax <= 9:
        raise ValueError(f"need 3 <= nmin <= nmax <= 9, got {(nmin, nmax)}")
    rows = []
    ok = True
    for n in range(nmin, nmax + 1):
        graphs = enumerate_minimally_rigid(n)
        rhos = [spectral_radius(g) for g in graphs]
        best = max(range(len(graphs)), key=rhos.__getitem__)
        expected = complete_split_rho(n)
        near = [i for i, r in enumerate(rhos) if r > rhos[best] - REPORT_TOL]
        unique = len(near) == 1
        matches = canonical_form(graphs[best]) == canonical_form(
            complete_split_graph(n)
        )
        closed_ok = abs(rhos[best] - expected) <= REPORT_TOL
        row_ok = unique and matches and closed_ok
        ok = ok and row_ok
        rows.append(
            {
                "n": n,
                "count": len(graphs),
                "max_rho": rhos[best],
                "expected_rho": expected,
                "argmax_graph6": write_graph6(graphs[best]),
                "argmax_is_hub_pair": matches,
                "unique_argmax": unique,
                "ok": row_ok,
            }
        )
    return {"job": "laman-extremal", "nmin": nmin, "nmax": nmax,
            "rows": rows, "ok": ok}


def family_sweep_report(links: int, amin: int, amax: int, nmax: int) -> dict:
    """Sweep the two-clique family: closed-form radius vs eigensolver, and
    strict decrease in the small-clique size at fixed order."""
    if links < 2:
        raise ValueError(f"links must be >= 2, got {links}")
    if amin < links + 1:
        raise ValueError(f"amin must be >= links + 1, got {amin}")
    if amax < amin:
        raise ValueError(f"need amax >= amin, got {(amin, amax)}")
    if nmax < 2 * amin + 2:
        raise ValueError(f"nmax must be >= {2 * amin + 2}, got {nmax}")
    rho = {}
    max_dev = 0.0
    cells = 0
    for a in range(amin, amax + 1):
        for n in range(2 * a + 2, nmax + 1):
            r = linked_cliques_rho(n, a, links)
            e = spectral_radius(linked_cliques(n, a, links))
            rho[(a, n)] = r
            max_dev = max(max_dev, abs(r - e))
            cells += 1
    min_margin = math.inf
    pairs = 0
    for (a, n), r in rho.items():
        nxt = rho.get((a + 1, n))
        if nxt is not None:
            min_margin = min(min_margin, r - nxt)
            pairs += 1
    agreement_ok = max_dev <= 1e-8
    monotone_ok = pairs > 0 and min_margin > REPORT_TOL
    return {
        "job": "family-sweep",
        "links": links,
        "amin": amin,
        "amax": amax,
        "nmax": nmax,
        "cells": cells,
        "max_closed_form_deviation": max_dev,
        "comparable_pairs": pairs,
        "min_decrease_margin": (None if math.isinf(min_margin) else min_margin),
        "agreement_ok": agreement_ok,
        "monotone_ok": monotone_ok,
        "ok": agreement_ok and monotone_ok,
    }


def extremal_family_report(delta: int, nmax: int, seed: int = 0) -> dict:
    """Structural audit of the two-clique extremal graphs for a minimum
    degree: connectivity, rank (combinatorial and numeric), and the
    packing-inequality witness for the 2-link member."""
    if delta < 6:
        raise ValueError(f"delta must be >= 6, got {delta}")
    if nmax < 2 * delta + 4:
        raise ValueError(f"nmax must be >= {2 * delta + 4}, got {nmax}")
    rows = []
    ok = True
    a = delta + 1
    for n in range(2 * delta + 4, nmax + 1):
        b2 = linked_cliques(n, a, 2)
        b3 = linked_cliques(n, a, 3)
        witness = packing_violation_search(b2, 1, zmax=0, mode="structured")
        wit_ok = (
            witness is not None
            and not witness.z
            and len(witness.parts) == 2
            and {frozenset(p) for p in witness.parts}
            == {frozenset(range(a)), frozenset(range(a, n))}
            and not packing_condition_holds(b2, 1, witness)
        )
        pl = random_placement(n, seed)
        checks = {
            "b2_min_degree": b2.min_degree() == delta,
            "b2_connectivity": vertex_connectivity(b2) == 2,
            "b2_rank": pebble_rank(b2) == 2 * n - 4,
            "b2_numeric_rank": numeric_rank(b2, pl) == 2 * n - 4,
            "b2_witness": wit_ok,
            "b3_min_degree": b3.min_degree() == delta,
            "b3_connectivity": vertex_connectivity(b3) == 3,
            "b3_rank": pebble_rank(b3) == 2 * n - 3,
            "b3_numeric_rank": numeric_rank(b3, pl) == 2 * n - 3,
            "b3_no_witness": packing_violation_search(
                b3, 1, zmax=0, mode="structured") is None,
        }
        checks["b3_rigid_not_redundant"] = not is_redundantly_rigid(b3)
        checks["b3_not_globally_rigid"] = not is_globally_rigid(b3)
        row_ok = all(checks.values())
        ok = ok and row_ok
        rows.append({"n": n, **checks, "ok": row_ok})
    return {"job": "extremal", "delta": delta, "nmax": nmax, "seed": seed,
            "rows": rows, "ok": ok}
