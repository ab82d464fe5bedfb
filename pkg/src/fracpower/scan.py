"""Batch search for graphs where ``χ(G^(m/n))`` exceeds ``ω(G^(m/n))``.

Every work item ``(graph, m, n)`` is colored by the best available
construction, the coloring is re-validated on the materialized power, and
for ``n`` in the window ``m+1..2m+1`` the exact chromatic number is also
computed (larger ``n`` follow from that window by lifting).
"""

from __future__ import annotations

import csv
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import Iterable

from .colorbuild import FALLBACK, ConstructionError, color_fractional, verify
from .formulas import omega_fractional
from .graph import Graph, is_connected, max_degree
from .io import ParseError, iter_graph6, parse_graph6, to_graph6
from .oracles import OracleUnknown, chi_exact
from .power import fractional_power

SCHEMA = "fracpower.scan-report"
SCHEMA_VERSION = 1
STATUSES = ("pass", "fail", "skipped", "unknown")
DEFAULT_TIME_LIMIT = 10.0


@dataclass
class ScanRecord:
    graph: str
    vertices: int
    edges: int
    delta: int
    m: int
    n: int
    omega_formula: int | None = None
    method: str | None = None
    colors: int | None = None
    proper: bool | None = None
    exact_chi: int | None = None
    status: str = "skipped"
    open_case: bool = False
    note: str = ""
    elapsed_ms: float = 0.0

    def sort_key(self) -> tuple:
        return (self.graph, self.m, self.n)


def scan_pairs(m_max: int, n_max: int) -> list[tuple[int, int]]:
    return [(m, n) for m in range(2, m_max + 1) for n in range(m + 1, n_max + 1)]


def scan_item(g6: str, m: int, n: int, time_limit: float | None = DEFAULT_TIME_LIMIT) -> ScanRecord:
    t0 = time.perf_counter()
    g = parse_graph6(g6)
    delta = max_degree(g)
    rec = ScanRecord(graph=g6, vertices=g.vertex_count, edges=g.edge_count, delta=delta, m=m, n=n)
    if not is_connected(g):
        rec.note = "graph is disconnected"
    elif delta < 3:
        rec.note = "max degree below 3"
    elif not 1 < m < n:
        rec.note = "needs 1 < m < n"
    else:
        _evaluate(g, rec, time_limit)
    rec.elapsed_ms = round((time.perf_counter() - t0) * 1000.0, 3)
    return rec


def _evaluate(g: Graph, rec: ScanRecord, time_limit: float | None) -> None:
    m, n = rec.m, rec.n
    rec.omega_formula = omega_fractional(rec.delta, m, n)
    pg = fractional_power(g, m, n)
    try:
        coloring, method = color_fractional(g, m, n, time_limit=time_limit)
    except OracleUnknown as exc:
        rec.method = FALLBACK
        rec.open_case = True
        rec.status = "unknown"
        rec.note = f"exact coloring gave up: {exc.reason}"
        return
    except ConstructionError as exc:
        rec.status = "fail"
        rec.note = f"construction failed: {exc}"
        return
    rec.method = method
    rec.open_case = method == FALLBACK
    rec.proper = verify(g, coloring, pg) is None
    rec.colors = len(coloring.used_colors())
    if method == FALLBACK:
        rec.exact_chi = rec.colors
    elif n <= 2 * m + 1:
        try:
            rec.exact_chi = chi_exact(pg.materialized, time_limit)
        except OracleUnknown as exc:
            rec.note = f"exact chi unknown: {exc.reason}"
    ok = rec.proper and rec.colors == rec.omega_formula
    ok = ok and (rec.exact_chi is None or rec.exact_chi == rec.omega_formula)
    rec.status = "pass" if ok else "fail"
    if not ok and not rec.note:
        rec.note = "candidate counterexample" if rec.proper else "improper construction"


def _run_item(args: tuple[str, int, int, float | None]) -> ScanRecord:
    return scan_item(*args)


def scan_conjecture(
    corpus: Iterable[str | Graph],
    m_max: int,
    n_max: int,
    time_limit: float | None = DEFAULT_TIME_LIMIT,
    jobs: int = 1,
) -> tuple[list[ScanRecord], list[dict]]:
    """Scan every corpus graph over ``1 < m <= m_max``, ``m < n <= n_max``.

    ``corpus`` holds graph6 lines or :class:`Graph` objects. Returns the
    records (sorted by graph, m, n) and a list of per-line parse errors.
    """
    ids = []
    errors = []
    lines = []
    graphs = []
    for item in corpus:
        if isinstance(item, Graph):
            graphs.append(item)
        else:
            lines.append(item)
    for lineno, text, parsed in iter_graph6(lines):
        if isinstance(parsed, ParseError):
            errors.append({"line": lineno, "text": text, "error": str(parsed)})
        else:
            graphs.append(parsed)
    ids = sorted({to_graph6(g) for g in graphs})
    work = [(g6, m, n, time_limit) for g6 in ids for m, n in scan_pairs(m_max, n_max)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_item, work, chunksize=max(1, len(work) // (8 * jobs))))
    else:
        records = [_run_item(w) for w in work]
    records.sort(key=ScanRecord.sort_key)
    return records, errors


def summarize(records: Iterable[ScanRecord]) -> dict[str, int]:
    counts = {s: 0 for s in STATUSES}
    total = 0
    for r in records:
        counts[r.status] += 1
        total += 1
    counts["total"] = total
    return counts


def report_dict(records: list[ScanRecord], errors: list[dict] | None = None, parameters: dict | None = None) -> dict:
    ordered = sorted(records, key=ScanRecord.sort_key)
    for r in ordered:
        if r.status == "pass" and not r.proper:
            raise ValueError(f"pass record without a proper construction: {r.graph} m={r.m} n={r.n}")
    return {
        "schema": SCHEMA,
        "schema_version": SCHEMA_VERSION,
        "parameters": parameters or {},
        "summary": summarize(ordered),
        "records": [asdict(r) for r in ordered],
        "parse_errors": list(errors or []),
    }


def write_report(records: list[ScanRecord], json_path, csv_path=None, errors=None, parameters=None) -> dict:
    data = report_dict(records, errors, parameters)
    with open(json_path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")
    if csv_path is not None:
        names = [f.name for f in fields(ScanRecord)]
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=names)
            writer.writeheader()
            for row in data["records"]:
                writer.writerow(row)
    return data


def read_report(json_path) -> tuple[dict, list[ScanRecord]]:
    with open(json_path, encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("schema") != SCHEMA:
        raise ValueError("not a scan report")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report version {data.get('schema_version')}")
    return data, [ScanRecord(**row) for row in data["records"]]
