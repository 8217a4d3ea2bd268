"""
Catalog sweeps: every catalog group paired with each of its normal subgroups.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence

from ccsgraph_lib.exceptions import ResourceCapExceeded
from ccsgraph_lib.schemas import PairRecord, SearchHit, SuiteOptions, SuiteReport
from ccsgraph_lib.theorems import assemble_report, evaluate_pair_record, normal_pairs, search_pairs
from loguru import logger
from tqdm import tqdm

from .catalog import CatalogEntry, build_catalog_entry


def _failed_entry(entry: CatalogEntry, error: Exception) -> PairRecord:
    order = entry.expected_order or 0
    return PairRecord(
        group_name=entry.name,
        subgroup_descriptor="*",
        group_order=order,
        normal_order=0,
        error=str(error),
    )


def sweep_entry(entry: CatalogEntry, options: SuiteOptions) -> List[PairRecord]:
    """Records for every normal subgroup of one catalog group."""
    try:
        group = build_catalog_entry(entry)
        pairs = normal_pairs(group, entry.name)
    except ResourceCapExceeded as e:
        logger.error("{}: {}", entry.name, e)
        return [_failed_entry(entry, e)]
    logger.info("{}: order {}, {} normal subgroups", entry.name, group.order, len(pairs))
    return [evaluate_pair_record(pair, options) for pair in pairs]


def _progress(items: Iterable, enabled: bool, desc: str, total: Optional[int] = None) -> Iterable:
    return tqdm(items, desc=desc, unit="group", total=total) if enabled else items


def run_sweep(
    entries: Sequence[CatalogEntry],
    options: SuiteOptions,
    max_order: Optional[int] = None,
    workers: int = 1,
    show_progress: bool = False,
) -> SuiteReport:
    """Run the suite over the catalog; the report is sorted, so worker count does not matter."""
    records: List[PairRecord] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(sweep_entry, entries, [options] * len(entries))
            for batch in _progress(results, show_progress, "verify", total=len(entries)):
                records.extend(batch)
    else:
        for entry in _progress(entries, show_progress, "verify"):
            records.extend(sweep_entry(entry, options))
    return assemble_report(records, options, max_order=max_order)


def search_entries(entries: Sequence[CatalogEntry], show_progress: bool = False) -> List[SearchHit]:
    hits: List[SearchHit] = []
    for entry in _progress(entries, show_progress, "search"):
        try:
            group = build_catalog_entry(entry)
            pairs = normal_pairs(group, entry.name)
        except ResourceCapExceeded as e:
            logger.error("{}: {}", entry.name, e)
            continue
        hits.extend(search_pairs(pairs))
    hits.sort(key=lambda h: (h.group_order, h.group_name, h.normal_order, h.subgroup_descriptor))
    return hits
