"""
Registry and cross-checks
=========================

The shipped table is re-derived on load; ``validate_all`` compares it
against the enumeration and every stated list.
"""
import io

from fano95 import WeightSystem, classify, family, load_registry, validate_all
from fano95.registry import export_tsv

records = load_registry()
print(family(36, records).to_json())

report = classify(WeightSystem((1, 1, 4, 6, 7), 18))
print(report.n, report.ok, report.derived["presentation"])

bad = [r for r in validate_all(records) if not r.ok]
print("mismatches:", len(bad))

buf = io.StringIO()
export_tsv(records[:3], buf)
print(buf.getvalue())
