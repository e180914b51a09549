import json
from typing import Any


def canonical_json(obj: Any) -> str:
    """Key-sorted, whitespace-free JSON used for golden comparisons."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
