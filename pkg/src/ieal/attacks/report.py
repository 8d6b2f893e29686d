from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from ..keyspace import CanonicalKey

RECORD_FIELDS = ("attack", "key_T", "key_S", "queries", "cycle_n", "candidates", "elapsed_ms")


@dataclass
class AttackReport:
    """Outcome of one attack.

    ``evidence`` holds attack-specific details; the keys listed in
    ``RECORD_FIELDS`` are lifted into :meth:`to_record` when present.
    """

    attack: str
    recovered_key: CanonicalKey | None = None
    recovered_plaintext: np.ndarray | None = None
    evidence: dict[str, Any] = field(default_factory=dict)
    decryptor: Callable[[np.ndarray], np.ndarray] | None = field(default=None, repr=False)

    def to_record(self) -> dict[str, str]:
        rec = {"attack": self.attack}
        if self.recovered_key is not None:
            rec["key_T"] = str(self.recovered_key.T)
            rec["key_S"] = str(self.recovered_key.S)
        for name in RECORD_FIELDS[3:]:
            if name in self.evidence:
                rec[name] = _fmt(self.evidence[name])
        return rec

    def to_kv(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in self.to_record().items())

    def to_text(self) -> str:
        lines = [f"[{self.attack}]"]
        if self.recovered_key is not None:
            lines.append(f"recovered key: {self.recovered_key}")
        for k, v in self.evidence.items():
            lines.append(f"  {k}: {_fmt(v)}")
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, (list, tuple, set, frozenset)):
        return ",".join(str(x) for x in (sorted(v) if isinstance(v, (set, frozenset)) else v))
    if isinstance(v, float):
        return f"{v:.3f}"
    return str(v)
