"""IEAL image cipher (Arnold scrambling + Lucas masking) and attacks on it."""
from .cipher import (
    LUCAS_CYCLE, LUCAS_PERIOD, Key, arnold_step, decrypt, encrypt, keystream, mask,
    scramble, scramble_permutation, unscramble,
)
from .errors import AttackFailed, DomainError, IealError
from .keyspace import CanonicalKey, KeyspaceReport, canonicalize, is_weak_key, key_space_size, weak_key_probability
from .numbertheory import BoundCase, PeriodInfo, arnold_period, arnold_period_table, sequence_period_mod

__version__ = "0.1.0"
