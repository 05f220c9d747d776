"""Group axiom checks on multiplication tables."""

import random
from dataclasses import dataclass

from src.powergraph_spectra.config.settings import get_settings
from src.powergraph_spectra.core.exceptions import GroupAxiomError
from src.powergraph_spectra.models.group import FiniteGroup
from src.powergraph_spectra.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class AxiomCheckResult:
    """Outcome of an axiom check."""

    order: int
    exhaustive: bool
    triples_checked: int


def check_axioms(
    group: FiniteGroup,
    exhaustive_limit: int | None = None,
    sample_size: int | None = None,
    seed: int | None = None,
) -> AxiomCheckResult:
    """Verify closure, identity, inverses and associativity.

    Associativity is checked on every triple when the order is at most
    exhaustive_limit, otherwise on sample_size seeded random triples.

    Args:
        group: Group to check
        exhaustive_limit: Largest order checked exhaustively (default: EXHAUSTIVE_AXIOM_LIMIT)
        sample_size: Number of sampled triples above the limit (default: AXIOM_SAMPLE_SIZE)
        seed: Sampling seed (default: AXIOM_SAMPLE_SEED)

    Returns:
        Summary of what was checked

    Raises:
        GroupAxiomError: On the first violated axiom
    """
    settings = get_settings()
    if exhaustive_limit is None:
        exhaustive_limit = settings.exhaustive_axiom_limit
    if sample_size is None:
        sample_size = settings.axiom_sample_size
    if seed is None:
        seed = settings.axiom_sample_seed

    n = group.order
    table = group.table
    e = group.identity

    for a in range(n):
        if any(not 0 <= c < n for c in table[a]):
            raise GroupAxiomError(f"{group.name}: product of {a} leaves the element set")
        if table[a][e] != a or table[e][a] != a:
            raise GroupAxiomError(f"{group.name}: identity fails on element {a}")
        inv = group.inverse(a)
        if inv < 0 or table[inv][a] != e:
            raise GroupAxiomError(f"{group.name}: element {a} has no two-sided inverse")

    exhaustive = n <= exhaustive_limit
    if exhaustive:
        triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        count = n**3
    else:
        rng = random.Random(seed)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(sample_size)
        )
        count = sample_size

    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupAxiomError(f"{group.name}: associativity fails on ({a}, {b}, {c})")

    logger.debug("Group axioms verified", group=group.name, order=n, exhaustive=exhaustive)
    return AxiomCheckResult(order=n, exhaustive=exhaustive, triples_checked=count)
