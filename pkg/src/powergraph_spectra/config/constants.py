"""Constants for the power graph spectra toolkit."""

from fractions import Fraction

# Numeric root isolation
DEFAULT_TOLERANCE = Fraction(1, 10**9)  # absolute width of certified root intervals
DEFAULT_MAX_BISECTION_STEPS = 200

# Oracle
DEFAULT_FULL_CHARPOLY_MAX_ORDER = 64  # above this, charpolys go through twin quotients

# Group axiom checks
DEFAULT_EXHAUSTIVE_AXIOM_LIMIT = 200
DEFAULT_AXIOM_SAMPLE_SIZE = 20_000
DEFAULT_AXIOM_SAMPLE_SEED = 0

# Scan
DEFAULT_SCAN_MAX_N = 200

# Parameter names accepted per theorem family
THEOREM_PARAMS: dict[str, tuple[str, ...]] = {
    "ZpZp2": ("p",),
    "ElemAb": ("p",),
    "Z2sdZ4": (),
    "ZrFpq": ("r", "p", "q"),
    "Fpqr": ("p", "q", "r"),
    "Gi5": ("p", "q", "r"),
    "ProperCyclic": ("n",),
    "ProperDicyclic": ("n",),
}

# DOT palette for class labels (cycled)
DOT_PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def palette_color(index: int) -> str:
    """Get the DOT color for a class index.

    Args:
        index: Zero-based class index

    Returns:
        Hex color string
    """
    return DOT_PALETTE[index % len(DOT_PALETTE)]
