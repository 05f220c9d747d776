"""Core enumerations for the power graph spectra toolkit."""

from enum import Enum


class GroupFamily(str, Enum):
    """Group families addressable through the group spec grammar."""

    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    DICYCLIC = "dicyclic"
    FROBENIUS = "frobenius"
    F_P_QR = "fpqr"
    G_I5 = "gi5"
    ZP_ZP2 = "zpzp2"
    ELEM_ABELIAN_P3 = "elemab3"
    ZP_SEMIDIRECT_ZP2 = "zpsdzp2"
    HEISENBERG = "heis"
    Z2_SEMIDIRECT_Z4 = "z2sdz4"  # alias of zpsdzp2:2


class StructureFamily(str, Enum):
    """Families with a displayed joined-union structure."""

    ZP_ZP2 = "zpzp2"
    ELEM_ABELIAN_P3 = "elemab3"
    Z2_SEMIDIRECT_Z4 = "z2sdz4"
    ZR_FPQ = "zrfpq"
    F_P_QR = "fpqr"
    G_I5 = "gi5"
    PROPER_CYCLIC = "proper-cyclic"
    PROPER_DICYCLIC = "proper-dicyclic"


class MatrixKind(str, Enum):
    """Graph matrix whose characteristic polynomial is computed."""

    A = "A"  # adjacency
    L = "L"  # Laplacian
    DL = "DL"  # distance Laplacian


class TwinKind(str, Enum):
    """Kind of twin class."""

    CLIQUE = "clique"  # N[u] = N[v]
    INDEPENDENT = "independent"  # N(u) = N(v)


class CharpolyMethod(str, Enum):
    """Strategy used for an exact characteristic polynomial."""

    FULL = "full"  # Berkowitz on the whole matrix
    REDUCED = "reduced"  # twin-class quotient plus linear factors
    AUTO = "auto"  # FULL up to the configured order, REDUCED above


class TheoremId(str, Enum):
    """Closed-form theorems and corollaries with an evaluator."""

    DL_ZPZP2 = "DL-ZpZp2"
    L_ZPZP2 = "L-ZpZp2"
    DL_ELEMAB = "DL-ElemAb"
    L_ELEMAB = "L-ElemAb"
    DL_Z2SDZ4 = "DL-Z2sdZ4"
    L_Z2SDZ4 = "L-Z2sdZ4"
    DL_ZRFPQ = "DL-ZrFpq"
    L_ZRFPQ = "L-ZrFpq"
    DL_FPQR_I = "DL-Fpqr-i"
    DL_FPQR_II = "DL-Fpqr-ii"
    L_FPQR_I = "L-Fpqr-i"
    L_FPQR_II = "L-Fpqr-ii"
    DL_GI5 = "DL-Gi5"
    L_GI5 = "L-Gi5"
    DL_PROPER_CYCLIC = "DL-ProperCyclic"
    DL_PROPER_DICYCLIC = "DL-ProperDicyclic"
    L_PROPER_DICYCLIC = "L-ProperDicyclic"


class Verdict(str, Enum):
    """Outcome of comparing a closed form with the oracle."""

    EQUAL = "EQUAL"  # stated product equals the oracle polynomial
    CANDIDATE_CONFIRMED = "CANDIDATE_CONFIRMED"  # an alternative form equals the oracle
    FACTORS_DIVIDE = "FACTORS_DIVIDE"  # every stated factor divides, product differs
    MISMATCH = "MISMATCH"  # some stated factor fails to divide


class NumberClass(str, Enum):
    """Classification of n used by the integrality scan."""

    PRIME_POWER = "prime power"
    TWO_PRIMES = "product of two distinct primes"
    OTHER = "other"


class ExportFormat(str, Enum):
    """Output formats."""

    DOT = "dot"
    JSON = "json"
    CSV = "csv"
    LATEX = "latex"
