"""Small graphs and groups with hand-checked spectra."""

# Distance Laplacian spectra as {root: multiplicity}
DL_SPECTRUM_P_Z6 = {0: 1, 6: 3, 7: 1, 9: 1}
DL_SPECTRUM_P_Z8 = {0: 1, 8: 7}
DL_SPECTRUM_P_D10 = {0: 1, 10: 1, 15: 3, 19: 5}
DL_SPECTRUM_P_D12 = {0: 1, 12: 1, 18: 2, 19: 1, 21: 1, 23: 6}
DL_SPECTRUM_P_Q2 = {0: 1, 8: 2, 12: 3, 14: 2}
DL_SPECTRUM_P_Z2SDZ4 = {0: 1, 8: 1, 12: 2, 15: 4}
DL_SPECTRUM_STAR_3 = {0: 1, 4: 1, 7: 2}
DL_SPECTRUM_PROPER_Z6 = {0: 1, 5: 2, 6: 1, 8: 1}
DL_SPECTRUM_PROPER_Q2 = {0: 1, 7: 1, 11: 3, 13: 2}

# Laplacian spectra
L_SPECTRUM_P_Z6 = {0: 1, 3: 1, 5: 1, 6: 3}
L_SPECTRUM_P_ZPZP2_2 = {0: 1, 1: 2, 2: 1, 4: 2, 6: 1, 8: 1}
L_SPECTRUM_STAR_3 = {0: 1, 1: 2, 4: 1}

# Element orders of Z_12 by index
Z12_ELEMENT_ORDERS = (1, 12, 6, 4, 3, 12, 2, 12, 3, 4, 6, 12)

# Order census {order: count}
ORDER_CENSUS = {
    "dihedral:4": {1: 1, 2: 5, 4: 2},
    "dicyclic:2": {1: 1, 2: 1, 4: 6},
    "frobenius:7,3": {1: 1, 3: 14, 7: 6},
    "zpzp2:2": {1: 1, 2: 3, 4: 4},
    "elemab3:2": {1: 1, 2: 7},
    "heis:3": {1: 1, 3: 26},
    "cyclic:3 x cyclic:9": {1: 1, 3: 8, 9: 18},
}

# Group specs whose power graph has diameter at most two
SMALL_GROUPS = (
    "cyclic:6",
    "cyclic:12",
    "dihedral:5",
    "dihedral:6",
    "dicyclic:2",
    "frobenius:7,3",
    "zpzp2:2",
    "z2sdz4",
)
