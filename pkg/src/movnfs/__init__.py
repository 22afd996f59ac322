"""movnfs: pairing-reduction cryptanalysis toolkit.

MNT curve search and validation, Tate-pairing MOV/FR reduction of curve
discrete logs into F_{p^n}, NFS polynomial selection with quality scoring,
and a toy-scale NFS-DL solver with Schirokauer maps and individual
logarithm descent.
"""

__version__ = "0.1.0"
