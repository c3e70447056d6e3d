"""Expected clone analysis for every standard-table base (hand-derived).

Each row: base connective names -> (subset flags, contains flags,
(ext_case, cred_case, skep_case), (ext_engine, cred_engine, skep_engine)).

The R0/R1 rows use the textbook bases {and, xor} and {or, eq}: every
{and, nimp}-term is bounded above by one of its variables (and dually
every {or, imp}-term is bounded below by one), so those sets generate
only S1 resp. S0 and cannot be bases of R0/R1.
"""

GOLDEN_ROWS = {
    "BF": (
        ("and", "not"),
        set(),
        {"S1", "D", "S11", "S00", "S10", "D2", "N2", "L0", "L2", "V2", "E2", "I2"},
        ("SigmaP2", "SigmaP2", "PiP2"),
        ("generic", "generic", "generic"),
    ),
    "R0": (
        ("and", "xor"),
        set(),
        {"S1", "S11", "S00", "S10", "D2", "L0", "L2", "V2", "E2", "I2"},
        ("SigmaP2", "SigmaP2", "PiP2"),
        ("generic", "generic", "generic"),
    ),
    "R1": (
        ("or", "eq"),
        {"R1"},
        {"S00", "S10", "D2", "L2", "V2", "E2", "I2"},
        ("trivial", "coNP", "coNP"),
        ("trivial_yes", "r1_unique", "r1_unique"),
    ),
    "M": (
        ("or", "and", "bot", "top"),
        {"M"},
        {"S11", "S00", "S10", "D2", "V2", "E2", "I2"},
        ("DeltaP2", "DeltaP2", "DeltaP2"),
        ("monotone_iterative", "monotone_iterative", "monotone_iterative"),
    ),
    "S0": (
        ("imp",),
        {"R1"},
        {"S00", "V2", "I2"},
        ("trivial", "coNP", "coNP"),
        ("trivial_yes", "r1_unique", "r1_unique"),
    ),
    "S1": (
        ("nimp",),
        set(),
        {"S1", "S11", "S10", "E2", "I2"},
        ("SigmaP2", "SigmaP2", "PiP2"),
        ("generic", "generic", "generic"),
    ),
    "S00": (
        ("s00",),
        {"R1", "M"},
        {"S00", "V2", "I2"},
        ("trivial", "coNP", "coNP"),
        ("trivial_yes", "r1_unique", "r1_unique"),
    ),
    "S10": (
        ("s10",),
        {"R1", "M"},
        {"S10", "E2", "I2"},
        ("trivial", "coNP", "coNP"),
        ("trivial_yes", "r1_unique", "r1_unique"),
    ),
    "S11": (
        ("s10", "bot"),
        {"M"},
        {"S11", "S10", "E2", "I2"},
        ("DeltaP2", "DeltaP2", "DeltaP2"),
        ("monotone_iterative", "monotone_iterative", "monotone_iterative"),
    ),
    "D": (
        ("dbase",),
        set(),
        {"D", "D2", "N2", "L2", "I2"},
        ("SigmaP2", "SigmaP2", "PiP2"),
        ("generic", "generic", "generic"),
    ),
    "D2": (
        ("maj",),
        {"R1", "M"},
        {"D2", "I2"},
        ("trivial", "coNP", "coNP"),
        ("trivial_yes", "r1_unique", "r1_unique"),
    ),
    "L": (
        ("xor", "top"),
        {"L"},
        {"N2", "L0", "L2", "I2"},
        ("NP", "NP", "coNP"),
        ("affine_guess", "affine_guess", "affine_guess"),
    ),
    "L0": (
        ("xor",),
        {"L"},
        {"L0", "L2", "I2"},
        ("NP", "NP", "coNP"),
        ("affine_guess", "affine_guess", "affine_guess"),
    ),
    "L1": (
        ("eq",),
        {"R1", "L", "L1"},
        {"L2", "I2"},
        ("trivial", "P", "P"),
        ("trivial_yes", "poly_fragment", "poly_fragment"),
    ),
    "L2": (
        ("xor3",),
        {"R1", "L", "L1"},
        {"L2", "I2"},
        ("trivial", "P", "P"),
        ("trivial_yes", "poly_fragment", "poly_fragment"),
    ),
    "L3": (
        ("xor3", "not"),
        {"L"},
        {"N2", "L2", "I2"},
        ("NP", "NP", "coNP"),
        ("affine_guess", "affine_guess", "affine_guess"),
    ),
    "V": (
        ("or", "bot", "top"),
        {"M", "V"},
        {"V2", "I2"},
        ("P", "P", "P"),
        ("poly_fragment", "poly_fragment", "poly_fragment"),
    ),
    "V2": (
        ("or",),
        {"R1", "M", "V"},
        {"V2", "I2"},
        ("trivial", "P", "P"),
        ("trivial_yes", "poly_fragment", "poly_fragment"),
    ),
    "E": (
        ("and", "bot", "top"),
        {"M", "E"},
        {"E2", "I2"},
        ("P", "P", "P"),
        ("poly_fragment", "poly_fragment", "poly_fragment"),
    ),
    "E2": (
        ("and",),
        {"R1", "M", "E"},
        {"E2", "I2"},
        ("trivial", "P", "P"),
        ("trivial_yes", "poly_fragment", "poly_fragment"),
    ),
    "N": (
        ("not", "bot", "top"),
        {"L", "N"},
        {"N2", "I2"},
        ("NP", "NP", "coNP"),
        ("affine_guess", "affine_guess", "affine_guess"),
    ),
    "N2": (
        ("not",),
        {"L", "N"},
        {"N2", "I2"},
        ("NP", "NP", "coNP"),
        ("affine_guess", "affine_guess", "affine_guess"),
    ),
    "I": (
        ("id", "bot", "top"),
        {"M", "L", "V", "E", "N", "I"},
        {"I2"},
        ("NL", "NL", "NL"),
        ("reachability", "reachability", "reachability"),
    ),
    "I2": (
        ("id",),
        {"R1", "M", "L", "L1", "V", "E", "N", "I"},
        {"I2"},
        ("trivial", "NL", "NL"),
        ("trivial_yes", "reachability", "reachability"),
    ),
}
