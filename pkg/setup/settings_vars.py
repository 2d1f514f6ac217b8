""" Settings variables for Derived Graph Energy. """

# Define dictionary items
fields = {
    # Tolerances
    'tol': {'type': 'float', 'value': 1e-9},
    'equality_tol': {'type': 'float', 'value': 1e-8},
    'consistency_tol': {'type': 'float', 'value': 1e-7},
    'map_tol': {'type': 'float', 'value': 1e-8},

    # Eigensolver variables
    'eig_tol': {'type': 'float', 'value': 1e-12},
    'clamp_tol': {'type': 'float', 'value': 1e-9},
    'max_sweeps': {'type': 'int', 'value': 100},

    # Generation variables
    'max_resamples': {'type': 'int', 'value': 1000},
    'seed': {'type': 'int', 'value': 0},

    # Report variables
    'format': {'type': 'str', 'value': 'json'},
    'precision': {'type': 'int', 'value': 12},

    # Sweep variables
    'workers': {'type': 'int', 'value': 1},
}
