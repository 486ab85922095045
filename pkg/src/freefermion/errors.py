"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed Hamiltonian input (schema, parsing, validation)."""


class ObstructionError(Exception):
    """Raised when a frustration graph is certified not to be a line graph.

    Carries the minimal forbidden-subgraph witness.
    """

    def __init__(self, witness, message="frustration graph is not a line graph"):
        super().__init__(message)
        self.witness = witness


class ResourceCapError(Exception):
    """A configured enumeration cap (sectors or states) would be exceeded."""


class OracleSizeError(ValueError):
    """Dense diagonalization requested beyond the supported qubit count."""
