from . import alexander, cable, hfk, homology, table, torus, validate, verify

COMMANDS = [validate, homology, hfk, torus, cable, alexander, verify, table]

__all__ = ["COMMANDS"]
