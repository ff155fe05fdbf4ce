"""pyqglass - entanglement dynamics of disordered and long-range Ising spin systems."""

__version__ = "0.1.0"
