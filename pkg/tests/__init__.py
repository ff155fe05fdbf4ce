"""pyqglass test suite."""
