"""fam: a feature-model workbench with interchangeable language shapes."""

__version__ = "0.1.0"
