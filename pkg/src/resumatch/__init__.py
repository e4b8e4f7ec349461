"""Resume parsing and explainable candidate-job matching."""

__version__ = "0.1.0"

PIPELINE_VERSION = __version__
