"""English to Yorùbá verb-phrase translator."""

__version__ = "0.1.0"
