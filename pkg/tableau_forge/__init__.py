"""tableau-forge: exact counts of skew and shifted tableaux and the q-series identities behind them."""

__version__ = "0.1.0"
