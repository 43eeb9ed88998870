"""Exact arithmetic for the spectrum of perfect additive complements."""

__version__ = "0.1.0"


def main() -> None:
    """Main entry point for the lspac command line."""
    from .cli import cli

    cli()
