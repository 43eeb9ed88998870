"""Main entry point for the lspac package."""

from .cli import cli

if __name__ == "__main__":
    cli()
