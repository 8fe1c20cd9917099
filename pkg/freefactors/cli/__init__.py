"""Command-line surface; the entry point lives in freefactors.cli.main."""
