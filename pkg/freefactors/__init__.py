"""freefactors: Stallings core graphs of free groups and apartments of the free factor complexes."""

__version__ = "0.1.0"
